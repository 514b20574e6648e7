#include "lpbilliards/newton.hpp"

#include <cmath>

namespace lpb {

namespace {

struct Spectral {
  Eigen::VectorXd eigenvalues;  // ascending
  Eigen::MatrixXd eigenvectors;
  double abs_min = 0.0;
  double abs_max = 0.0;
  bool singular = false;
};

Spectral decompose(const Eigen::MatrixXd& hessian) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(hessian);
  if (solver.info() != Eigen::Success) {
    fail(ErrorCode::Classification, "Hessian eigendecomposition failed");
  }
  Spectral s;
  s.eigenvalues = solver.eigenvalues();
  s.eigenvectors = solver.eigenvectors();
  s.abs_min = s.eigenvalues.cwiseAbs().minCoeff();
  s.abs_max = s.eigenvalues.cwiseAbs().maxCoeff();
  // !(cond <= bound) also catches NaN and a zero abs_min.
  const double cond = s.abs_max / s.abs_min;
  s.singular = !(cond <= kSingularCondition);
  return s;
}

}  // namespace

void validate_config(const NewtonConfig& config) {
  if (config.max_steps < 1) {
    fail(ErrorCode::InvalidArgument, "max_steps must be >= 1");
  }
  if (!(config.step_tol > 0.0)) {
    fail(ErrorCode::InvalidArgument, "step_tol must be > 0");
  }
  if (!(config.threshold > 0.0) || !(config.threshold < kAlphaTheoremBound)) {
    fail(ErrorCode::InvalidArgument,
         "threshold must lie in (0, sqrt(3) - 1)");
  }
}

Certificate certificate_from(const Eigen::VectorXd& gradient,
                             const Eigen::MatrixXd& hessian,
                             double threshold) {
  Certificate cert;
  cert.threshold = threshold;
  const Spectral s = decompose(hessian);
  if (s.singular) {
    // +infinity sentinel on all three quantities; never certified.
    return cert;
  }
  const Eigen::VectorXd scaled =
      (s.eigenvectors.transpose() * gradient).cwiseQuotient(s.eigenvalues);
  cert.beta = scaled.norm();  // orthogonal factor preserves the norm
  cert.gamma_s = 0.5 * s.abs_max / s.abs_min;
  cert.alpha = cert.beta * cert.gamma_s;
  cert.certified = cert.alpha < threshold;
  return cert;
}

NewtonStepResult newton_step(const BoundarySpec& spec,
                             const Eigen::VectorXd& theta) {
  const FunctionalEval eval = evaluate(spec, theta);
  const Spectral s = decompose(eval.hessian);
  if (s.singular) {
    fail(ErrorCode::SingularHessian,
         "singular Hessian: condition number above 1e14");
  }
  Eigen::VectorXd coeffs = s.eigenvectors.transpose() * eval.gradient;
  const double drop = kNullspaceDrop * s.abs_max;
  for (int i = 0; i < coeffs.size(); ++i) {
    coeffs[i] = std::abs(s.eigenvalues[i]) < drop
                    ? 0.0
                    : coeffs[i] / s.eigenvalues[i];
  }
  const Eigen::VectorXd direction = -(s.eigenvectors * coeffs);
  NewtonStepResult result;
  result.step_norm = direction.norm();
  result.theta_next = theta + direction;
  for (int i = 0; i < result.theta_next.size(); ++i) {
    result.theta_next[i] = mod1(result.theta_next[i]);
  }
  return result;
}

CertifyOutcome certify_full(const BoundarySpec& spec,
                            const Eigen::VectorXd& theta,
                            double threshold) {
  CertifyOutcome out;
  out.eval = evaluate(spec, theta);
  const Spectral s = decompose(out.eval.hessian);
  out.eigenvalues = s.eigenvalues;
  out.certificate.threshold = threshold;
  if (!s.singular) {
    const Eigen::VectorXd scaled =
        (s.eigenvectors.transpose() * out.eval.gradient)
            .cwiseQuotient(s.eigenvalues);
    out.certificate.beta = scaled.norm();
    out.certificate.gamma_s = 0.5 * s.abs_max / s.abs_min;
    out.certificate.alpha = out.certificate.beta * out.certificate.gamma_s;
    out.certificate.certified = out.certificate.alpha < threshold;
  }
  return out;
}

Certificate certify(const BoundarySpec& spec,
                    const Eigen::VectorXd& theta,
                    double threshold) {
  return certify_full(spec, theta, threshold).certificate;
}

PolishResult polish_and_certify(const BoundarySpec& spec,
                                const Eigen::VectorXd& seed,
                                const NewtonConfig& config) {
  validate_config(config);
  validate_theta(seed);
  PolishResult result;
  result.theta = seed;
  for (int i = 0; i < result.theta.size(); ++i) {
    result.theta[i] = mod1(result.theta[i]);
  }
  result.trace.reserve(static_cast<size_t>(config.max_steps));
  for (int step = 0; step < config.max_steps; ++step) {
    NewtonStepResult next = newton_step(spec, result.theta);
    if (!std::isfinite(next.step_norm)) {
      fail(ErrorCode::Nonfinite, "non-finite Newton step");
    }
    result.theta = std::move(next.theta_next);
    result.trace.push_back(next.step_norm);
    if (next.step_norm < config.step_tol) break;
  }
  result.outcome = certify_full(spec, result.theta, config.threshold);
  result.certificate = result.outcome.certificate;
  return result;
}

}  // namespace lpb
