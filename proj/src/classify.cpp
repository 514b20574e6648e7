#include "lpbilliards/classify.hpp"

#include <cmath>
#include <numeric>

#include "lpbilliards/errors.hpp"
#include "lpbilliards/geometry.hpp"

namespace lpb {

MorseSignature morse_signature_from_eigenvalues(
    const Eigen::VectorXd& eigenvalues, double zero_tol_rel) {
  const double abs_max = eigenvalues.cwiseAbs().maxCoeff();
  const double band = zero_tol_rel * std::max(1.0, abs_max);
  MorseSignature sig;
  for (int i = 0; i < eigenvalues.size(); ++i) {
    const double lambda = eigenvalues[i];
    if (std::abs(lambda) < band) {
      ++sig.n_zero;
    } else if (lambda > 0.0) {
      ++sig.n_plus;
    } else {
      ++sig.n_minus;
    }
  }
  return sig;
}

MorseSignature morse_signature(const Eigen::MatrixXd& hessian,
                               double zero_tol_rel) {
  if (hessian.rows() != hessian.cols() ||
      !hessian.isApprox(hessian.transpose(), 1e-10)) {
    fail(ErrorCode::InvalidArgument,
         "morse_signature needs a symmetric matrix");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(hessian);
  if (solver.info() != Eigen::Success) {
    fail(ErrorCode::Classification, "Hessian eigendecomposition failed");
  }
  return morse_signature_from_eigenvalues(solver.eigenvalues(), zero_tol_rel);
}

double winding(const Eigen::VectorXd& theta) {
  const int n = static_cast<int>(theta.size());
  double w = 0.0;
  for (int i = 0; i < n; ++i) {
    const double d = theta[(i + 1) % n] - theta[i];
    w += d - std::floor(d);
  }
  return w;
}

RotationNumber rotation_number(const Eigen::VectorXd& theta) {
  for (int i = 0; i < theta.size(); ++i) {
    if (!std::isfinite(theta[i])) {
      fail(ErrorCode::Classification,
           "rotation number of a non-finite parameter vector");
    }
  }
  const int n = static_cast<int>(theta.size());
  const double w = winding(theta);
  const double nearest = std::round(w);
  if (std::abs(w - nearest) > 1e-6) {
    fail(ErrorCode::Classification,
         "non-integer winding: corrupted parameter vector");
  }
  const long wi = std::lround(nearest);
  if (wi == 0) return {0, 1};
  const long g = std::gcd(wi, static_cast<long>(n));
  return {static_cast<int>(wi / g), static_cast<int>(n / g)};
}

}  // namespace lpb
