// Newton iteration on grad L = 0 and alpha-certification at the final
// iterate.
//
// The certificate follows the perimeter-functional convention:
//   beta    = ||H^{-1} grad L||_2      (Newton step norm)
//   gamma_s = 0.5 * ||H^{-1}|| * ||H|| (spectral norms; half the condition
//                                       number of the symmetric Hessian)
//   alpha   = beta * gamma_s,  certified  iff  alpha < threshold.
// gamma_s is a condition-number surrogate for the classical Smale gamma
// (which involves higher derivatives); the threshold default 0.15767 sits
// well inside the classical alpha_0 = sqrt(3) - 1 bound.
#pragma once

#include <limits>
#include <vector>

#include <Eigen/Dense>

#include "lpbilliards/functional.hpp"

namespace lpb {

// Classical Smale bound sqrt(3) - 1; configuration thresholds must stay
// below it.
inline constexpr double kAlphaTheoremBound = 0.7320508075688772935;

// Spectral condition numbers above this mark the Hessian as singular.
inline constexpr double kSingularCondition = 1e14;

// Relative eigenvalue cutoff for the Newton solve. Eigendirections with
// |lambda| below kNullspaceDrop * |lambda|_max carry only rounding noise in
// the gradient (e.g. the rotational null direction of the p=2 circle), and
// dividing noise by a near-zero eigenvalue would produce a spurious step at
// an exact critical point. Dropping them leaves the solve bit-identical to
// the plain one whenever the condition number is below 1e12.
inline constexpr double kNullspaceDrop = 1e-12;

struct NewtonConfig {
  int max_steps = 50;
  double step_tol = 1e-12;
  double threshold = 0.15767;
};

void validate_config(const NewtonConfig& config);

struct Certificate {
  double beta = std::numeric_limits<double>::infinity();
  double gamma_s = std::numeric_limits<double>::infinity();
  double alpha = std::numeric_limits<double>::infinity();
  double threshold = 0.15767;
  bool certified = false;
};

// Certificate computed from an already-assembled (gradient, Hessian) pair.
// Singular Hessians yield the +infinity sentinel on all three quantities and
// certified = false. Exposed separately so the spectral logic is unit-testable
// on synthetic matrices.
Certificate certificate_from(const Eigen::VectorXd& gradient,
                             const Eigen::MatrixXd& hessian,
                             double threshold);

struct NewtonStepResult {
  Eigen::VectorXd theta_next;  // reduced mod 1
  double step_norm = 0.0;
};

// One Newton step: solve H d = -g, return theta + d (mod 1) and ||d||_2.
// Throws SingularHessian when the condition estimate exceeds
// kSingularCondition; degenerate polygons propagate from evaluate().
NewtonStepResult newton_step(const BoundarySpec& spec,
                             const Eigen::VectorXd& theta);

// Certification at a point: evaluates the functional and applies
// certificate_from. Bundled with the evaluation and the Hessian eigenvalues
// so callers can reuse them (perimeter for records, eigenvalues for the Morse
// signature) without recomputing.
struct CertifyOutcome {
  Certificate certificate;
  FunctionalEval eval;
  Eigen::VectorXd eigenvalues;  // ascending
};

CertifyOutcome certify_full(const BoundarySpec& spec,
                            const Eigen::VectorXd& theta,
                            double threshold);

Certificate certify(const BoundarySpec& spec,
                    const Eigen::VectorXd& theta,
                    double threshold);

struct PolishResult {
  Eigen::VectorXd theta;       // final iterate, entries in [0,1)
  Certificate certificate;     // issued at the final iterate
  std::vector<double> trace;   // per-step Newton step norms
  CertifyOutcome outcome;      // evaluation at the final iterate
};

// Run newton_step up to config.max_steps times, early-stopping when the step
// norm drops below config.step_tol, then certify at the final iterate.
// Degenerate/singular/non-finite failures abort by throwing lpb::Error.
PolishResult polish_and_certify(const BoundarySpec& spec,
                                const Eigen::VectorXd& seed,
                                const NewtonConfig& config);

}  // namespace lpb
