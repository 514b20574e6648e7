// Morse signature (Hessian eigenvalue counts) and rotation number
// (topological winding of the parameter vector).
#pragma once

#include <Eigen/Dense>

namespace lpb {

struct MorseSignature {
  int n_plus = 0;
  int n_minus = 0;
  int n_zero = 0;
};

struct RotationNumber {
  int num = 0;  // 0 <= num < den (or 0/1), gcd(num, den) = 1
  int den = 1;
};

// Eigenvalue lambda counts as zero when |lambda| < zero_tol_rel * max(1,
// |lambda|_max); positive/negative otherwise.
MorseSignature morse_signature(const Eigen::MatrixXd& hessian,
                               double zero_tol_rel = 1e-8);

// Signature from precomputed eigenvalues (shared with the certifier, which
// needs the same eigendecomposition).
MorseSignature morse_signature_from_eigenvalues(const Eigen::VectorXd& eigenvalues,
                                                double zero_tol_rel = 1e-8);

// Winding w = sum_i frac(theta_{i+1} - theta_i) (cyclic, frac into [0,1)).
// Exposed for property tests; w is an integer up to rounding for any finite
// vector.
double winding(const Eigen::VectorXd& theta);

// Reduced rotation number of a canonical parameter vector: reduce(w, N) by
// gcd; a net winding of 0 returns 0/1. Throws Classification when the winding
// is farther than 1e-6 from an integer (corrupted input).
RotationNumber rotation_number(const Eigen::VectorXd& theta);

}  // namespace lpb
