// Perimeter functional L(theta) = sum_i ||gamma(theta_i) - gamma(theta_{i+1})||
// over closed N-vertex polygons inscribed in the L^p boundary, with exact
// gradient and Hessian assembled from per-chord contributions.
//
// The perimeter value is summed in sorted-chord-length order, which makes it
// exactly invariant under cyclic shifts and reversal of theta (the chord
// multiset is invariant, so the floating-point sum is too).
#pragma once

#include <Eigen/Dense>

#include "lpbilliards/geometry.hpp"

namespace lpb {

// Any chord shorter than this is a degenerate polygon: the chord direction
// (and hence the gradient) would be numerically meaningless.
inline constexpr double kDegenerateChord = 1e-9;

struct FunctionalEval {
  double value = 0.0;       // perimeter
  Eigen::VectorXd gradient; // dL/dtheta_i
  Eigen::MatrixXd hessian;  // symmetrized second derivative
};

void validate_theta(const Eigen::VectorXd& theta);

double perimeter(const BoundarySpec& spec, const Eigen::VectorXd& theta);

FunctionalEval evaluate(const BoundarySpec& spec, const Eigen::VectorXd& theta);

}  // namespace lpb
