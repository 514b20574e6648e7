// Independent dynamics oracle: check the equal-angle reflection law at every
// vertex of a candidate orbit.
//
// The inward normal is computed from the gradient of the implicit boundary
// equation |x|^p + |y|^p = 1, i.e. (p sgn(x)|x|^{p-1}, p sgn(y)|y|^{p-1}),
// deliberately avoiding the parametric tangent so the check is independent of
// the geometry module's derivative code.
#pragma once

#include <Eigen/Dense>

#include "lpbilliards/geometry.hpp"

namespace lpb {

// Maximum over vertices of || u_out - reflect(u_in, n) || where u_in/u_out
// are unit chord directions into and out of the vertex and
// reflect(u, n) = u - 2 (u . n) n.
double reflection_residual(const BoundarySpec& spec,
                           const Eigen::VectorXd& theta);

// Residual threshold for accepting a record as a genuine billiard orbit.
inline constexpr double kReflectionTolerance = 1e-6;

}  // namespace lpb
