// Boundary geometry of the planar L^p ball |x|^p + |y|^p <= 1.
//
// The boundary is parametrized by the angular parameter t in [0,1):
//   gamma(t) = (sgn(c) (|c|+eps)^(2/p), sgn(s) (|s|+eps)^(2/p)),
//   c = cos 2*pi*t, s = sin 2*pi*t,
// with a small regularization eps added to the absolute values before taking
// powers so that derivatives stay finite where the boundary meets the axes.
// Velocity and acceleration are the exact first and second derivatives of the
// regularized formula (chain rule applied to sgn(c)(|c|+eps)^(2/p)).
#pragma once

#include <cmath>

#include "lpbilliards/errors.hpp"

namespace lpb {

struct BoundarySpec {
  double p;            // exponent, p >= 2 (p > 2 for certification-grade runs)
  double eps = 1e-14;  // regularization, 0 < eps <= 1e-8
};

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

// Reduce to [0,1). Guard against the result rounding up to 1.0 for tiny
// negative inputs.
inline double mod1(double t) {
  double r = t - std::floor(t);
  if (r >= 1.0) r = 0.0;
  return r;
}

void validate_spec(const BoundarySpec& spec);

Point2 boundary_point(const BoundarySpec& spec, double t);
Point2 boundary_velocity(const BoundarySpec& spec, double t);
Point2 boundary_acceleration(const BoundarySpec& spec, double t);

}  // namespace lpb
