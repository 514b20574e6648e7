#include "lpbilliards/geometry.hpp"

#include <cmath>

namespace lpb {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// sgn with sgn(0) = 0, matching the sign convention of the boundary formula
// (the regularized magnitude keeps the factor finite either way).
inline double sgn(double v) { return (v > 0.0) - (v < 0.0); }

struct Trig {
  double c, s;
};

inline Trig trig(double t) {
  double u = mod1(t);
  return {std::cos(kTwoPi * u), std::sin(kTwoPi * u)};
}

inline void check_t(double t) {
  if (!std::isfinite(t)) {
    fail(ErrorCode::InvalidArgument, "angular parameter must be finite");
  }
}

}  // namespace

void validate_spec(const BoundarySpec& spec) {
  if (!(spec.p >= 2.0) || !std::isfinite(spec.p)) {
    fail(ErrorCode::InvalidArgument, "exponent p must satisfy p >= 2");
  }
  if (!(spec.eps > 0.0) || !(spec.eps <= 1e-8)) {
    fail(ErrorCode::InvalidArgument, "regularization eps must be in (0, 1e-8]");
  }
}

Point2 boundary_point(const BoundarySpec& spec, double t) {
  check_t(t);
  const auto [c, s] = trig(t);
  const double q = 2.0 / spec.p;
  return {sgn(c) * std::pow(std::abs(c) + spec.eps, q),
          sgn(s) * std::pow(std::abs(s) + spec.eps, q)};
}

Point2 boundary_velocity(const BoundarySpec& spec, double t) {
  check_t(t);
  const auto [c, s] = trig(t);
  const double q = 2.0 / spec.p;
  // d/dt [sgn(c)(|c|+eps)^q] = q (|c|+eps)^(q-1) * dc/dt, and likewise in s:
  // sgn(c) * d|c|/dc = 1 wherever c != 0, and the c = 0 point is measure-zero
  // with a finite regularized limit.
  return {q * std::pow(std::abs(c) + spec.eps, q - 1.0) * (-kTwoPi * s),
          q * std::pow(std::abs(s) + spec.eps, q - 1.0) * (kTwoPi * c)};
}

Point2 boundary_acceleration(const BoundarySpec& spec, double t) {
  check_t(t);
  const auto [c, s] = trig(t);
  const double q = 2.0 / spec.p;
  const double four_pi_sq = kTwoPi * kTwoPi;
  const double ax =
      four_pi_sq * q *
      ((q - 1.0) * s * s * sgn(c) * std::pow(std::abs(c) + spec.eps, q - 2.0) -
       c * std::pow(std::abs(c) + spec.eps, q - 1.0));
  const double ay =
      four_pi_sq * q *
      ((q - 1.0) * c * c * sgn(s) * std::pow(std::abs(s) + spec.eps, q - 2.0) -
       s * std::pow(std::abs(s) + spec.eps, q - 1.0));
  return {ax, ay};
}

}  // namespace lpb
