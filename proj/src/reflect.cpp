#include "lpbilliards/reflect.hpp"

#include <cmath>

#include "lpbilliards/functional.hpp"

namespace lpb {

namespace {

struct Vec2 {
  double x, y;
};

inline Vec2 normalize(Vec2 v) {
  const double norm = std::hypot(v.x, v.y);
  if (!(norm >= kDegenerateChord)) {
    fail(ErrorCode::DegeneratePolygon, "degenerate chord in reflection check");
  }
  return {v.x / norm, v.y / norm};
}

}  // namespace

double reflection_residual(const BoundarySpec& spec,
                           const Eigen::VectorXd& theta) {
  validate_spec(spec);
  validate_theta(theta);
  const int n = static_cast<int>(theta.size());
  std::vector<Point2> pts(n);
  for (int i = 0; i < n; ++i) pts[i] = boundary_point(spec, theta[i]);

  double max_residual = 0.0;
  for (int i = 0; i < n; ++i) {
    const Point2& prev = pts[(i + n - 1) % n];
    const Point2& here = pts[i];
    const Point2& next = pts[(i + 1) % n];
    const Vec2 u_in = normalize({here.x - prev.x, here.y - prev.y});
    const Vec2 u_out = normalize({next.x - here.x, next.y - here.y});
    // Normal from the implicit equation |x|^p + |y|^p = 1, independent of the
    // parametric tangent code.
    const double p = spec.p;
    const Vec2 normal = normalize(
        {p * std::copysign(std::pow(std::abs(here.x), p - 1.0), here.x),
         p * std::copysign(std::pow(std::abs(here.y), p - 1.0), here.y)});
    const double u_dot_n = u_in.x * normal.x + u_in.y * normal.y;
    const Vec2 reflected = {u_in.x - 2.0 * u_dot_n * normal.x,
                            u_in.y - 2.0 * u_dot_n * normal.y};
    const double rx = u_out.x - reflected.x;
    const double ry = u_out.y - reflected.y;
    max_residual = std::max(max_residual, std::hypot(rx, ry));
  }
  return max_residual;
}

}  // namespace lpb
