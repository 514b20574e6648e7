#include "lpbilliards/functional.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace lpb {

namespace {

inline double dot(const Point2& a, const Point2& b) {
  return a.x * b.x + a.y * b.y;
}

inline Point2 sub(const Point2& a, const Point2& b) {
  return {a.x - b.x, a.y - b.y};
}

// Chord lengths of the closed polygon, in vertex order. Throws on a
// degenerate chord.
std::vector<double> chord_lengths(const BoundarySpec& spec,
                                  const Eigen::VectorXd& theta,
                                  std::vector<Point2>* points_out) {
  const int n = static_cast<int>(theta.size());
  std::vector<Point2> pts(n);
  for (int i = 0; i < n; ++i) pts[i] = boundary_point(spec, theta[i]);
  std::vector<double> lengths(n);
  for (int i = 0; i < n; ++i) {
    const Point2 d = sub(pts[i], pts[(i + 1) % n]);
    const double ell = std::hypot(d.x, d.y);
    if (!(ell >= kDegenerateChord)) {
      fail(ErrorCode::DegeneratePolygon,
           "degenerate polygon: chord shorter than 1e-9");
    }
    lengths[i] = ell;
  }
  if (points_out) *points_out = std::move(pts);
  return lengths;
}

// Sum in ascending-length order: the chord multiset — and therefore this
// floating-point sum — is exactly invariant under cyclic shifts and reversal
// of theta.
double sorted_sum(std::vector<double> lengths) {
  std::sort(lengths.begin(), lengths.end());
  double total = 0.0;
  for (double v : lengths) total += v;
  return total;
}

}  // namespace

void validate_theta(const Eigen::VectorXd& theta) {
  if (theta.size() < 2) {
    fail(ErrorCode::InvalidArgument, "parameter vector needs N >= 2 entries");
  }
  for (int i = 0; i < theta.size(); ++i) {
    if (!std::isfinite(theta[i])) {
      fail(ErrorCode::InvalidArgument, "parameter vector must be finite");
    }
  }
}

double perimeter(const BoundarySpec& spec, const Eigen::VectorXd& theta) {
  validate_spec(spec);
  validate_theta(theta);
  return sorted_sum(chord_lengths(spec, theta, nullptr));
}

FunctionalEval evaluate(const BoundarySpec& spec, const Eigen::VectorXd& theta) {
  validate_spec(spec);
  validate_theta(theta);
  const int n = static_cast<int>(theta.size());

  std::vector<Point2> pts;
  std::vector<double> lengths = chord_lengths(spec, theta, &pts);
  std::vector<Point2> vel(n), acc(n);
  for (int i = 0; i < n; ++i) {
    vel[i] = boundary_velocity(spec, theta[i]);
    acc[i] = boundary_acceleration(spec, theta[i]);
  }

  FunctionalEval out;
  out.value = sorted_sum(lengths);
  out.gradient = Eigen::VectorXd::Zero(n);
  out.hessian = Eigen::MatrixXd::Zero(n, n);

  // Per-chord contributions for d = gamma_i - gamma_j, j = i+1, ell = ||d||:
  //   dL/dtheta_i   += (d . V_i)/ell,   dL/dtheta_j -= (d . V_j)/ell
  //   d2L/dtheta_i2 += (V_i.V_i + d.A_i)/ell - (d.V_i)^2/ell^3
  //   d2L/dtheta_j2 += (V_j.V_j - d.A_j)/ell - (d.V_j)^2/ell^3
  //   mixed         += -(V_i.V_j)/ell + (d.V_i)(d.V_j)/ell^3
  for (int i = 0; i < n; ++i) {
    const int j = (i + 1) % n;
    const Point2 d = sub(pts[i], pts[j]);
    const double ell = lengths[i];
    const double ell3 = ell * ell * ell;
    const double dvi = dot(d, vel[i]);
    const double dvj = dot(d, vel[j]);
    out.gradient[i] += dvi / ell;
    out.gradient[j] -= dvj / ell;
    out.hessian(i, i) += (dot(vel[i], vel[i]) + dot(d, acc[i])) / ell -
                         dvi * dvi / ell3;
    out.hessian(j, j) += (dot(vel[j], vel[j]) - dot(d, acc[j])) / ell -
                         dvj * dvj / ell3;
    const double mixed = -dot(vel[i], vel[j]) / ell + dvi * dvj / ell3;
    out.hessian(i, j) += mixed;
    out.hessian(j, i) += mixed;
  }

  // Suppress rounding asymmetry before eigendecomposition.
  out.hessian = 0.5 * (out.hessian + out.hessian.transpose()).eval();
  return out;
}

}  // namespace lpb
