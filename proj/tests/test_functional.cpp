#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "lpbilliards/errors.hpp"
#include "lpbilliards/functional.hpp"
#include "oracles.hpp"

namespace {

using lpb::BoundarySpec;

Eigen::VectorXd vec(std::initializer_list<double> entries) {
  Eigen::VectorXd out(static_cast<Eigen::Index>(entries.size()));
  Eigen::Index i = 0;
  for (double v : entries) out[i++] = v;
  return out;
}

Eigen::VectorXd rotate(const Eigen::VectorXd& theta, int k) {
  const int n = static_cast<int>(theta.size());
  Eigen::VectorXd out(n);
  for (int i = 0; i < n; ++i) out[i] = theta[(i + k) % n];
  return out;
}

Eigen::VectorXd reverse(const Eigen::VectorXd& theta) {
  return theta.reverse();
}

double quarter_distance(double t) {
  const double r = lpb::mod1(4.0 * t);
  return std::min(r, 1.0 - r) / 4.0;
}

// Random vector with a circular minimum vertex gap >= gap; when margin > 0
// every entry also stays at least margin away from multiples of 1/4 so that
// finite differences of the boundary formulas are reliable.
Eigen::VectorXd random_theta(std::mt19937_64& rng, int n, double gap,
                             double margin) {
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  for (;;) {
    Eigen::VectorXd theta(n);
    for (int i = 0; i < n; ++i) theta[i] = uni(rng);
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      if (margin > 0.0 && quarter_distance(theta[i]) < margin) ok = false;
    }
    if (ok && gap > 0.0) {
      std::vector<double> sorted(theta.data(), theta.data() + n);
      std::sort(sorted.begin(), sorted.end());
      double min_gap = 1.0 - sorted.back() + sorted.front();
      for (size_t i = 1; i < sorted.size(); ++i) {
        min_gap = std::min(min_gap, sorted[i] - sorted[i - 1]);
      }
      if (min_gap < gap) ok = false;
    }
    if (ok) return theta;
  }
}

}  // namespace

TEST_SUITE("functional") {

TEST_CASE("perimeter trivial anchors on the circle") {
  const BoundarySpec p2{2.0};
  CHECK(std::abs(lpb::perimeter(p2, vec({0.0, 1.0 / 3.0, 2.0 / 3.0})) -
                 oracle::kThreeSqrt3) < 1e-9);
  CHECK(std::abs(lpb::perimeter(p2, vec({0.0, 0.5})) - 4.0) < 1e-9);
}

TEST_CASE("perimeter matches the 50-digit oracle at p=3") {
  const BoundarySpec p3{3.0};
  CHECK(std::abs(lpb::perimeter(p3, vec({0.0657, 0.375, 0.6843})) -
                 oracle::kPerimSeed3) < 1e-12);
  CHECK(std::abs(lpb::perimeter(p3, vec({0.1, 0.45, 0.7})) -
                 oracle::kPerimAt3) < 1e-12);
}

TEST_CASE("gradient matches the 50-digit oracle at p=3") {
  const lpb::FunctionalEval ev =
      lpb::evaluate(BoundarySpec{3.0}, vec({0.1, 0.45, 0.7}));
  CHECK(std::abs(ev.value - oracle::kPerimAt3) < 1e-12);
  for (int i = 0; i < 3; ++i) {
    CHECK(std::abs(ev.gradient[i] - oracle::kGradAt3[i]) < 1e-11);
  }
}

TEST_CASE("regular polygons on the circle are critical points") {
  const BoundarySpec p2{2.0};
  const lpb::FunctionalEval tri =
      lpb::evaluate(p2, vec({0.0, 1.0 / 3.0, 2.0 / 3.0}));
  CHECK(tri.gradient.cwiseAbs().maxCoeff() < 1e-9);
  const lpb::FunctionalEval pent =
      lpb::evaluate(p2, vec({0.0, 0.2, 0.4, 0.6, 0.8}));
  CHECK(pent.gradient.cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("p=2 regular N-gon Hessians have a near-null eigenvalue") {
  const BoundarySpec p2{2.0};
  for (int n : {3, 4, 5, 6}) {
    Eigen::VectorXd theta(n);
    for (int i = 0; i < n; ++i) theta[i] = static_cast<double>(i) / n;
    const lpb::FunctionalEval ev = lpb::evaluate(p2, theta);
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(ev.hessian);
    CHECK(es.eigenvalues().cwiseAbs().minCoeff() < 1e-7);
  }
}

TEST_CASE("value is positive and the Hessian is exactly symmetric") {
  std::mt19937_64 rng(23);
  for (int n : {2, 3, 5, 7}) {
    for (int rep = 0; rep < 50; ++rep) {
      const Eigen::VectorXd theta = random_theta(rng, n, 0.01, 0.0);
      const lpb::FunctionalEval ev = lpb::evaluate(BoundarySpec{3.0}, theta);
      CHECK(ev.value > 0.0);
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          CHECK(ev.hessian(i, j) == ev.hessian(j, i));
        }
      }
    }
  }
}

TEST_CASE("cyclic shifts preserve the perimeter exactly") {
  std::mt19937_64 rng(31);
  for (int rep = 0; rep < 200; ++rep) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const Eigen::VectorXd theta = random_theta(rng, n, 1e-3, 0.0);
    const BoundarySpec spec{2.0 + (rep % 5) * 0.5};
    const double base = lpb::perimeter(spec, theta);
    for (int k = 1; k < n; ++k) {
      CHECK(lpb::perimeter(spec, rotate(theta, k)) == base);
    }
    CHECK(lpb::perimeter(spec, reverse(theta)) == base);
  }
}

TEST_CASE("cyclic shifts permute the gradient within 1e-12") {
  std::mt19937_64 rng(37);
  for (int rep = 0; rep < 100; ++rep) {
    const int n = 3 + static_cast<int>(rng() % 5);
    const Eigen::VectorXd theta = random_theta(rng, n, 1e-3, 0.0);
    const BoundarySpec spec{3.0};
    const Eigen::VectorXd g = lpb::evaluate(spec, theta).gradient;
    for (int k = 1; k < n; ++k) {
      const Eigen::VectorXd gr = lpb::evaluate(spec, rotate(theta, k)).gradient;
      for (int i = 0; i < n; ++i) {
        CHECK(std::abs(gr[i] - g[(i + k) % n]) <= 1e-12);
      }
    }
  }
}

TEST_CASE("gradient and Hessian match finite differences") {
  std::mt19937_64 rng(41);
  const double hg = 1e-7;  // perimeter step for the gradient check
  const double hh = 1e-6;  // gradient step for the Hessian check
  for (double p : {2.0, 3.0, 4.0}) {
    const BoundarySpec spec{p};
    for (int n : {2, 3, 5}) {
      for (int rep = 0; rep < 100; ++rep) {
        const Eigen::VectorXd theta = random_theta(rng, n, 0.01, 1e-3);
        const lpb::FunctionalEval ev = lpb::evaluate(spec, theta);

        double worst_g = 0.0;
        const double scale_g =
            std::max(1.0, ev.gradient.cwiseAbs().maxCoeff());
        for (int i = 0; i < n; ++i) {
          Eigen::VectorXd lo = theta, hi = theta;
          lo[i] -= hg;
          hi[i] += hg;
          const double fd =
              (lpb::perimeter(spec, hi) - lpb::perimeter(spec, lo)) /
              (2.0 * hg);
          worst_g = std::max(worst_g, std::abs(fd - ev.gradient[i]) / scale_g);
        }
        CHECK(worst_g <= 1e-6);

        double worst_h = 0.0;
        const double scale_h =
            std::max(1.0, ev.hessian.cwiseAbs().maxCoeff());
        for (int j = 0; j < n; ++j) {
          Eigen::VectorXd lo = theta, hi = theta;
          lo[j] -= hh;
          hi[j] += hh;
          const Eigen::VectorXd glo = lpb::evaluate(spec, lo).gradient;
          const Eigen::VectorXd ghi = lpb::evaluate(spec, hi).gradient;
          for (int i = 0; i < n; ++i) {
            const double fd = (ghi[i] - glo[i]) / (2.0 * hh);
            worst_h =
                std::max(worst_h, std::abs(fd - ev.hessian(i, j)) / scale_h);
          }
        }
        CHECK(worst_h <= 1e-5);
      }
    }
  }
}

TEST_CASE("degenerate chords are rejected") {
  const BoundarySpec p3{3.0};
  CHECK_THROWS_AS(lpb::perimeter(p3, vec({0.1, 0.1})), lpb::Error);
  CHECK_THROWS_AS(lpb::evaluate(p3, vec({0.2, 0.2 + 1e-12, 0.7})), lpb::Error);
  try {
    lpb::perimeter(p3, vec({0.3, 0.8, 0.3}));
    CHECK(false);
  } catch (const lpb::Error& e) {
    CHECK(e.code() == lpb::ErrorCode::DegeneratePolygon);
  }
}

TEST_CASE("parameter vectors are validated") {
  const BoundarySpec p3{3.0};
  Eigen::VectorXd single(1);
  single << 0.3;
  CHECK_THROWS_AS(lpb::evaluate(p3, single), lpb::Error);
  CHECK_THROWS_AS(
      lpb::evaluate(p3,
                    vec({0.1, std::numeric_limits<double>::quiet_NaN(), 0.7})),
      lpb::Error);
  try {
    lpb::evaluate(p3, single);
    CHECK(false);
  } catch (const lpb::Error& e) {
    CHECK(e.code() == lpb::ErrorCode::InvalidArgument);
  }
}

}  // TEST_SUITE
