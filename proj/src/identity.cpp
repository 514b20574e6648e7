#include "lpbilliards/identity.hpp"

#include <algorithm>
#include <cmath>

namespace lpb {

namespace {

// Strict lexicographic comparison of equal-length vectors.
bool lex_less(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  for (int i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return true;
    if (a[i] > b[i]) return false;
  }
  return false;
}

}  // namespace

CanonicalForm canonicalize(const Eigen::VectorXd& theta) {
  validate_theta(theta);
  const int n = static_cast<int>(theta.size());
  Eigen::VectorXd reduced(n);
  for (int i = 0; i < n; ++i) reduced[i] = mod1(theta[i]);

  CanonicalForm best;
  Eigen::VectorXd candidate(n);
  bool have_best = false;
  for (int flip = 0; flip < 2; ++flip) {
    Eigen::VectorXd seq = reduced;
    if (flip) seq.reverseInPlace();
    for (int shift = 0; shift < n; ++shift) {
      for (int k = 0; k < n; ++k) candidate[k] = seq[(shift + k) % n];
      // Strict comparison keeps the first minimal candidate: ties prefer the
      // forward orientation and the smallest shift.
      if (!have_best || lex_less(candidate, best.theta)) {
        best.theta = candidate;
        best.orientation_flipped = (flip == 1);
        best.shift_applied = shift;
        have_best = true;
      }
    }
  }
  return best;
}

double torus_distance(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  double sum = 0.0;
  for (int i = 0; i < a.size(); ++i) {
    const double d = std::abs(a[i] - b[i]);
    const double wrapped = std::min(d, 1.0 - d);
    sum += wrapped * wrapped;
  }
  return std::sqrt(sum);
}

std::vector<OrbitRecord> coalesce(std::vector<OrbitRecord> orbits) {
  // Ascending (alpha, theta lex): deterministic regardless of input order.
  std::sort(orbits.begin(), orbits.end(),
            [](const OrbitRecord& a, const OrbitRecord& b) {
              if (a.alpha != b.alpha) return a.alpha < b.alpha;
              return lex_less(a.theta, b.theta);
            });

  std::vector<OrbitRecord> kept;
  for (OrbitRecord& candidate : orbits) {
    bool merged = false;
    for (OrbitRecord& survivor : kept) {
      const double dist = torus_distance(candidate.theta, survivor.theta);
      if (dist < candidate.alpha + survivor.alpha || dist == 0.0) {
        survivor.first_seed_index =
            std::min(survivor.first_seed_index, candidate.first_seed_index);
        merged = true;
        break;
      }
    }
    if (!merged) kept.push_back(std::move(candidate));
  }

  std::sort(kept.begin(), kept.end(),
            [](const OrbitRecord& a, const OrbitRecord& b) {
              if (a.perimeter != b.perimeter) return a.perimeter < b.perimeter;
              return lex_less(a.theta, b.theta);
            });
  return kept;
}

}  // namespace lpb
