#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "lpbilliards/identity.hpp"

namespace {

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

Eigen::VectorXd random_vector(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  Eigen::VectorXd out(n);
  for (int i = 0; i < n; ++i) out[i] = uni(rng);
  return out;
}

lpb::OrbitRecord make_record(const Eigen::VectorXd& canonical_theta,
                             double alpha, double perimeter,
                             std::uint64_t first_seed_index) {
  lpb::OrbitRecord rec;
  rec.p = 3.0;
  rec.n = static_cast<int>(canonical_theta.size());
  rec.theta = canonical_theta;
  rec.alpha = alpha;
  rec.beta = alpha / 2.0;
  rec.perimeter = perimeter;
  rec.residual = 1e-12;
  rec.signature = lpb::MorseSignature{0, rec.n, 0};
  rec.rotation = lpb::RotationNumber{1, rec.n};
  rec.first_seed_index = first_seed_index;
  return rec;
}

bool same_theta(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  if (a.size() != b.size()) return false;
  for (int i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("identity") {

TEST_CASE("canonicalize picks the lexicographic minimum of all candidates") {
  const lpb::CanonicalForm c = lpb::canonicalize(vec({0.5, 0.1, 0.9}));
  CHECK(same_theta(c.theta, vec({0.1, 0.5, 0.9})));
  // (0.1, 0.5, 0.9) arises only among the reversed candidates here.
  CHECK(c.orientation_flipped);
}

TEST_CASE("already-canonical vectors pass through unchanged") {
  const Eigen::VectorXd theta = vec({0.1, 0.5, 0.9});
  const lpb::CanonicalForm c = lpb::canonicalize(theta);
  CHECK(same_theta(c.theta, theta));
  CHECK_FALSE(c.orientation_flipped);
  CHECK(c.shift_applied == 0);
}

TEST_CASE("entries are reduced mod 1 before shifting") {
  const lpb::CanonicalForm c = lpb::canonicalize(vec({1.2, -0.3}));
  CHECK(c.theta[0] == doctest::Approx(0.2).epsilon(1e-12));
  CHECK(c.theta[1] == doctest::Approx(0.7).epsilon(1e-12));
}

TEST_CASE("canonical form starts at the minimum entry, all in [0,1)") {
  std::mt19937_64 rng(53);
  for (int rep = 0; rep < 500; ++rep) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const lpb::CanonicalForm c = lpb::canonicalize(random_vector(rng, n));
    double min_entry = c.theta[0];
    for (int i = 0; i < n; ++i) {
      CHECK(c.theta[i] >= 0.0);
      CHECK(c.theta[i] < 1.0);
      min_entry = std::min(min_entry, c.theta[i]);
    }
    CHECK(c.theta[0] == min_entry);
  }
}

TEST_CASE("canonicalize is exactly idempotent") {
  std::mt19937_64 rng(59);
  for (int rep = 0; rep < 1000; ++rep) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const Eigen::VectorXd canon = lpb::canonicalize(random_vector(rng, n)).theta;
    const lpb::CanonicalForm again = lpb::canonicalize(canon);
    CHECK(same_theta(again.theta, canon));
    CHECK_FALSE(again.orientation_flipped);
    CHECK(again.shift_applied == 0);
  }
}

TEST_CASE("canonicalize absorbs cyclic shifts and reversal exactly") {
  std::mt19937_64 rng(61);
  for (int rep = 0; rep < 1000; ++rep) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const Eigen::VectorXd theta = random_vector(rng, n);
    const Eigen::VectorXd canon = lpb::canonicalize(theta).theta;
    for (int k = 0; k < n; ++k) {
      CHECK(same_theta(lpb::canonicalize(rotate(theta, k)).theta, canon));
    }
    const Eigen::VectorXd reversed = theta.reverse();
    CHECK(same_theta(lpb::canonicalize(reversed).theta, canon));
  }
}

TEST_CASE("torus distance uses per-coordinate wraparound") {
  CHECK(lpb::torus_distance(vec({0.1, 0.2}), vec({0.9, 0.3})) ==
        doctest::Approx(std::sqrt(0.05)).epsilon(1e-14));
  CHECK(lpb::torus_distance(vec({0.95, 0.5}), vec({0.05, 0.5})) ==
        doctest::Approx(0.1).epsilon(1e-12));
  std::mt19937_64 rng(67);
  for (int rep = 0; rep < 200; ++rep) {
    const Eigen::VectorXd a = random_vector(rng, 5);
    const Eigen::VectorXd b = random_vector(rng, 5);
    CHECK(lpb::torus_distance(a, b) == lpb::torus_distance(b, a));
    CHECK(lpb::torus_distance(a, a) == 0.0);
  }
}

TEST_CASE("coalesce keeps the smaller-alpha copy and folds the seed index") {
  const Eigen::VectorXd theta = lpb::canonicalize(vec({0.1, 0.4, 0.8})).theta;
  Eigen::VectorXd nudged = theta;
  nudged[1] += 1e-9;
  std::vector<lpb::OrbitRecord> input;
  input.push_back(make_record(theta, 1e-7, 6.0, 7));
  input.push_back(make_record(nudged, 1e-8, 6.0, 3));
  const std::vector<lpb::OrbitRecord> out = lpb::coalesce(input);
  REQUIRE(out.size() == 1);
  CHECK(out[0].alpha == 1e-8);
  CHECK(same_theta(out[0].theta, nudged));
  CHECK(out[0].first_seed_index == 3);  // earliest seed across merged copies
}

TEST_CASE("coalesce keeps orbits separated by more than the alpha sum") {
  std::vector<lpb::OrbitRecord> input;
  input.push_back(make_record(vec({0.1, 0.3, 0.6}), 5e-5, 6.0, 0));
  input.push_back(make_record(vec({0.1, 0.3 + 0.5, 0.6}), 5e-5, 6.5, 1));
  const std::vector<lpb::OrbitRecord> out = lpb::coalesce(input);
  CHECK(out.size() == 2);
}

TEST_CASE("coalesce merges exact duplicates regardless of alpha") {
  const Eigen::VectorXd theta = lpb::canonicalize(vec({0.2, 0.5, 0.9})).theta;
  std::vector<lpb::OrbitRecord> input;
  input.push_back(make_record(theta, 0.0, 6.0, 4));
  input.push_back(make_record(theta, 0.0, 6.0, 9));
  const std::vector<lpb::OrbitRecord> out = lpb::coalesce(input);
  REQUIRE(out.size() == 1);
  CHECK(out[0].first_seed_index == 4);
}

TEST_CASE("coalesce is idempotent, order independent, and self-consistent") {
  std::mt19937_64 rng(71);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  for (int rep = 0; rep < 1000; ++rep) {
    const int n = 3 + static_cast<int>(rng() % 3);
    const int count = 2 + static_cast<int>(rng() % 9);
    std::vector<lpb::OrbitRecord> input;
    for (int i = 0; i < count; ++i) {
      Eigen::VectorXd theta;
      if (!input.empty() && uni(rng) < 0.4) {
        // Near-duplicate of an earlier record to exercise merging.
        theta = input[rng() % input.size()].theta;
        for (int j = 0; j < theta.size(); ++j) {
          theta[j] = lpb::mod1(theta[j] + 1e-6 * (uni(rng) - 0.5));
        }
        theta = lpb::canonicalize(theta).theta;
      } else {
        theta = lpb::canonicalize(random_vector(rng, n)).theta;
      }
      const double alpha = std::pow(10.0, -2.0 - 8.0 * uni(rng));
      input.push_back(make_record(theta, alpha, 4.0 + 8.0 * uni(rng),
                                  static_cast<std::uint64_t>(i)));
    }

    const std::vector<lpb::OrbitRecord> once = lpb::coalesce(input);

    // Idempotent.
    const std::vector<lpb::OrbitRecord> twice = lpb::coalesce(once);
    REQUIRE(twice.size() == once.size());
    for (size_t i = 0; i < once.size(); ++i) {
      CHECK(same_theta(twice[i].theta, once[i].theta));
      CHECK(twice[i].alpha == once[i].alpha);
      CHECK(twice[i].first_seed_index == once[i].first_seed_index);
    }

    // Input order must not matter.
    std::vector<lpb::OrbitRecord> shuffled = input;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    const std::vector<lpb::OrbitRecord> reordered = lpb::coalesce(shuffled);
    REQUIRE(reordered.size() == once.size());
    for (size_t i = 0; i < once.size(); ++i) {
      CHECK(same_theta(reordered[i].theta, once[i].theta));
      CHECK(reordered[i].alpha == once[i].alpha);
      CHECK(reordered[i].first_seed_index == once[i].first_seed_index);
    }

    // Survivors are pairwise distinct under the merge predicate and the
    // output is sorted by (perimeter, theta lexicographic).
    for (size_t i = 0; i < once.size(); ++i) {
      for (size_t j = i + 1; j < once.size(); ++j) {
        const double d = lpb::torus_distance(once[i].theta, once[j].theta);
        CHECK(d > 0.0);
        CHECK(d >= once[i].alpha + once[j].alpha);
      }
      if (i > 0) CHECK(once[i - 1].perimeter <= once[i].perimeter);
    }
  }
}

}  // TEST_SUITE
