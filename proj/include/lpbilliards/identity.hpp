// Orbit identity: canonical representatives under the orbit symmetries
// (mod-1 reduction, cyclic shifts, reversal) and coalescing of near-duplicate
// certified orbits.
#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "lpbilliards/classify.hpp"
#include "lpbilliards/newton.hpp"

namespace lpb {

struct CanonicalForm {
  Eigen::VectorXd theta;           // entries in [0,1), theta[0] minimal,
                                   // lexicographic min over all 2N candidates
  bool orientation_flipped = false;
  int shift_applied = 0;           // cyclic shift applied (after reversal when
                                   // orientation_flipped)
};

// Reduce entries mod 1, then pick the lexicographically smallest among the N
// cyclic shifts of the forward sequence and the N cyclic shifts of the
// reversed sequence. Ties prefer the forward orientation and the smallest
// shift, making the choice (and idempotence) exact.
CanonicalForm canonicalize(const Eigen::VectorXd& theta);

// Euclidean norm of the per-coordinate wraparound differences
// min(|a-b|, 1-|a-b|): theta lives on the torus.
double torus_distance(const Eigen::VectorXd& a, const Eigen::VectorXd& b);

// A certified orbit with its classification payload; the unit of coalescing
// and the row type of CSV persistence.
struct OrbitRecord {
  double p = 0.0;
  int n = 0;
  Eigen::VectorXd theta;  // canonical
  double alpha = 0.0;
  double beta = 0.0;
  double perimeter = 0.0;
  double residual = 0.0;  // reflection-law residual (not persisted to CSV)
  MorseSignature signature;
  RotationNumber rotation;
  std::uint64_t first_seed_index = 0;
};

// Greedy pass in ascending (alpha, theta-lex) order: a candidate merges into
// an already-kept orbit when their wraparound distance is below the sum of
// the two alphas (an exact-duplicate distance of 0 always merges, so that
// bit-identical records with alpha = 0 cannot both survive). Merging folds
// first_seed_index as the minimum. The output is sorted by
// (perimeter, theta lexicographic); the result is independent of input order.
std::vector<OrbitRecord> coalesce(std::vector<OrbitRecord> orbits);

}  // namespace lpb
