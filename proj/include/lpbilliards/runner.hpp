// End-to-end sweep: seed generation, parallel polish-and-certify, reflection
// gate, canonicalization, classification, coalescing, and discovery
// statistics. Results are a pure function of the configuration — the worker
// count never changes the record set.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lpbilliards/identity.hpp"
#include "lpbilliards/newton.hpp"

namespace lpb {

struct RunConfig {
  BoundarySpec spec{3.0};
  int n_bounces = 5;
  std::uint64_t n_seeds = 1000;
  std::uint64_t rng_seed = 0;
  NewtonConfig newton;
  std::uint64_t batch_size = 1000;  // discovery-curve bucketing
  int workers = 0;                  // <= 0 selects hardware concurrency
};

enum class FailureCause {
  SeedGap,         // min-gap rejection retries exhausted
  Degenerate,      // degenerate polygon during polishing
  Singular,        // singular Hessian
  Nonfinite,       // non-finite Newton step
  NotCertified,    // alpha-test failed at the final iterate
  ReflectionGate,  // certified but reflection residual >= 1e-6
  Classification,  // eigendecomposition/winding failure
};

const char* failure_cause_name(FailureCause cause);

struct RunReport {
  RunConfig config;
  std::vector<OrbitRecord> records;  // unique certified orbits
  std::uint64_t certified_candidates = 0;  // before coalescing
  std::map<FailureCause, std::uint64_t> failures;
  // (seeds consumed, cumulative unique orbits) per batch boundary.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> discovery_curve;
  std::optional<double> power_law_exponent;  // absent when the fit lacks data
};

// Deterministic i.i.d. uniform [0,1) seed vectors from std::mt19937_64 with
// the 53-bit mapping (x >> 11) * 2^-53. Vectors whose circular minimum vertex
// gap is below 1e-4 are redrawn up to 100 times; exhaustion yields an empty
// slot (counted as a SeedGap failure by run()).
std::vector<std::optional<Eigen::VectorXd>> generate_seeds(
    std::uint64_t n_seeds, int n_bounces, std::uint64_t rng_seed);

RunReport run(const RunConfig& config);

// Least-squares slope of log(cumulative) on log(seeds) over curve points with
// positive cumulative count. Throws Statistics when fewer than 3 such points
// exist.
double fit_power_law(
    const std::vector<std::pair<std::uint64_t, std::uint64_t>>& curve);

}  // namespace lpb
