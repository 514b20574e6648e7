#include "lpbilliards/runner.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <thread>
#include <variant>

#include "lpbilliards/reflect.hpp"

namespace lpb {

namespace {

constexpr double kMinSeedGap = 1e-4;
constexpr int kMaxSeedRetries = 100;

// Circular minimum gap between sorted entries.
double min_circular_gap(const Eigen::VectorXd& theta) {
  std::vector<double> sorted(theta.data(), theta.data() + theta.size());
  std::sort(sorted.begin(), sorted.end());
  double gap = sorted.front() + 1.0 - sorted.back();
  for (size_t i = 1; i < sorted.size(); ++i) {
    gap = std::min(gap, sorted[i] - sorted[i - 1]);
  }
  return gap;
}

void validate_run_config(const RunConfig& config) {
  validate_spec(config.spec);
  validate_config(config.newton);
  if (config.n_bounces < 2) {
    fail(ErrorCode::InvalidArgument, "n_bounces must be >= 2");
  }
  if (config.n_seeds < 1) {
    fail(ErrorCode::InvalidArgument, "n_seeds must be >= 1");
  }
  if (config.batch_size < 1) {
    fail(ErrorCode::InvalidArgument, "batch_size must be >= 1");
  }
}

// Per-seed outcome: a certified record or a failure cause.
using SeedOutcome = std::variant<std::monostate, OrbitRecord, FailureCause>;

FailureCause cause_from_error(const Error& error) {
  switch (error.code()) {
    case ErrorCode::DegeneratePolygon:
      return FailureCause::Degenerate;
    case ErrorCode::SingularHessian:
      return FailureCause::Singular;
    case ErrorCode::Nonfinite:
      return FailureCause::Nonfinite;
    case ErrorCode::Classification:
      return FailureCause::Classification;
    default:
      return FailureCause::Nonfinite;
  }
}

SeedOutcome process_seed(const RunConfig& config, const Eigen::VectorXd& seed,
                         std::uint64_t index) {
  try {
    PolishResult polished =
        polish_and_certify(config.spec, seed, config.newton);
    if (!polished.certificate.certified) {
      return FailureCause::NotCertified;
    }
    CanonicalForm canonical = canonicalize(polished.theta);
    const double residual = reflection_residual(config.spec, canonical.theta);
    if (!(residual < kReflectionTolerance)) {
      return FailureCause::ReflectionGate;
    }
    OrbitRecord record;
    record.p = config.spec.p;
    record.n = config.n_bounces;
    record.theta = std::move(canonical.theta);
    record.alpha = polished.certificate.alpha;
    record.beta = polished.certificate.beta;
    record.perimeter = polished.outcome.eval.value;
    record.residual = residual;
    record.signature =
        morse_signature_from_eigenvalues(polished.outcome.eigenvalues);
    record.rotation = rotation_number(record.theta);
    record.first_seed_index = index;
    return record;
  } catch (const Error& error) {
    return cause_from_error(error);
  }
}

}  // namespace

const char* failure_cause_name(FailureCause cause) {
  switch (cause) {
    case FailureCause::SeedGap:
      return "seed_gap";
    case FailureCause::Degenerate:
      return "degenerate";
    case FailureCause::Singular:
      return "singular";
    case FailureCause::Nonfinite:
      return "nonfinite";
    case FailureCause::NotCertified:
      return "not_certified";
    case FailureCause::ReflectionGate:
      return "reflection_gate";
    case FailureCause::Classification:
      return "classification";
  }
  return "unknown";
}

std::vector<std::optional<Eigen::VectorXd>> generate_seeds(
    std::uint64_t n_seeds, int n_bounces, std::uint64_t rng_seed) {
  std::mt19937_64 engine(rng_seed);
  const auto uniform = [&engine]() {
    // 53-bit mantissa mapping onto [0,1).
    return static_cast<double>(engine() >> 11) * 0x1.0p-53;
  };
  std::vector<std::optional<Eigen::VectorXd>> seeds(n_seeds);
  Eigen::VectorXd draw(n_bounces);
  for (std::uint64_t i = 0; i < n_seeds; ++i) {
    for (int attempt = 0; attempt < kMaxSeedRetries; ++attempt) {
      for (int k = 0; k < n_bounces; ++k) draw[k] = uniform();
      if (min_circular_gap(draw) >= kMinSeedGap) {
        seeds[i] = draw;
        break;
      }
    }
  }
  return seeds;
}

RunReport run(const RunConfig& config) {
  validate_run_config(config);

  RunReport report;
  report.config = config;

  const auto seeds =
      generate_seeds(config.n_seeds, config.n_bounces, config.rng_seed);

  std::vector<SeedOutcome> outcomes(config.n_seeds);
  std::atomic<std::uint64_t> next{0};
  const auto worker = [&]() {
    for (;;) {
      const std::uint64_t index = next.fetch_add(1);
      if (index >= config.n_seeds) return;
      if (!seeds[index]) {
        outcomes[index] = FailureCause::SeedGap;
        continue;
      }
      outcomes[index] = process_seed(config, *seeds[index], index);
    }
  };

  unsigned n_workers = config.workers > 0
                           ? static_cast<unsigned>(config.workers)
                           : std::max(1u, std::thread::hardware_concurrency());
  n_workers = static_cast<unsigned>(
      std::min<std::uint64_t>(n_workers, config.n_seeds));
  if (n_workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    threads.reserve(n_workers);
    for (unsigned w = 0; w < n_workers; ++w) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }

  // Merge in seed order; records are a pure function of the configuration.
  std::vector<OrbitRecord> candidates;
  for (std::uint64_t i = 0; i < config.n_seeds; ++i) {
    if (auto* record = std::get_if<OrbitRecord>(&outcomes[i])) {
      candidates.push_back(std::move(*record));
    } else if (auto* cause = std::get_if<FailureCause>(&outcomes[i])) {
      ++report.failures[*cause];
    }
  }
  report.certified_candidates = candidates.size();
  report.records = coalesce(std::move(candidates));

  // Discovery curve: cumulative unique orbits per batch of seeds consumed.
  for (std::uint64_t consumed = std::min(config.batch_size, config.n_seeds);;
       consumed = std::min(consumed + config.batch_size, config.n_seeds)) {
    std::uint64_t cumulative = 0;
    for (const OrbitRecord& record : report.records) {
      if (record.first_seed_index < consumed) ++cumulative;
    }
    report.discovery_curve.emplace_back(consumed, cumulative);
    if (consumed == config.n_seeds) break;
  }

  try {
    report.power_law_exponent = fit_power_law(report.discovery_curve);
  } catch (const Error&) {
    report.power_law_exponent.reset();
  }
  return report;
}

double fit_power_law(
    const std::vector<std::pair<std::uint64_t, std::uint64_t>>& curve) {
  std::vector<std::pair<double, double>> points;
  for (const auto& [seeds, cumulative] : curve) {
    if (cumulative > 0 && seeds > 0) {
      points.emplace_back(std::log(static_cast<double>(seeds)),
                          std::log(static_cast<double>(cumulative)));
    }
  }
  if (points.size() < 3) {
    fail(ErrorCode::Statistics,
         "power-law fit needs at least 3 positive curve points");
  }
  double mean_x = 0.0, mean_y = 0.0;
  for (const auto& [x, y] : points) {
    mean_x += x;
    mean_y += y;
  }
  mean_x /= static_cast<double>(points.size());
  mean_y /= static_cast<double>(points.size());
  double sxx = 0.0, sxy = 0.0;
  for (const auto& [x, y] : points) {
    sxx += (x - mean_x) * (x - mean_x);
    sxy += (x - mean_x) * (y - mean_y);
  }
  if (sxx == 0.0) {
    fail(ErrorCode::Statistics, "power-law fit needs distinct seed counts");
  }
  return sxy / sxx;
}

}  // namespace lpb
