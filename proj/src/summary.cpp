#include "lpbilliards/summary.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <map>
#include <tuple>

#include "lpbilliards/format.hpp"

namespace lpb {

namespace {

using SignatureKey = std::tuple<int, int, int>;
using RotationKey = std::pair<int, int>;  // (den, num) for sort order

std::string signature_text(const SignatureKey& sig) {
  return "(" + std::to_string(std::get<0>(sig)) + "," +
         std::to_string(std::get<1>(sig)) + "," +
         std::to_string(std::get<2>(sig)) + ")";
}

std::string rotation_text(const RotationKey& rot) {
  return std::to_string(rot.second) + "/" + std::to_string(rot.first);
}

}  // namespace

std::string format_stats(const std::vector<OrbitRecord>& records) {
  struct Bucket {
    std::uint64_t count = 0;
    std::map<RotationKey, std::uint64_t> rotations;
    double perimeter_min = 0.0;
    double perimeter_max = 0.0;
  };
  std::map<SignatureKey, Bucket> buckets;
  for (const OrbitRecord& record : records) {
    const SignatureKey key{record.signature.n_plus, record.signature.n_minus,
                           record.signature.n_zero};
    Bucket& bucket = buckets[key];
    if (bucket.count == 0) {
      bucket.perimeter_min = record.perimeter;
      bucket.perimeter_max = record.perimeter;
    } else {
      bucket.perimeter_min = std::min(bucket.perimeter_min, record.perimeter);
      bucket.perimeter_max = std::max(bucket.perimeter_max, record.perimeter);
    }
    ++bucket.count;
    ++bucket.rotations[{record.rotation.den, record.rotation.num}];
  }

  // Descending count, ties by signature lexicographically.
  std::vector<std::pair<SignatureKey, const Bucket*>> ordered;
  ordered.reserve(buckets.size());
  for (const auto& [key, bucket] : buckets) ordered.emplace_back(key, &bucket);
  std::sort(ordered.begin(), ordered.end(),
            [](const auto& a, const auto& b) {
              if (a.second->count != b.second->count) {
                return a.second->count > b.second->count;
              }
              return a.first < b.first;
            });

  const double total = static_cast<double>(records.size());
  std::string out;
  out += "orbits=" + std::to_string(records.size()) + "\n";
  for (const auto& [key, bucket] : ordered) {
    out += "signature " + signature_text(key) +
           " count=" + std::to_string(bucket->count) + " share=" +
           format_percent(100.0 * static_cast<double>(bucket->count) / total) +
           "%";
    out += " rotations=";
    bool first = true;
    for (const auto& [rot, count] : bucket->rotations) {
      if (!first) out += ",";
      first = false;
      out += rotation_text(rot) + ":" + std::to_string(count);
    }
    out += " perimeter=[" + format_double(bucket->perimeter_min) + "," +
           format_double(bucket->perimeter_max) + "]\n";
  }
  return out;
}

std::string format_summary(const RunReport& report) {
  std::string out;
  out += "run p=" + format_p(report.config.spec.p) +
         " N=" + std::to_string(report.config.n_bounces) +
         " seeds=" + std::to_string(report.config.n_seeds) +
         " rng_seed=" + std::to_string(report.config.rng_seed) +
         " threshold=" + format_double(report.config.newton.threshold) +
         " max_steps=" + std::to_string(report.config.newton.max_steps) +
         " step_tol=" + format_double(report.config.newton.step_tol) +
         " batch_size=" + std::to_string(report.config.batch_size) + "\n";
  out += "certified_candidates=" + std::to_string(report.certified_candidates) +
         " unique_orbits=" + std::to_string(report.records.size()) + "\n";

  out += "failures";
  for (FailureCause cause :
       {FailureCause::SeedGap, FailureCause::Degenerate, FailureCause::Singular,
        FailureCause::Nonfinite, FailureCause::NotCertified,
        FailureCause::ReflectionGate, FailureCause::Classification}) {
    std::uint64_t count = 0;
    if (auto it = report.failures.find(cause); it != report.failures.end()) {
      count = it->second;
    }
    out += std::string(" ") + failure_cause_name(cause) + "=" +
           std::to_string(count);
  }
  out += "\n";

  out += format_stats(report.records);

  out += "discovery_curve";
  for (const auto& [seeds, cumulative] : report.discovery_curve) {
    out += " " + std::to_string(seeds) + ":" + std::to_string(cumulative);
  }
  out += "\n";

  out += "power_law_exponent=";
  out += report.power_law_exponent ? format_double(*report.power_law_exponent)
                                   : "n/a";
  out += "\n";
  return out;
}

}  // namespace lpb
