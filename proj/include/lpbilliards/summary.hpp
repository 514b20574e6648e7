// Deterministic plain-text statistics: the per-signature table shared by the
// `find` summary and the `stats` subcommand.
#pragma once

#include <string>
#include <vector>

#include "lpbilliards/identity.hpp"
#include "lpbilliards/runner.hpp"

namespace lpb {

// Per-signature block: count, percentage, rotation distribution, perimeter
// range. One line per signature, ordered by descending count (ties broken by
// signature lexicographically).
std::string format_stats(const std::vector<OrbitRecord>& records);

// Full run summary: configuration echo, candidate/record counts, failure
// counts, the per-signature table, the discovery curve, and the power-law
// exponent ("n/a" when the fit lacks data).
std::string format_summary(const RunReport& report);

}  // namespace lpb
