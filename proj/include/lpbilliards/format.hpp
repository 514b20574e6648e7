// Deterministic number formatting shared by CSV, SVG, and summaries.
#pragma once

#include <string>

namespace lpb {

// Shortest decimal string that round-trips to the same double bit pattern
// (std::to_chars general form).
std::string format_double(double value);

// Shortest round-trip form guaranteed to contain a decimal point, as used in
// default CSV file names ("3" -> "3.0", "2.99" -> "2.99").
std::string format_p(double value);

// Fixed one-decimal percentage ("42.7").
std::string format_percent(double value);

// Parse a double; returns false when the token is not a complete valid
// decimal.
bool parse_double(const std::string& token, double& out);

}  // namespace lpb
