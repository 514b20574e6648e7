#include "lpbilliards/format.hpp"

#include <charconv>
#include <cstdio>
#include <system_error>

namespace lpb {

std::string format_double(double value) {
  char buffer[64];
  const auto result =
      std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

std::string format_p(double value) {
  std::string text = format_double(value);
  bool all_digits = !text.empty();
  for (size_t i = (text[0] == '-') ? 1 : 0; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      all_digits = false;
      break;
    }
  }
  if (all_digits) text += ".0";
  return text;
}

std::string format_percent(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.1f", value);
  return buffer;
}

bool parse_double(const std::string& token, double& out) {
  const char* begin = token.data();
  const char* end = token.data() + token.size();
  const auto result = std::from_chars(begin, end, out);
  return result.ec == std::errc() && result.ptr == end && !token.empty();
}

}  // namespace lpb
