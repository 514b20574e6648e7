// Error vocabulary shared by all modules. Exceptions are internal to the C++
// core; the C API translates them to lpb_status codes at the boundary.
#pragma once

#include <stdexcept>
#include <string>

namespace lpb {

enum class ErrorCode {
  InvalidArgument,
  DegeneratePolygon,
  SingularHessian,
  Nonfinite,
  NotCertified,
  Classification,
  Statistics,
  Io,
  Parse,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace lpb
