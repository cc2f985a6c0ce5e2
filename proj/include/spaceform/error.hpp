#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace spaceform {

enum class ErrorCode {
  InvalidOrder,
  Structure,
  NotAGroup,
  Size,
  Domain,
  IncompleteTable,
  NotAHomomorphism,
  InvalidTable,
  UnsupportedGroup,
  NotRealizable,
  InvalidDimension,
  Parse,
  Io,
  InvalidArgument,
  Internal,
};

std::string_view error_code_name(ErrorCode code) noexcept;

// Process exit status for a failure: 1 input error, 2 validation failure,
// 3 internal invariant breach.
int exit_code_for(ErrorCode code) noexcept;

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

}  // namespace spaceform
