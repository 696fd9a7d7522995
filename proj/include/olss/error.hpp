#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace olss {

enum class ErrorCode {
  EmptyEdge,
  CapExceeded,
  ZeroClass,
  BadParam,
  DivisionByZero,
  FieldMismatch,
  SizeMismatch,
  ZeroSecret,
  SingletonEdge,
  DealerFailure,
  FieldTooSmall,
  InvalidCover,
  InvalidSystem,
  Infeasible,
  Parse,
  IO,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (and the CLI exit path) can branch on the kind of failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace olss
