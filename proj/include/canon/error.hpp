#pragma once

#include <stdexcept>
#include <string>

namespace canon {

enum class ErrorKind {
  InvalidElement,
  InvalidArgument,
  InsufficientTruncation,
  QuadratureOrder,
  UnsupportedFunction,
  OffShell,
  NotTimelike,
  ConvergenceFailure,
  Parse,
};

/// Error raised by every module; `kind()` lets callers map to exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

const char* to_string(ErrorKind kind) noexcept;

}  // namespace canon
