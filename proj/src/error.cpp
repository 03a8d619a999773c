#include "canon/error.hpp"

namespace canon {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidElement: return "invalid-element";
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::InsufficientTruncation: return "insufficient-truncation";
    case ErrorKind::QuadratureOrder: return "quadrature-order";
    case ErrorKind::UnsupportedFunction: return "unsupported-function";
    case ErrorKind::OffShell: return "off-shell";
    case ErrorKind::NotTimelike: return "not-timelike";
    case ErrorKind::ConvergenceFailure: return "convergence-failure";
    case ErrorKind::Parse: return "parse";
  }
  return "unknown";
}

}  // namespace canon
