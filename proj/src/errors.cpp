#include "specnorm/errors.hpp"

namespace specnorm {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ZeroMatrix: return "ZeroMatrix";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::NonConvergence: return "NonConvergence";
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NotReal: return "NotReal";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::LoopRejected: return "LoopRejected";
    case ErrorKind::EmptySubset: return "EmptySubset";
    case ErrorKind::EmptyGraph: return "EmptyGraph";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace specnorm
