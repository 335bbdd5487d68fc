#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace specnorm {

enum class ErrorKind {
  ZeroMatrix,
  ZeroVector,
  RankDeficient,
  NonConvergence,
  NotHermitian,
  NotReal,
  CapExceeded,
  ParseError,
  LoopRejected,
  EmptySubset,
  EmptyGraph,
  OutOfRange,
  InvalidArgument,
  // A certified bound was violated. Signals a bug, never bad input.
  InvariantViolation,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

}  // namespace specnorm
