#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gwsum {

enum class ErrorKind {
  PositiveGradingRequired,
  UnitConstantTermRequired,
  LambdaFloorViolation,
  ContactDegreeMismatch,
  NegativePointCount,
  BasisMismatch,
  GeneratorMismatch,
  SlotConventionMismatch,
  VDegreeMismatch,
  TruncationViolation,
  NonNilpotentRemainder,
  OddDegreeConstraint,
  InvalidArgument,
  ParseError,
  SchemaViolation,
  InvariantViolation,
};

std::string_view to_string(ErrorKind kind);

// Every recoverable failure in the library is reported through this type; the
// kind names the violated contract so callers (and the CLI) can report it.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Internal consistency checks that must hold on every call path.
inline void check_invariant(bool cond, const std::string& what) {
  if (!cond) throw Error(ErrorKind::InvariantViolation, what);
}

}  // namespace gwsum
