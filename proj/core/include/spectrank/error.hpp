#pragma once

#include <stdexcept>
#include <string>

namespace spectrank {

// Failure categories shared across the library. The CLI maps numerical
// failures and input failures to distinct process exit codes.
enum class ErrorKind {
  NotSquare,
  NegativeEntry,
  NonFiniteValue,
  DimensionMismatch,
  NullRow,
  NoConvergence,
  DivergentSeries,
  NotStochastic,
  SpectralRadiusNotOne,
  SingularSolve,
  SeriesDiverged,
  NotReciprocal,
  NotEigenvector,
  ZeroMatrix,
  TooLarge,
  InvalidArgument,
  ParseError,
  NonFiniteWeight,
  UnsupportedField,
  NodeSetMismatch,
  IoError,
};

const char* to_string(ErrorKind kind);

// True for failures of an otherwise well-posed computation (iteration caps,
// divergent series); false for malformed or out-of-contract input.
bool is_numerical(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

}  // namespace spectrank
