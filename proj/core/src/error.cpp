#include "spectrank/error.hpp"

namespace spectrank {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::NegativeEntry: return "NegativeEntry";
    case ErrorKind::NonFiniteValue: return "NonFiniteValue";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NullRow: return "NullRow";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::DivergentSeries: return "DivergentSeries";
    case ErrorKind::NotStochastic: return "NotStochastic";
    case ErrorKind::SpectralRadiusNotOne: return "SpectralRadiusNotOne";
    case ErrorKind::SingularSolve: return "SingularSolve";
    case ErrorKind::SeriesDiverged: return "SeriesDiverged";
    case ErrorKind::NotReciprocal: return "NotReciprocal";
    case ErrorKind::NotEigenvector: return "NotEigenvector";
    case ErrorKind::ZeroMatrix: return "ZeroMatrix";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NonFiniteWeight: return "NonFiniteWeight";
    case ErrorKind::UnsupportedField: return "UnsupportedField";
    case ErrorKind::NodeSetMismatch: return "NodeSetMismatch";
    case ErrorKind::IoError: return "IoError";
  }
  return "UnknownError";
}

bool is_numerical(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NoConvergence:
    case ErrorKind::DivergentSeries:
    case ErrorKind::SeriesDiverged:
    case ErrorKind::SingularSolve:
      return true;
    default:
      return false;
  }
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

}  // namespace spectrank
