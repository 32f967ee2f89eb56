#include "eqeta/errors.hpp"

namespace eqeta {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroSeries: return "ZeroSeries";
    case ErrorKind::ZeroLinearForm: return "ZeroLinearForm";
    case ErrorKind::UnreliableCoefficient: return "UnreliableCoefficient";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::SingularGram: return "SingularGram";
    case ErrorKind::UnsupportedType: return "UnsupportedType";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NonRegularDirection: return "NonRegularDirection";
    case ErrorKind::NonDominantWeight: return "NonDominantWeight";
    case ErrorKind::DimensionBoundExceeded: return "DimensionBoundExceeded";
    case ErrorKind::DecompositionFailure: return "DecompositionFailure";
    case ErrorKind::IncompatiblePositivity: return "IncompatiblePositivity";
    case ErrorKind::NoLatticeSolution: return "NoLatticeSolution";
    case ErrorKind::SingularityNotCancelled: return "SingularityNotCancelled";
    case ErrorKind::DegenerateDirection: return "DegenerateDirection";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
  }
  return "Unknown";
}

}  // namespace eqeta
