#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace eqeta {

enum class ErrorKind {
  ZeroSeries,
  ZeroLinearForm,
  UnreliableCoefficient,
  SingularMatrix,
  SingularGram,
  UnsupportedType,
  InvalidArgument,
  NonRegularDirection,
  NonDominantWeight,
  DimensionBoundExceeded,
  DecompositionFailure,
  IncompatiblePositivity,
  NoLatticeSolution,
  SingularityNotCancelled,
  DegenerateDirection,
  OutOfRange,
  ParseError,
  ValidationError,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries a kind so callers (and the CLI
// exit-code mapping) can dispatch without parsing messages.
class EtaError : public std::runtime_error {
 public:
  EtaError(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw EtaError(kind, std::string(to_string(kind)) + ": " + message);
}

}  // namespace eqeta
