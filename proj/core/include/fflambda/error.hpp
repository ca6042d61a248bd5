#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fflambda {

enum class Errc {
  NotPrime,
  EvenCharacteristic,
  SizeExceeded,
  ContextMismatch,
  NoEmbedding,
  ZeroPolynomial,
  ParseError,
  InvalidArgument,
  NotMonic,
  NotSquarefree,
  EvenDegree,
  DegreeTooSmall,
  FunctionalEquationViolation,
  IndexOutOfRange,
  RootFindingFailure,
  NonIntegralCoefficient,
  ProfileIncomplete,
  IndeterminateNearBoundary,
  NotRational,
  NonDivisible,
  ClosedFormMismatch,
  BadReduction,
  EvenPrime,
  HasseViolation,
  NotSupersingular,
  Ramified,
  CheckpointMismatch,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace fflambda
