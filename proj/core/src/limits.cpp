#include "fflambda/limits.hpp"

#include <atomic>
#include <limits>
#include <string>

#include "fflambda/error.hpp"

namespace fflambda {
namespace {

std::atomic<std::uint64_t> g_limit{kDefaultEnumerationLimit};

}  // namespace

std::uint64_t enumeration_limit() noexcept { return g_limit.load(std::memory_order_relaxed); }

void set_enumeration_limit(std::uint64_t limit) noexcept {
  g_limit.store(limit, std::memory_order_relaxed);
}

void require_enumerable(std::uint64_t count, const char* what) {
  if (count > enumeration_limit()) {
    throw Error(Errc::SizeExceeded, std::string(what) + " needs " + std::to_string(count) +
                                        " items, limit is " + std::to_string(enumeration_limit()));
  }
}

std::uint64_t checked_pow(std::uint64_t base, unsigned exp) noexcept {
  std::uint64_t out = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && out > std::numeric_limits<std::uint64_t>::max() / base) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    out *= base;
  }
  return out;
}

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::EvenCharacteristic: return "EvenCharacteristic";
    case Errc::SizeExceeded: return "SizeExceeded";
    case Errc::ContextMismatch: return "ContextMismatch";
    case Errc::NoEmbedding: return "NoEmbedding";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::NotMonic: return "NotMonic";
    case Errc::NotSquarefree: return "NotSquarefree";
    case Errc::EvenDegree: return "EvenDegree";
    case Errc::DegreeTooSmall: return "DegreeTooSmall";
    case Errc::FunctionalEquationViolation: return "FunctionalEquationViolation";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::RootFindingFailure: return "RootFindingFailure";
    case Errc::NonIntegralCoefficient: return "NonIntegralCoefficient";
    case Errc::ProfileIncomplete: return "ProfileIncomplete";
    case Errc::IndeterminateNearBoundary: return "IndeterminateNearBoundary";
    case Errc::NotRational: return "NotRational";
    case Errc::NonDivisible: return "NonDivisible";
    case Errc::ClosedFormMismatch: return "ClosedFormMismatch";
    case Errc::BadReduction: return "BadReduction";
    case Errc::EvenPrime: return "EvenPrime";
    case Errc::HasseViolation: return "HasseViolation";
    case Errc::NotSupersingular: return "NotSupersingular";
    case Errc::Ramified: return "Ramified";
    case Errc::CheckpointMismatch: return "CheckpointMismatch";
  }
  return "Unknown";
}

}  // namespace fflambda
