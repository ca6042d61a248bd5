#pragma once

#include <cstdint>

namespace fflambda {

// Upper bound on the number of items any single enumeration may visit
// (field elements, monic polynomials, family members).
inline constexpr std::uint64_t kDefaultEnumerationLimit = std::uint64_t{1} << 31;
std::uint64_t enumeration_limit() noexcept;
void set_enumeration_limit(std::uint64_t limit) noexcept;

// Throws Errc::SizeExceeded when count > enumeration_limit().
void require_enumerable(std::uint64_t count, const char* what);

// base^exp, saturating at UINT64_MAX on overflow.
std::uint64_t checked_pow(std::uint64_t base, unsigned exp) noexcept;

}  // namespace fflambda
