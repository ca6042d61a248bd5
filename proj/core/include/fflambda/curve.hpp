#pragma once

// Point counts on y^2 = D(x) and the zeta numerator they determine.

#include <cstdint>
#include <vector>

#include "fflambda/lfunction.hpp"

namespace fflambda {

// Points over F_{q^m} on the smooth model of y^2 = D(x): the affine points
// plus the single point at infinity of an odd-degree model.
std::uint64_t count_points(const GoodPair& pair, unsigned m);

struct CountProfile {
  std::uint64_t q = 0;
  Poly D;
  std::vector<std::uint64_t> N;  // N_1 .. N_{2g}
};

CountProfile count_profile(const GoodPair& pair);

// Power sums S_m = q^m + 1 - N_m fed through Newton's identities over Q;
// needs N_1..N_{2g}. Throws NonIntegralCoefficient if the result is not
// integral and ProfileIncomplete on short input.
LData zeta_numerator(std::uint64_t q, int genus, const std::vector<std::uint64_t>& N);
LData zeta_numerator(const CountProfile& profile);

enum class Extremality { Maximal, Minimal, Neither };
const char* extremality_name(Extremality e) noexcept;

// Maximal iff N = q + 2 sqrt(q) + 1, minimal iff N = q - 2 sqrt(q) + 1; only
// possible for square q.
Extremality classify_extremal(std::uint64_t N, std::uint64_t q) noexcept;

// Exact integer square root if n is a perfect square.
bool exact_sqrt(std::uint64_t n, std::uint64_t& root) noexcept;

// Character-sum L-polynomial and point-count zeta numerator agree exactly.
bool crosscheck(const GoodPair& pair);

// |q^m + 1 - N_m| <= 2g q^{m/2} for every m in the profile.
bool within_weil_bound(const CountProfile& profile);

}  // namespace fflambda
