#pragma once

// Exact polynomial arithmetic over Q, used where floating point would blur
// repeated roots or integrality.

#include <cstdint>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace fflambda {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Coefficients constant term first, no trailing zeros (empty = zero).
using RatPoly = std::vector<Rational>;

RatPoly to_rat_poly(const std::vector<std::int64_t>& coeffs);
void rat_strip(RatPoly& p);
int rat_degree(const RatPoly& p) noexcept;
RatPoly rat_derivative(const RatPoly& p);
std::pair<RatPoly, RatPoly> rat_divmod(const RatPoly& a, const RatPoly& b);
// Monic gcd over Q.
RatPoly rat_gcd(RatPoly a, RatPoly b);
RatPoly rat_mul(const RatPoly& a, const RatPoly& b);

// Yun decomposition p = lc * prod f_i^i with squarefree, pairwise coprime
// monic f_i; returns (f_i, i) for the nonconstant f_i.
std::vector<std::pair<RatPoly, int>> squarefree_decomposition(const RatPoly& p);

// Elementary symmetric e_0..e_k from power sums S_1..S_k (Newton's identities).
std::vector<Rational> elementary_from_power_sums(const std::vector<Rational>& power_sums);

}  // namespace fflambda
