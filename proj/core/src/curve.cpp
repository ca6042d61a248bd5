#include "fflambda/curve.hpp"

#include <cmath>
#include <string>

#include "fflambda/exact_poly.hpp"
#include "fflambda/limits.hpp"

namespace fflambda {

std::uint64_t count_points(const GoodPair& pair, unsigned m) {
  if (m == 0) throw Error(Errc::InvalidArgument, "extension degree must be at least 1");
  require_enumerable(checked_pow(pair.q(), m), "count_points");
  const FieldPtr ext = pair.field()->extension(m);
  std::vector<FieldElem> coeffs;
  for (const auto& c : pair.D().coeffs()) coeffs.push_back(ext->embed(c));
  std::int64_t affine = 0;
  for (std::uint64_t k = 0; k < ext->order(); ++k) {
    const FieldElem x = ext->from_index(k);
    FieldElem v = ext->zero();
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = ext->add(ext->mul(v, x), *it);
    affine += 1 + ext->quad_char(v);
  }
  return static_cast<std::uint64_t>(affine) + 1;
}

CountProfile count_profile(const GoodPair& pair) {
  CountProfile profile{pair.q(), pair.D(), {}};
  for (int m = 1; m <= 2 * pair.genus(); ++m) profile.N.push_back(count_points(pair, static_cast<unsigned>(m)));
  return profile;
}

LData zeta_numerator(std::uint64_t q, int genus, const std::vector<std::uint64_t>& N) {
  if (genus < 0 || N.size() < static_cast<std::size_t>(2 * genus)) {
    throw Error(Errc::ProfileIncomplete, "need N_1..N_{2g}");
  }
  std::vector<Rational> power_sums;
  BigInt qm = 1;
  for (int m = 1; m <= 2 * genus; ++m) {
    qm *= q;
    power_sums.emplace_back(qm + 1 - BigInt(N[static_cast<std::size_t>(m - 1)]));
  }
  const auto e = elementary_from_power_sums(power_sums);
  LData L;
  L.q = q;
  L.g = genus;
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (denominator(e[k]) != 1) {
      throw Error(Errc::NonIntegralCoefficient, "e_" + std::to_string(k) + " is not an integer");
    }
    const BigInt v = numerator(e[k]);
    L.c.push_back((k % 2 == 0 ? v : BigInt(-v)).convert_to<std::int64_t>());
  }
  return L;
}

LData zeta_numerator(const CountProfile& profile) {
  const int genus = (profile.D.degree() - 1) / 2;
  LData L = zeta_numerator(profile.q, genus, profile.N);
  L.D = profile.D.to_string();
  return L;
}

const char* extremality_name(Extremality e) noexcept {
  switch (e) {
    case Extremality::Maximal: return "maximal";
    case Extremality::Minimal: return "minimal";
    case Extremality::Neither: return "neither";
  }
  return "neither";
}

bool exact_sqrt(std::uint64_t n, std::uint64_t& root) noexcept {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  root = r;
  return r * r == n;
}

Extremality classify_extremal(std::uint64_t N, std::uint64_t q) noexcept {
  std::uint64_t s = 0;
  if (!exact_sqrt(q, s)) return Extremality::Neither;
  if (N == q + 2 * s + 1) return Extremality::Maximal;
  if (q + 1 >= 2 * s && N == q + 1 - 2 * s) return Extremality::Minimal;
  return Extremality::Neither;
}

bool crosscheck(const GoodPair& pair) {
  const LData from_characters = compute_L(pair);
  const LData from_points = zeta_numerator(count_profile(pair));
  return from_characters.c == from_points.c;
}

bool within_weil_bound(const CountProfile& profile) {
  const int genus = (profile.D.degree() - 1) / 2;
  BigInt qm = 1;
  for (std::size_t m = 1; m <= profile.N.size(); ++m) {
    qm *= profile.q;
    const BigInt a = qm + 1 - BigInt(profile.N[m - 1]);
    if (a * a > 4 * genus * genus * qm) return false;
  }
  return true;
}

}  // namespace fflambda
