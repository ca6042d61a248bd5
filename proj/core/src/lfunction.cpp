#include "fflambda/lfunction.hpp"

#include <cmath>
#include <string>

#include "fflambda/exact_poly.hpp"
#include "fflambda/limits.hpp"
#include "roots.hpp"

namespace fflambda {
namespace {

constexpr std::int8_t kUnset = 2;

// Tables of (D/f) by degree. A reducible monic f of degree n has an
// irreducible factor P of degree <= n/2, so every such f is reached as P*h
// with (D/f) = (D/P)(D/h); the entries left unset are the irreducibles.
class KroneckerSieve {
 public:
  KroneckerSieve(const GoodPair& pair, unsigned max_degree)
      : D_(pair.D()), field_(pair.field()), max_degree_(max_degree) {
    tables_.push_back({1});
    irreducibles_.emplace_back();
  }

  const std::vector<std::int8_t>& table(unsigned n) {
    while (tables_.size() <= n) extend();
    return tables_[n];
  }

 private:
  const std::vector<Poly>& monics(unsigned n) {
    if (monics_.size() <= n) monics_.resize(n + 1);
    auto& v = monics_[n];
    if (v.empty()) {
      MonicPolys all(field_, n);
      v.reserve(all.size());
      for (std::uint64_t k = 0; k < all.size(); ++k) v.push_back(all.at(k));
    }
    return v;
  }

  void extend() {
    const auto n = static_cast<unsigned>(tables_.size());
    MonicPolys all(field_, n);
    std::vector<std::int8_t> t(all.size(), kUnset);
    for (unsigned d = 1; 2 * d <= n; ++d) {
      const auto& hs = monics(n - d);
      const auto& chi_h = tables_[n - d];
      for (const auto& [P, chi_p] : irreducibles_[d]) {
        for (std::size_t k = 0; k < hs.size(); ++k) {
          t[monic_index(P * hs[k])] = static_cast<std::int8_t>(chi_p * chi_h[k]);
        }
      }
    }
    std::vector<std::pair<Poly, std::int8_t>> irr;
    const bool keep = 2 * n <= max_degree_;
    for (std::uint64_t k = 0; k < all.size(); ++k) {
      if (t[k] != kUnset) continue;
      Poly P = all.at(k);
      t[k] = static_cast<std::int8_t>(kronecker_irreducible(D_, P));
      if (keep) irr.emplace_back(std::move(P), t[k]);
    }
    tables_.push_back(std::move(t));
    irreducibles_.push_back(std::move(irr));
  }

  Poly D_;
  FieldPtr field_;
  unsigned max_degree_;
  std::vector<std::vector<std::int8_t>> tables_;
  std::vector<std::vector<std::pair<Poly, std::int8_t>>> irreducibles_;
  std::vector<std::vector<Poly>> monics_;
};

std::int64_t sum_table(const std::vector<std::int8_t>& t) {
  std::int64_t s = 0;
  for (auto v : t) s += v;
  return s;
}

}  // namespace

std::vector<Errc> good_pair_violations(const Poly& D) {
  std::vector<Errc> out;
  if (D.field()->characteristic() == 2) out.push_back(Errc::EvenCharacteristic);
  if (D.is_zero()) {
    out.push_back(Errc::ZeroPolynomial);
    return out;
  }
  if (!D.is_monic()) out.push_back(Errc::NotMonic);
  if (!is_squarefree(D)) out.push_back(Errc::NotSquarefree);
  if (D.degree() % 2 == 0) out.push_back(Errc::EvenDegree);
  if (D.degree() < 3) out.push_back(Errc::DegreeTooSmall);
  return out;
}

GoodPair check_good(const Poly& D) {
  const auto violations = good_pair_violations(D);
  if (!violations.empty()) {
    std::string all;
    for (auto v : violations) {
      if (!all.empty()) all += ", ";
      all += errc_name(v);
    }
    throw Error(violations.front(), D.to_string() + " over " + D.field()->name() + " is not good (" + all + ")");
  }
  return GoodPair(D);
}

bool satisfies_functional_equation(const LData& L) noexcept {
  if (L.g < 0 || L.c.size() != static_cast<std::size_t>(2 * L.g + 1) || L.c[0] != 1) return false;
  std::int64_t qn = 1;
  for (int n = 0; n <= L.g; ++n) {
    if (L.c[static_cast<std::size_t>(L.g + n)] != qn * L.c[static_cast<std::size_t>(L.g - n)]) return false;
    qn *= static_cast<std::int64_t>(L.q);
  }
  return true;
}

void validate(const LData& L) {
  if (L.c.empty() || L.c[0] != 1) throw Error(Errc::FunctionalEquationViolation, "c_0 must be 1");
  if (L.c.size() != static_cast<std::size_t>(2 * L.g + 1)) {
    throw Error(Errc::FunctionalEquationViolation, "expected 2g+1 coefficients");
  }
  if (!satisfies_functional_equation(L)) {
    throw Error(Errc::FunctionalEquationViolation, "c_{g+n} != q^n c_{g-n}");
  }
}

std::vector<std::int8_t> kronecker_table(const GoodPair& pair, unsigned n) {
  KroneckerSieve sieve(pair, n);
  return sieve.table(n);
}

std::int64_t compute_c(const GoodPair& pair, unsigned n) {
  require_enumerable(checked_pow(pair.q(), n), "compute_c");
  return sum_table(kronecker_table(pair, n));
}

LData compute_L(const GoodPair& pair, const LOptions& opts) {
  const int g = pair.genus();
  const auto top = static_cast<unsigned>(2 * g);
  std::uint64_t total = 0;
  for (unsigned n = 0; n <= top; ++n) total += checked_pow(pair.q(), n);
  require_enumerable(total, "compute_L");
  const bool check_vanishing = checked_pow(pair.q(), top + 1) <= opts.vanishing_check_limit;

  KroneckerSieve sieve(pair, check_vanishing ? top + 1 : top);
  LData L;
  L.q = pair.q();
  L.g = g;
  L.D = pair.D().to_string();
  for (unsigned n = 0; n <= top; ++n) L.c.push_back(sum_table(sieve.table(n)));
  if (check_vanishing && sum_table(sieve.table(top + 1)) != 0) {
    throw Error(Errc::FunctionalEquationViolation, "c_{2g+1} does not vanish for " + *L.D);
  }
  validate(L);
  return L;
}

double phi(const LData& L, int n) {
  if (n < 0 || n > L.g) throw Error(Errc::IndexOutOfRange, "Phi index " + std::to_string(n));
  return static_cast<double>(L.c[static_cast<std::size_t>(L.g - n)]) *
         std::pow(static_cast<double>(L.q), n / 2.0);
}

InverseRoots inverse_roots(const LData& L, double tol_weil) {
  InverseRoots out;
  const RatPoly P = to_rat_poly(L.c);
  for (const auto& [f, mult] : squarefree_decomposition(P)) {
    // Inverse roots of f are the roots of its reversal, which is monic up to
    // the nonzero constant term f(0).
    std::vector<long double> rev;
    for (auto it = f.rbegin(); it != f.rend(); ++it) rev.push_back(it->convert_to<long double>());
    for (const auto& r : detail::polynomial_roots(rev)) {
      for (int k = 0; k < mult; ++k) out.roots.push_back(r);
    }
  }
  if (out.roots.size() != static_cast<std::size_t>(rat_degree(P))) {
    throw Error(Errc::RootFindingFailure, "root count does not match the degree");
  }
  const double sq = std::sqrt(static_cast<double>(L.q));
  for (const auto& r : out.roots) out.max_deviation = std::max(out.max_deviation, std::abs(std::abs(r) - sq));
  out.weil_ok = out.max_deviation <= tol_weil;
  return out;
}

}  // namespace fflambda
