#include "fflambda/exact_poly.hpp"

#include "fflambda/error.hpp"

namespace fflambda {

RatPoly to_rat_poly(const std::vector<std::int64_t>& coeffs) {
  RatPoly p(coeffs.begin(), coeffs.end());
  rat_strip(p);
  return p;
}

void rat_strip(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int rat_degree(const RatPoly& p) noexcept { return static_cast<int>(p.size()) - 1; }

RatPoly rat_derivative(const RatPoly& p) {
  RatPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long long>(i));
  rat_strip(d);
  return d;
}

std::pair<RatPoly, RatPoly> rat_divmod(const RatPoly& a, const RatPoly& b) {
  if (b.empty()) throw Error(Errc::ZeroPolynomial, "division by the zero polynomial");
  if (a.size() < b.size()) return {RatPoly{}, a};
  RatPoly rem = a;
  RatPoly quot(a.size() - b.size() + 1);
  const std::size_t db = b.size() - 1;
  for (std::size_t k = rem.size(); k-- > db;) {
    if (rem[k] == 0) continue;
    Rational c = rem[k] / b.back();
    quot[k - db] = c;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= c * b[j];
  }
  rem.resize(db);
  rat_strip(rem);
  rat_strip(quot);
  return {quot, rem};
}

RatPoly rat_gcd(RatPoly a, RatPoly b) {
  rat_strip(a);
  rat_strip(b);
  while (!b.empty()) {
    RatPoly r = rat_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Rational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

RatPoly rat_mul(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  rat_strip(c);
  return c;
}

std::vector<std::pair<RatPoly, int>> squarefree_decomposition(const RatPoly& p) {
  std::vector<std::pair<RatPoly, int>> out;
  if (rat_degree(p) <= 0) return out;
  RatPoly a = p;
  const Rational lead = a.back();
  for (auto& c : a) c /= lead;
  const RatPoly da = rat_derivative(a);
  RatPoly g = rat_gcd(a, da);
  RatPoly b = rat_divmod(a, g).first;
  RatPoly c = rat_divmod(da, g).first;
  RatPoly d = c;
  {
    RatPoly db = rat_derivative(b);
    if (d.size() < db.size()) d.resize(db.size());
    for (std::size_t i = 0; i < db.size(); ++i) d[i] -= db[i];
    rat_strip(d);
  }
  int i = 1;
  while (rat_degree(b) > 0) {
    RatPoly f = rat_gcd(b, d);
    b = rat_divmod(b, f).first;
    c = rat_divmod(d, f).first;
    if (rat_degree(f) > 0) out.emplace_back(f, i);
    RatPoly db = rat_derivative(b);
    d = c;
    if (d.size() < db.size()) d.resize(db.size());
    for (std::size_t k = 0; k < db.size(); ++k) d[k] -= db[k];
    rat_strip(d);
    ++i;
  }
  return out;
}

std::vector<Rational> elementary_from_power_sums(const std::vector<Rational>& power_sums) {
  // k e_k = sum_{i=1}^{k} (-1)^{i-1} e_{k-i} S_i
  std::vector<Rational> e{Rational(1)};
  for (std::size_t k = 1; k <= power_sums.size(); ++k) {
    Rational acc = 0;
    for (std::size_t i = 1; i <= k; ++i) {
      const Rational term = e[k - i] * power_sums[i - 1];
      if (i % 2 == 1) {
        acc += term;
      } else {
        acc -= term;
      }
    }
    e.push_back(acc / static_cast<long long>(k));
  }
  return e;
}

}  // namespace fflambda
