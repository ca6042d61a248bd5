#include "fflambda/deformation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "fflambda/exact_poly.hpp"
#include "roots.hpp"

namespace fflambda {
namespace {

using Coeffs = std::vector<long double>;

// Remainders whose coefficients all fall below this (after normalising the
// chain to unit max-norm) are treated as zero, i.e. a numerically repeated root.
constexpr long double kSturmGuard = 1e-11L;
// Companion eigenvalues with |Im| below this count as real.
constexpr double kImagTol = 1e-5;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

long double max_abs(const Coeffs& p) {
  long double m = 0;
  for (auto c : p) m = std::max(m, std::fabs(c));
  return m;
}

void normalise(Coeffs& p) {
  const long double m = max_abs(p);
  if (m > 0) {
    for (auto& c : p) c /= m;
  }
}

Coeffs remainder(const Coeffs& a, const Coeffs& b) {
  Coeffs r = a;
  const std::size_t db = b.size() - 1;
  for (std::size_t k = r.size(); k-- > db;) {
    const long double c = r[k] / b.back();
    for (std::size_t j = 0; j <= db; ++j) r[k - db + j] -= c * b[j];
  }
  r.resize(db);
  return r;
}

long double eval(const Coeffs& p, long double x) {
  long double acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int sign_changes(const std::vector<Coeffs>& chain, long double x) {
  int changes = 0;
  int prev = 0;
  for (const auto& p : chain) {
    const long double v = eval(p, x);
    const int s = v > 0 ? 1 : (v < 0 ? -1 : 0);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

// Vieta bound: if all d roots lie in [-r, r] then |c_{d-k}/c_d| <= C(d,k) r^k.
bool vieta_admits(const Coeffs& p, long double r) {
  const std::size_t d = p.size() - 1;
  long double binom = 1;
  long double rk = 1;
  for (std::size_t k = 1; k <= d; ++k) {
    binom = binom * static_cast<long double>(d - k + 1) / static_cast<long double>(k);
    rk *= r;
    if (std::fabs(p[d - k]) > std::fabs(p[d]) * binom * rk * (1 + 1e-9L)) return false;
  }
  return true;
}

}  // namespace

XiSeries XiSeries::from(const LData& L) {
  XiSeries xs{L.q, L.g, {}};
  for (int n = 0; n <= L.g; ++n) xs.phi.push_back(fflambda::phi(L, n));
  return xs;
}

double xi_at(const XiSeries& xs, double t, double x) {
  double v = xs.phi[0];
  for (int n = 1; n <= xs.g; ++n) {
    v += xs.phi[static_cast<std::size_t>(n)] * std::exp(t * n * n) * 2.0 * std::cos(n * x);
  }
  return v;
}

std::vector<double> cos_poly(const XiSeries& xs, double t) {
  const auto d = static_cast<std::size_t>(xs.g);
  std::vector<double> G(d + 1, 0.0);
  G[0] = xs.phi[0];
  // Chebyshev recurrence T_{n+1} = 2u T_n - T_{n-1}.
  std::vector<double> prev{1.0};
  std::vector<double> cur{0.0, 1.0};
  for (std::size_t n = 1; n <= d; ++n) {
    const double w = 2.0 * xs.phi[n] * std::exp(t * static_cast<double>(n * n));
    for (std::size_t i = 0; i < cur.size(); ++i) G[i] += w * cur[i];
    std::vector<double> next(cur.size() + 1, 0.0);
    for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] += 2.0 * cur[i];
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return G;
}

RealRootCheck real_root_check(const XiSeries& xs, double t, double tol_root) {
  RealRootCheck out;
  const auto G = cos_poly(xs, t);
  Coeffs p0(G.begin(), G.end());
  const int d = static_cast<int>(p0.size()) - 1;
  if (d <= 0) {
    out.sturm = out.companion = true;
    return out;
  }
  const long double r = 1.0L + static_cast<long double>(tol_root);
  if (!vieta_admits(p0, r)) return out;

  normalise(p0);
  Coeffs p1;
  for (std::size_t i = 1; i < p0.size(); ++i) p1.push_back(p0[i] * static_cast<long double>(i));
  normalise(p1);
  std::vector<Coeffs> chain{p0, p1};
  while (chain.back().size() > 1) {
    Coeffs rem = remainder(chain[chain.size() - 2], chain.back());
    if (max_abs(rem) <= kSturmGuard) break;
    for (auto& c : rem) c = -c;
    const long double m = max_abs(rem);
    while (rem.size() > 1 && std::fabs(rem.back()) <= 1e-14L * m) rem.pop_back();
    normalise(rem);
    chain.push_back(std::move(rem));
  }
  const int gcd_degree = static_cast<int>(chain.back().size()) - 1;
  out.distinct_roots = d - gcd_degree;
  out.sturm_in_interval = sign_changes(chain, -r) - sign_changes(chain, r);
  out.sturm = out.sturm_in_interval == out.distinct_roots;

  out.companion = true;
  for (const auto& z : detail::polynomial_roots(Coeffs(G.begin(), G.end()))) {
    if (std::fabs(z.imag()) > kImagTol * std::max(1.0, std::abs(z)) || std::fabs(z.real()) > static_cast<double>(r)) {
      out.companion = false;
    }
  }
  return out;
}

bool is_real_rooted(const XiSeries& xs, double t, double tol_root) {
  const auto check = real_root_check(xs, t, tol_root);
  if (check.sturm != check.companion) {
    throw Error(Errc::IndeterminateNearBoundary,
                "Sturm count and companion roots disagree at t = " + fmt(t));
  }
  return check.sturm;
}

bool has_double_root(const LData& L) {
  const RatPoly P = to_rat_poly(L.c);
  return rat_degree(rat_gcd(P, rat_derivative(P))) > 0;
}

const char* lambda_status_name(LambdaStatus s) noexcept {
  switch (s) {
    case LambdaStatus::ExactZero: return "exact0";
    case LambdaStatus::Numeric: return "numeric";
    case LambdaStatus::NegInfinity: return "neginf";
    case LambdaStatus::FloorHit: return "floor";
  }
  return "numeric";
}

LambdaStatus parse_lambda_status(const std::string& s) {
  if (s == "exact0") return LambdaStatus::ExactZero;
  if (s == "numeric") return LambdaStatus::Numeric;
  if (s == "neginf") return LambdaStatus::NegInfinity;
  if (s == "floor") return LambdaStatus::FloorHit;
  throw Error(Errc::ParseError, "unknown lambda status '" + s + "'");
}

LambdaResult compute_lambda(const LData& L, const LambdaOptions& opts) {
  validate(L);
  if (L.g < 1) throw Error(Errc::InvalidArgument, "genus must be at least 1");
  LambdaResult out;
  if (has_double_root(L)) {
    const RatPoly P = to_rat_poly(L.c);
    out.status = LambdaStatus::ExactZero;
    out.value = 0.0;
    out.halfwidth = 0.0;
    out.witness = "L has a repeated root: deg gcd(P, P') = " +
                  std::to_string(rat_degree(rat_gcd(P, rat_derivative(P))));
    return out;
  }
  const double sqrt_q = std::sqrt(static_cast<double>(L.q));
  if (L.g == 1 && !opts.force_bisection) {
    const auto c1 = L.c[1];
    if (c1 == 0) {
      out.status = LambdaStatus::NegInfinity;
      out.witness = "genus 1 with c_1 = 0: Xi_t = 2 sqrt(q) e^t cos x is real-rooted for every t";
      return out;
    }
    if (static_cast<double>(c1) * static_cast<double>(c1) > 4.0 * static_cast<double>(L.q)) {
      throw Error(Errc::InvalidArgument, "|c_1| exceeds 2 sqrt(q)");
    }
    out.status = LambdaStatus::Numeric;
    out.value = std::log(std::fabs(static_cast<double>(c1)) / (2.0 * sqrt_q));
    out.halfwidth = 0.0;
    out.witness = "closed form log(|c_1| / (2 sqrt q)), c_1 = " + std::to_string(c1);
    return out;
  }

  const XiSeries xs = XiSeries::from(L);
  double lo = opts.t_floor;
  double hi = 0.0;
  auto probe = [&](double t) {
    try {
      return is_real_rooted(xs, t, opts.tol_root);
    } catch (const Error& e) {
      if (e.code() != Errc::IndeterminateNearBoundary) throw;
      throw Error(Errc::IndeterminateNearBoundary,
                  "real-rootedness undecided at t = " + fmt(t) + ", bracket [" + fmt(lo) + ", " + fmt(hi) + "]");
    }
  };
  if (!probe(0.0)) throw Error(Errc::InvalidArgument, "Xi_0 has a nonreal zero; input violates the Riemann hypothesis");
  if (probe(lo)) {
    out.status = LambdaStatus::FloorHit;
    out.value = lo;
    out.witness = "real-rooted already at t_floor = " + fmt(lo);
    return out;
  }
  while ((hi - lo) / 2.0 > opts.tol_t) {
    const double mid = 0.5 * (lo + hi);
    if (probe(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  out.status = LambdaStatus::Numeric;
  out.value = 0.5 * (lo + hi);
  out.halfwidth = 0.5 * (hi - lo);
  out.witness = "nonreal zero at t = " + fmt(lo) + ", real-rooted at t = " + fmt(hi);
  return out;
}

}  // namespace fflambda
