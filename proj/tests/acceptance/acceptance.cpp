// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "fflambda/arithgeo.hpp"
#include "fflambda/charsum.hpp"
#include "fflambda/curve.hpp"
#include "fflambda/deformation.hpp"
#include "fflambda/error.hpp"
#include "fflambda/lfunction.hpp"
#include "fflambda/sweep.hpp"

using namespace fflambda;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool cond, const std::string& why) {
    if (!cond && pass) {
      pass = false;
      detail = why;
    }
  }
};

using Vec = std::vector<std::int64_t>;

std::string vec_str(const Vec& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

GoodPair pair_of(std::uint64_t q, const std::string& D) { return check_good(parse_poly(field_of_order(q), D)); }

std::vector<GoodPair> exhaustive(std::uint64_t q, unsigned deg) {
  FamilySpec spec;
  spec.kind = FamilyKind::FixedDegree;
  spec.deg = deg;
  spec.q_list = {q};
  return enum_family(spec);
}

std::string xq_minus_x(std::uint64_t q) { return "T^" + std::to_string(q) + "-T"; }

// Time limits in seconds, one per criterion; 0 means "instant" and is not enforced.
struct Criterion {
  int id;
  const char* name;
  double limit_s;
  std::function<Outcome()> body;
};

Outcome c1_witness() {
  Outcome o;
  struct Case {
    std::uint64_t q;
    Vec want;
  };
  for (const Case& c : {Case{5, {1, 0, -10, 0, 25}}, Case{7, {1, 0, 21, 0, 147, 0, 343}}}) {
    const auto start = std::chrono::steady_clock::now();
    const LData L = compute_L(pair_of(c.q, xq_minus_x(c.q)));
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(L.c == c.want, "q=" + std::to_string(c.q) + " L=" + vec_str(L.c));
    o.require(has_double_root(L), "q=" + std::to_string(c.q) + " no double root");
    o.require(compute_lambda(L).status == LambdaStatus::ExactZero, "q=" + std::to_string(c.q) + " not exact0");
    o.require(secs < 10.0, "q=" + std::to_string(c.q) + " took " + std::to_string(secs) + " s");
    o.detail += (o.detail.empty() ? "" : " ") + std::string("q=") + std::to_string(c.q) + " " + vec_str(L.c);
  }
  return o;
}

Outcome c2_triple() {
  Outcome o;
  for (std::uint64_t q : {3ull, 5ull, 7ull}) {
    const GoodPair pair = pair_of(q, xq_minus_x(q));
    const Vec chars = compute_L(pair).c;
    const Vec zeta = zeta_numerator(count_profile(pair)).c;
    const Vec katz = katz_L_polynomial(eigenvalue_set(pair.field()), q).c;
    o.require(chars == zeta && zeta == katz,
              "q=" + std::to_string(q) + " " + vec_str(chars) + " " + vec_str(zeta) + " " + vec_str(katz));
  }
  if (o.pass) o.detail = "q=3,5,7 character sum = zeta numerator = Katz product";
  return o;
}

Outcome c3_neginf() {
  Outcome o;
  const LData L = compute_L(pair_of(3, "T^3+T"));
  const auto r = compute_lambda(L);
  o.require(L.c == Vec{1, 0, 3}, "c=" + vec_str(L.c));
  o.require(r.status == LambdaStatus::NegInfinity, std::string("status ") + lambda_status_name(r.status));
  if (o.pass) o.detail = "c=[1,0,3] neginf";
  return o;
}

Outcome c4_closed_form() {
  Outcome o;
  LambdaOptions forced;
  forced.force_bisection = true;
  std::uint64_t n = 0, both_neginf = 0;
  double worst = 0;
  for (const GoodPair& pair : exhaustive(5, 3)) {
    ++n;
    const LData L = compute_L(pair);
    const auto bis = compute_lambda(L, forced);
    const double c1 = static_cast<double>(std::llabs(L.c[1]));
    if (c1 == 0) {
      // log 0: bisection only sees real roots down to the floor.
      o.require(bis.status == LambdaStatus::FloorHit || bis.status == LambdaStatus::NegInfinity,
                pair.D().to_string() + " c_1=0 but " + lambda_status_name(bis.status));
      o.require(compute_lambda(L).status == LambdaStatus::NegInfinity, pair.D().to_string() + " closed form not neginf");
      ++both_neginf;
      continue;
    }
    const double closed = std::log(c1 / (2.0 * std::sqrt(5.0)));
    o.require(bis.status == LambdaStatus::Numeric && bis.value, pair.D().to_string() + " bisection did not converge");
    if (!bis.value) continue;
    const double err = std::fabs(*bis.value - closed);
    worst = std::max(worst, err);
    o.require(err <= 1e-7, pair.D().to_string() + " error " + std::to_string(err));
  }
  o.require(n == 100, "family has " + std::to_string(n) + " members");
  if (o.pass) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "%llu cubics, %llu both -inf, max |bisection - closed form| = %.3g",
                  static_cast<unsigned long long>(n), static_cast<unsigned long long>(both_neginf), worst);
    o.detail = buf;
  }
  return o;
}

struct FamilyRun {
  std::uint64_t members = 0;
  std::uint64_t crosscheck_ok = 0;
  Outcome fe_rh;
  Outcome zeta;
  double worst_dev = 0;
};

// Criteria 5 and 6 share one pass over the four families.
const FamilyRun& family_run() {
  static const FamilyRun run = [] {
    FamilyRun r;
    for (std::uint64_t q : {3ull, 5ull}) {
      for (unsigned deg : {3u, 5u}) {
        const auto members = exhaustive(q, deg);
        r.fe_rh.require(members.size() == squarefree_count(q, deg),
                        "q=" + std::to_string(q) + " deg=" + std::to_string(deg) + " has " +
                            std::to_string(members.size()) + " members");
        for (const GoodPair& pair : members) {
          ++r.members;
          const LData L = compute_L(pair);
          r.fe_rh.require(satisfies_functional_equation(L), pair.D().to_string() + " fails the functional equation");
          const auto roots = inverse_roots(L, 1e-9);
          r.worst_dev = std::max(r.worst_dev, roots.max_deviation);
          r.fe_rh.require(roots.weil_ok && roots.roots.size() == static_cast<std::size_t>(2 * L.g),
                          pair.D().to_string() + " deviation " + std::to_string(roots.max_deviation));
          const bool ok = crosscheck(pair);
          r.crosscheck_ok += ok;
          r.zeta.require(ok, "q=" + std::to_string(q) + " " + pair.D().to_string() + " crosscheck false");
        }
      }
    }
    return r;
  }();
  return run;
}

Outcome c5_fe_rh() {
  const FamilyRun& r = family_run();
  Outcome o = r.fe_rh;
  if (o.pass) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "%llu members (18+100+162+2500), max ||alpha| - sqrt q| = %.3g",
                  static_cast<unsigned long long>(r.members), r.worst_dev);
    o.detail = buf;
  }
  return o;
}

Outcome c6_crosscheck() {
  const FamilyRun& r = family_run();
  Outcome o = r.zeta;
  if (o.pass) o.detail = std::to_string(r.crosscheck_ok) + "/" + std::to_string(r.members) + " crosscheck true";
  return o;
}

Outcome c7_gauss() {
  Outcome o;
  std::uint64_t checked = 0;
  for (std::uint64_t q : {3ull, 5ull, 7ull}) {
    const FieldPtr F = field_of_order(q);
    for (std::uint64_t k = 0; k < q; ++k) {
      const CharSpec spec{F, F->from_index(k)};
      std::int64_t qn = 1;
      for (unsigned n = 1; n <= 3; ++n) {
        qn *= static_cast<std::int64_t>(q);
        const CycInt S = gauss_S(spec, n);
        const std::string at = "q=" + std::to_string(q) + " a=" + std::to_string(k) + " n=" + std::to_string(n);
        o.require(S_via_fix(spec, n) == S, at + " S_via_fix != gauss_S");
        if (k == 0) {
          o.require(S == CycInt(F->characteristic(), qn), at + " trivial character S != q^n");
        } else {
          o.require(norm_sq(S) == qn, at + " |S|^2 != q^n");
        }
        ++checked;
      }
    }
  }
  for (std::uint64_t q : {3ull, 5ull, 7ull, 9ull}) {
    const FieldPtr F = field_of_order(q);
    const EigenvalueSet set = eigenvalue_set(F);
    const int half = static_cast<int>((q - 1) / 2);
    o.require(set.plus_count == half && set.minus_count == half, "q=" + std::to_string(q) + " multiplicities");
    // (sqrt p*)^r, then the sign rule per character.
    CycInt root_r = CycInt(set.p, 1);
    for (unsigned i = 0; i < set.r; ++i) root_r = root_r * set.sqrt_p_star;
    const int sign_sq = (set.r + 1) % 2 == 0 ? 1 : -1;
    for (const auto& ev : set.eigenvalues) {
      const CycInt want = (ev.residue == 1 ? sign_sq : -sign_sq) * root_r;
      o.require(ev.S == want, "q=" + std::to_string(q) + " sign rule fails at a=" + std::to_string(F->index(ev.a)));
    }
  }
  const EigenvalueSet s9 = eigenvalue_set(field_of_order(9));
  int plus3 = 0, minus3 = 0;
  for (const auto& ev : s9.eigenvalues) {
    if (!ev.alpha.is_rational()) continue;
    plus3 += ev.alpha.to_integer() == 3;
    minus3 += ev.alpha.to_integer() == -3;
  }
  o.require(plus3 == 4 && minus3 == 4, "q=9 eigenvalues +3 x" + std::to_string(plus3) + ", -3 x" + std::to_string(minus3));
  if (o.pass) o.detail = std::to_string(checked) + " (q, a, n) triples; sign rule q=3,5,7,9; q=9 gives +-3 x4 each";
  return o;
}

Outcome c8_maximal() {
  Outcome o;
  const WeierstrassQ E{0, 0, 0, 1, 0};
  std::vector<std::uint64_t> primes;
  for (const auto& r : scan_primes(E, 3, 200)) {
    if (!r.supersingular) continue;
    primes.push_back(r.p);
    const auto c = certify_maximal(E, r.p);
    const std::string at = "p=" + std::to_string(r.p);
    o.require(c.N_p2 == r.p * r.p + 2 * r.p + 1, at + " N=" + std::to_string(c.N_p2));
    o.require(c.extremality == Extremality::Maximal, at + " not maximal");
    o.require(c.lambda_zero && abs(c.a_p2) == BigInt(2 * r.p), at + " |a_{p^2}| != 2p");
    // The curve over F_{p^2} has L = 1 - a_{p^2} T + p^2 T^2 = (1 + pT)^2.
    const LData L{r.p * r.p, 1, {1, -c.a_p2.convert_to<std::int64_t>(), static_cast<std::int64_t>(r.p * r.p)},
                  std::nullopt};
    const auto lam = compute_lambda(L);
    o.require(lam.status == LambdaStatus::ExactZero && lam.value && *lam.value == 0.0, at + " Lambda != 0");
  }
  o.require(!primes.empty(), "no supersingular primes");
  if (o.pass) o.detail = std::to_string(primes.size()) + " supersingular p <= 200, all maximal over F_{p^2}, Lambda = 0";
  return o;
}

Outcome c9_x011() {
  Outcome o;
  const auto rep = x0_11_scan(1000);
  o.require(rep.all_divisible_by_5, "some N_p not divisible by 5");
  const auto has = [&](std::uint64_t p) {
    return std::find(rep.supersingular.begin(), rep.supersingular.end(), p) != rep.supersingular.end();
  };
  o.require(has(19) && has(29), "19 or 29 missing");
  std::string list;
  for (auto p : rep.supersingular) {
    o.require(p % 5 == 4, std::to_string(p) + " != 4 mod 5");
    o.require(!inert(5, p), std::to_string(p) + " inert in Q(sqrt 5)");
    list += (list.empty() ? "" : ",") + std::to_string(p);
  }
  for (const auto& r : rep.records) o.require(r.N_p % 5 == 0, "N_" + std::to_string(r.p) + " = " + std::to_string(r.N_p));
  if (o.pass) o.detail = std::to_string(rep.records.size()) + " good primes, supersingular {" + list + "}";
  return o;
}

Outcome c10_monotone() {
  Outcome o;
  FamilySpec spec;
  spec.kind = FamilyKind::FixedDegree;
  spec.deg = 5;
  spec.q_list = {5};
  spec.sample = SampleMode{20240601, 100};
  const double grid[] = {-10, -5, -2, -1, -0.5, -0.1, 0};
  std::uint64_t n = 0, transitions = 0;
  for (const GoodPair& pair : enum_family(spec)) {
    ++n;
    const XiSeries xs = XiSeries::from(compute_L(pair));
    bool seen_real = false;
    for (double t : grid) {
      const bool real = is_real_rooted(xs, t);
      o.require(!(seen_real && !real), pair.D().to_string() + " loses real-rootedness at t=" + std::to_string(t));
      if (real && !seen_real && t != grid[0]) ++transitions;
      seen_real = seen_real || real;
    }
  }
  o.require(n == 100, "sample has " + std::to_string(n) + " members");
  if (o.pass) o.detail = std::to_string(n) + " seeded members monotone, " + std::to_string(transitions) + " change inside the grid";
  return o;
}

Outcome c11_satotate() {
  Outcome o;
  const auto rep = satotate_scan({1, 1, 0, 1}, 10000);
  o.require(rep.max_lambda.has_value(), "no running max");
  if (rep.max_lambda) o.require(*rep.max_lambda < 0.0, "running max is not negative");
  o.require(!rep.records.empty() && rep.records.back().running_max == rep.max_lambda, "running max not carried");
  std::ostringstream out, err;
  const char* argv[] = {"fflambda", "satotate", "--D", "T^3+T+1", "--p-max", "10000"};
  const int code = cli::run(6, argv, out, err);
  o.require(code == 0, "cli exit " + std::to_string(code));
  std::string text = out.str();
  std::transform(text.begin(), text.end(), text.begin(), [](unsigned char c) { return std::tolower(c); });
  o.require(text.find("verif") == std::string::npos, "output claims verification");
  o.require(text.find("max |a_p|/(2 sqrt p)") != std::string::npos, "ratio max not reported");
  if (o.pass) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%zu primes, running max Lambda %.6g at p=%llu, max |ratio| %.6f at p=%llu",
                  rep.records.size(), *rep.max_lambda, static_cast<unsigned long long>(rep.argmax_p),
                  rep.max_abs_ratio, static_cast<unsigned long long>(rep.max_abs_ratio_p));
    o.detail = buf;
  }
  return o;
}

void informational() {
  const LData L = compute_L(pair_of(3, "T^3-T"));
  const auto r = compute_lambda(L);
  std::printf("INFO  q=3 D=T^3-T: c=%s double_root=%s lambda=%s\n", vec_str(L.c).c_str(),
              has_double_root(L) ? "true" : "false", lambda_status_name(r.status));
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "witness T^q-T, q=5,7", 20, c1_witness},
      {2, "triple agreement q=3,5,7", 60, c2_triple},
      {3, "neginf for T^3+T over F_3", 0, c3_neginf},
      {4, "genus-1 closed form over F_5", 30, c4_closed_form},
      {5, "functional equation and RH", 900, c5_fe_rh},
      {6, "zeta factorization crosscheck", 900, c6_crosscheck},
      {7, "Gauss-sum identities", 60, c7_gauss},
      {8, "maximal curves y^2=x^3+x", 60, c8_maximal},
      {9, "X0(11) congruences p<=1000", 60, c9_x011},
      {10, "monotone real-rootedness", 0, c10_monotone},
      {11, "Sato-Tate scan (observational)", 120, c11_satotate},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_s > 0 && secs > c.limit_s) {
      o.require(false, "runtime " + std::to_string(secs) + " s over " + std::to_string(c.limit_s) + " s");
    }
    failures += !o.pass;
    std::printf("%s  C%-2d %-32s %8.2fs  %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, secs, o.detail.c_str());
    std::fflush(stdout);
  }
  informational();
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
