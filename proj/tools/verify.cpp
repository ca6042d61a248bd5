#include "verify.hpp"

#include <cmath>
#include <functional>
#include <map>

#include "fflambda/charsum.hpp"
#include "fflambda/limits.hpp"
#include "fflambda/sweep.hpp"

namespace fflambda::cli {
namespace {

using Suite = std::function<SuiteResult(const VerifyConfig&)>;

std::vector<std::uint64_t> fields_or(const VerifyConfig& cfg, std::vector<std::uint64_t> fallback) {
  return cfg.fields.empty() ? fallback : cfg.fields;
}

std::vector<GoodPair> family(const VerifyConfig& cfg) {
  FamilySpec spec;
  spec.kind = FamilyKind::FixedDegree;
  spec.deg = cfg.deg;
  spec.q_list = fields_or(cfg, {3, 5});
  return enum_family(spec);
}

SuiteResult over_family(const char* name, const VerifyConfig& cfg, const std::function<bool(const GoodPair&)>& ok) {
  SuiteResult r{name, true, 0, ""};
  for (const auto& pair : family(cfg)) {
    ++r.checked;
    if (!ok(pair)) {
      r.pass = false;
      r.detail = "fails at " + pair.D().to_string() + " over " + pair.field()->name();
      return r;
    }
  }
  r.detail = std::to_string(r.checked) + " good pairs of degree " + std::to_string(cfg.deg);
  return r;
}

SuiteResult suite_fe(const VerifyConfig& cfg) {
  return over_family("fe", cfg, [](const GoodPair& p) { return satisfies_functional_equation(compute_L(p)); });
}

SuiteResult suite_rh(const VerifyConfig& cfg) {
  return over_family("rh", cfg, [&](const GoodPair& p) { return inverse_roots(compute_L(p), cfg.tol_weil).weil_ok; });
}

SuiteResult suite_crosscheck(const VerifyConfig& cfg) {
  return over_family("crosscheck", cfg, [](const GoodPair& p) { return crosscheck(p); });
}

SuiteResult suite_gauss(const VerifyConfig& cfg) {
  SuiteResult r{"gauss", true, 0, ""};
  auto fail = [&](const std::string& why) {
    r.pass = false;
    r.detail = why;
    return r;
  };
  for (auto q : fields_or(cfg, {3, 5, 7, 9})) {
    const FieldPtr F = field_of_order(q);
    for (unsigned n = 1; n <= cfg.n_max; ++n) {
      const auto qn = static_cast<std::int64_t>(checked_pow(q, n));
      for (std::uint64_t k = 0; k < q; ++k) {
        const CharSpec spec{F, F->from_index(k)};
        const CycInt S = gauss_S(spec, n);
        ++r.checked;
        const std::string where = " at q=" + std::to_string(q) + " a=[" + std::to_string(k) + "] n=" + std::to_string(n);
        if (!(S_via_fix(spec, n) == S)) return fail("S_via_fix != gauss_S" + where);
        if (k == 0 ? !(S == CycInt(F->characteristic(), qn)) : norm_sq(S) != qn) return fail("magnitude rule" + where);
        if (checked_pow(q, n * F->characteristic()) <= 20000 &&
            fix_count_by_points(F, spec.a, n) != fix_count(F, spec.a, n)) {
          return fail("point loop disagrees with the trace count" + where);
        }
      }
    }
    eigenvalue_set(F);  // throws ClosedFormMismatch on a sign or multiplicity failure
  }
  r.detail = std::to_string(r.checked) + " (q, a, n) triples and eigenvalue sign tables";
  return r;
}

SuiteResult suite_katz(const VerifyConfig& cfg) {
  SuiteResult r{"katz", true, 0, ""};
  for (auto q : fields_or(cfg, {3, 5, 7})) {
    const FieldPtr F = field_of_order(q);
    const GoodPair pair = check_good(parse_poly(F, "T^" + std::to_string(q) + "-T"));
    const LData L = compute_L(pair);
    const LData Z = zeta_numerator(count_profile(pair));
    const LData K = katz_L_polynomial(eigenvalue_set(F), q);
    ++r.checked;
    if (L.c != Z.c || L.c != K.c) {
      r.pass = false;
      r.detail = "character sum, point count and eigenvalue product differ at q=" + std::to_string(q);
      return r;
    }
  }
  r.detail = std::to_string(r.checked) + " fields with matching L-polynomials for T^q-T";
  return r;
}

SuiteResult suite_maximal(const VerifyConfig& cfg) {
  SuiteResult r{"maximal", true, 0, ""};
  const std::uint64_t bound = cfg.bound ? cfg.bound : 200;
  const WeierstrassQ E{0, 0, 0, 1, 0};
  for (const auto& tr : scan_primes(E, 3, bound)) {
    if (tr.p % 4 == 3 && tr.a_p != 0) {
      r.pass = false;
      r.detail = "a_" + std::to_string(tr.p) + " != 0 for p = 3 mod 4";
      return r;
    }
    if (!tr.supersingular) continue;
    const auto cert = certify_maximal(E, tr.p);
    ++r.checked;
    if (cert.extremality != Extremality::Maximal || !cert.lambda_zero) {
      r.pass = false;
      r.detail = "certificate fails at p = " + std::to_string(tr.p);
      return r;
    }
  }
  r.pass = r.checked > 0;
  r.detail = std::to_string(r.checked) + " supersingular primes <= " + std::to_string(bound) + " certified maximal";
  return r;
}

SuiteResult suite_x011(const VerifyConfig& cfg) {
  const std::uint64_t bound = cfg.bound ? cfg.bound : 1000;
  const auto rep = x0_11_scan(bound);
  SuiteResult r{"x011", rep.ok(), rep.records.size(), ""};
  std::string ss;
  for (auto p : rep.supersingular) ss += (ss.empty() ? "" : " ") + std::to_string(p);
  r.detail = "supersingular {" + ss + "}";
  if (!rep.all_divisible_by_5) r.detail += "; some N_p not divisible by 5";
  if (!rep.supersingular_4_mod_5) r.detail += "; a supersingular prime is not 4 mod 5";
  if (!rep.supersingular_split) r.detail += "; a supersingular prime is inert in Q(sqrt 5)";
  if (!rep.small_primes_nonzero) r.detail += "; a_3 or a_5 vanishes";
  return r;
}

const std::map<std::string, Suite>& suites() {
  static const std::map<std::string, Suite> table{
      {"fe", suite_fe},       {"rh", suite_rh},           {"crosscheck", suite_crosscheck}, {"gauss", suite_gauss},
      {"katz", suite_katz},   {"maximal", suite_maximal}, {"x011", suite_x011},
  };
  return table;
}

}  // namespace

const std::vector<std::string> kSuiteNames{"fe", "rh", "crosscheck", "gauss", "katz", "maximal", "x011"};

SuiteResult run_suite(const std::string& name, const VerifyConfig& cfg) {
  const auto it = suites().find(name);
  if (it == suites().end()) throw Error(Errc::InvalidArgument, "unknown suite '" + name + "'");
  try {
    return it->second(cfg);
  } catch (const Error& e) {
    if (e.code() == Errc::SizeExceeded) throw;
    return {name, false, 0, e.what()};
  }
}

}  // namespace fflambda::cli
