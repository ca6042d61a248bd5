#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fflambda/io.hpp"
#include "fflambda/limits.hpp"
#include "verify.hpp"

namespace fflambda::cli {
namespace {

struct VerificationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string opt_num(const std::optional<double>& v) { return v ? num(*v) : std::string("-"); }

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string join(const std::vector<std::int64_t>& v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + std::to_string(v[i]);
  return out;
}

std::string int_poly_string(const std::vector<std::int64_t>& c) {
  std::string out;
  for (std::size_t k = c.size(); k-- > 0;) {
    const auto v = c[k];
    if (v == 0) continue;
    const auto mag = v < 0 ? -v : v;
    out += v < 0 ? "-" : (out.empty() ? "" : "+");
    if (k == 0 || mag != 1) out += std::to_string(mag) + (k ? "*" : "");
    if (k > 0) out += "T" + (k > 1 ? "^" + std::to_string(k) : std::string());
  }
  return out.empty() ? "0" : out;
}

// Flags shared by every subcommand.
struct Common {
  std::string format = "table";
  std::optional<std::uint64_t> max_enum;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"table", "json", "csv"}));
  sub->add_option("--max-enum", c.max_enum, "Enumeration limit (default 2^31 or FFLAMBDA_MAX_ENUM)");
}

struct Lambda {
  double tol_t = 1e-8;
  std::optional<double> t_floor;
  double tol_root = 1e-8;
  bool force_bisection = false;
};

void add_lambda(CLI::App* sub, Lambda& l) {
  sub->add_option("--tol-t", l.tol_t, "Bisection tolerance in t");
  sub->add_option("--t-floor", l.t_floor, "Lower end of the bisection (default -30 or FFLAMBDA_T_FLOOR)");
  sub->add_option("--tol-root", l.tol_root, "Root tolerance for real-rootedness");
  sub->add_flag("--force-bisection", l.force_bisection, "Bisect even in genus 1");
}

double env_double(const char* name, double fallback) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return fallback;
  char* end = nullptr;
  const double d = std::strtod(v, &end);
  if (*end != '\0') throw Error(Errc::ParseError, std::string(name) + "='" + v + "' is not a number");
  return d;
}

std::optional<std::uint64_t> env_uint(const char* name) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return std::nullopt;
  char* end = nullptr;
  const auto n = std::strtoull(v, &end, 10);
  if (*end != '\0') throw Error(Errc::ParseError, std::string(name) + "='" + v + "' is not an integer");
  return n;
}

LambdaOptions lambda_options(const Lambda& l) {
  LambdaOptions o;
  o.tol_t = l.tol_t;
  o.t_floor = l.t_floor ? *l.t_floor : env_double("FFLAMBDA_T_FLOOR", -30.0);
  o.tol_root = l.tol_root;
  o.force_bisection = l.force_bisection;
  if (!(o.tol_t > 0) || !(o.tol_root > 0) || !(o.t_floor < 0)) {
    throw Error(Errc::InvalidArgument, "tolerances must be positive and t_floor negative");
  }
  return o;
}

// "p", "p^r" or a prime power.
FieldPtr parse_field(const std::string& text) {
  try {
    const auto caret = text.find('^');
    if (caret == std::string::npos) {
      std::size_t used = 0;
      const auto q = std::stoull(text, &used);
      if (used != text.size()) throw Error(Errc::ParseError, "bad field '" + text + "'");
      return field_of_order(q);
    }
    std::size_t u1 = 0, u2 = 0;
    const auto p = std::stoull(text.substr(0, caret), &u1);
    const auto r = std::stoul(text.substr(caret + 1), &u2);
    if (u1 != caret || u2 != text.size() - caret - 1) throw Error(Errc::ParseError, "bad field '" + text + "'");
    if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
    if (p == 2) throw Error(Errc::EvenCharacteristic, "characteristic 2 is not supported");
    if (r == 0) throw Error(Errc::InvalidArgument, "field degree must be positive");
    return Field::make(static_cast<std::uint32_t>(p), static_cast<unsigned>(r));
  } catch (const std::logic_error&) {
    throw Error(Errc::ParseError, "bad field '" + text + "'");
  }
}

std::vector<std::uint64_t> parse_uint_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) throw Error(Errc::ParseError, "bad list '" + text + "'");
    try {
      std::size_t used = 0;
      out.push_back(std::stoull(cur, &used));
      if (used != cur.size()) throw std::invalid_argument(cur);
    } catch (const std::logic_error&) {
      throw Error(Errc::ParseError, "bad list '" + text + "'");
    }
    cur.clear();
  };
  for (char ch : text) {
    if (ch == ',') {
      flush();
    } else {
      cur += ch;
    }
  }
  flush();
  return out;
}

WeierstrassQ parse_curve(const std::string& text) {
  std::vector<std::int64_t> a;
  std::string cur;
  auto flush = [&] {
    try {
      std::size_t used = 0;
      a.push_back(std::stoll(cur, &used));
      if (used != cur.size()) throw std::invalid_argument(cur);
    } catch (const std::logic_error&) {
      throw Error(Errc::ParseError, "bad curve '" + text + "', expected a1,a2,a3,a4,a6");
    }
    cur.clear();
  };
  for (char ch : text) {
    if (ch == ',') {
      flush();
    } else {
      cur += ch;
    }
  }
  flush();
  if (a.size() != 5) throw Error(Errc::ParseError, "bad curve '" + text + "', expected a1,a2,a3,a4,a6");
  WeierstrassQ E{a[0], a[1], a[2], a[3], a[4]};
  if (E.discriminant() == 0) throw Error(Errc::InvalidArgument, "curve " + text + " is singular");
  return E;
}

Json field_config(const FieldPtr& F) {
  return Json{{"field", F->name()},
              {"q", F->order()},
              {"modulus", F->is_prime_field() ? std::string("none") : F->modulus_string()}};
}

void add_lambda_config(Json& cfg, const LambdaOptions& o) {
  cfg["tol_t"] = o.tol_t;
  cfg["t_floor"] = o.t_floor;
  cfg["tol_root"] = o.tol_root;
  cfg["force_bisection"] = o.force_bisection;
}

std::string config_value(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

// Defaults echoed as "# key=value" lines ahead of table and CSV output.
void print_config(std::ostream& out, const Json& cfg) {
  for (const auto& [k, v] : cfg.items()) out << "# " << k << "=" << config_value(v) << "\n";
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

// ---- lfun ----

struct LfunArgs {
  Common common;
  std::string field, poly;
  double tol_weil = 1e-9;
};

void cmd_lfun(const LfunArgs& a, Json cfg, std::ostream& out) {
  const FieldPtr F = parse_field(a.field);
  const GoodPair pair = check_good(parse_poly(F, a.poly));
  cfg.update(field_config(F));
  cfg["tol_weil"] = a.tol_weil;
  const LData L = compute_L(pair);
  const bool fe = satisfies_functional_equation(L);
  const InverseRoots roots = inverse_roots(L, a.tol_weil);
  std::vector<double> phis, moduli;
  for (int n = 0; n <= L.g; ++n) phis.push_back(phi(L, n));
  for (const auto& r : roots.roots) moduli.push_back(std::abs(r));

  if (a.common.format == "json") {
    print_json(out, Json{{"config", cfg},
                         {"L", to_json(L)},
                         {"phi", phis},
                         {"functional_equation", fe},
                         {"inverse_root_moduli", moduli},
                         {"max_deviation", roots.max_deviation},
                         {"weil_ok", roots.weil_ok}});
  } else if (a.common.format == "csv") {
    print_config(out, cfg);
    out << "# functional_equation=" << (fe ? "true" : "false") << "\n";
    out << "# weil_ok=" << (roots.weil_ok ? "true" : "false") << " max_deviation=" << num(roots.max_deviation) << "\n";
    out << "q,D";
    for (std::size_t i = 0; i < L.c.size(); ++i) out << ",c_" << i;
    out << "\n" << ldata_csv_row(L) << "\n";
  } else {
    print_config(out, cfg);
    out << "D        " << *L.D << "\n";
    out << "q        " << L.q << "\n";
    out << "genus    " << L.g << "\n";
    out << "c        " << join(L.c, " ") << "\n";
    out << "Phi     ";
    for (double v : phis) out << " " << num(v);
    out << "\n|alpha| ";
    for (double v : moduli) out << " " << num(v);
    out << "\nfunctional equation  " << (fe ? "ok" : "FAILED") << "\n";
    out << "weil bound           " << (roots.weil_ok ? "ok" : "FAILED") << " (max deviation "
        << num(roots.max_deviation) << ")\n";
  }
  if (!fe || !roots.weil_ok) throw VerificationFailure("functional equation or Weil bound failed");
}

// ---- lambda ----

struct LambdaArgs {
  Common common;
  Lambda lambda;
  std::string field, poly;
};

void cmd_lambda(const LambdaArgs& a, Json cfg, std::ostream& out) {
  const FieldPtr F = parse_field(a.field);
  const GoodPair pair = check_good(parse_poly(F, a.poly));
  const LambdaOptions opts = lambda_options(a.lambda);
  cfg.update(field_config(F));
  add_lambda_config(cfg, opts);
  const LData L = compute_L(pair);
  const LambdaResult r = compute_lambda(L, opts);
  const bool dr = has_double_root(L);
  if (a.common.format == "json") {
    print_json(out, Json{{"config", cfg}, {"L", to_json(L)}, {"double_root", dr}, {"lambda", to_json(r)}});
  } else if (a.common.format == "csv") {
    print_config(out, cfg);
    out << "q,D,c_vector,lambda_status,lambda_value,lambda_halfwidth,double_root\n";
    out << L.q << "," << *L.D << "," << join(L.c, ";") << "," << lambda_status_name(r.status) << ","
        << to_json(r)["value"].dump() << "," << to_json(r)["halfwidth"].dump() << "," << (dr ? "true" : "false")
        << "\n";
  } else {
    print_config(out, cfg);
    out << "D          " << *L.D << "\n";
    out << "c          " << join(L.c, " ") << "\n";
    out << "status     " << lambda_status_name(r.status) << "\n";
    out << "value      " << opt_num(r.value) << "\n";
    out << "halfwidth  " << opt_num(r.halfwidth) << "\n";
    out << "witness    " << r.witness << "\n";
  }
}

// ---- zeta ----

struct ZetaArgs {
  Common common;
  std::string field, poly;
};

void cmd_zeta(const ZetaArgs& a, Json cfg, std::ostream& out) {
  const FieldPtr F = parse_field(a.field);
  const GoodPair pair = check_good(parse_poly(F, a.poly));
  cfg.update(field_config(F));
  const CountProfile profile = count_profile(pair);
  LData Z = zeta_numerator(profile);
  Z.D = pair.D().to_string();
  const LData L = compute_L(pair);
  const bool agree = L.c == Z.c;
  const bool weil = within_weil_bound(profile);
  if (a.common.format == "json") {
    print_json(out, Json{{"config", cfg},
                         {"profile", to_json(profile)},
                         {"numerator", to_json(Z)},
                         {"matches_character_sum", agree},
                         {"weil_bound", weil}});
  } else if (a.common.format == "csv") {
    print_config(out, cfg);
    out << "# numerator=" << join(Z.c, ";") << "\n";
    out << "# matches_character_sum=" << (agree ? "true" : "false") << "\n";
    out << "m,N_m\n";
    for (std::size_t m = 0; m < profile.N.size(); ++m) out << m + 1 << "," << profile.N[m] << "\n";
  } else {
    print_config(out, cfg);
    out << "D          " << pair.D().to_string() << "\n";
    for (std::size_t m = 0; m < profile.N.size(); ++m) out << "N_" << m + 1 << "        " << profile.N[m] << "\n";
    out << "numerator  " << join(Z.c, " ") << "\n";
    out << "character-sum L " << (agree ? "agrees" : "DIFFERS") << "\n";
    out << "weil bound      " << (weil ? "ok" : "FAILED") << "\n";
  }
  if (!agree || !weil) throw VerificationFailure("point counts disagree with the character sums");
}

// ---- gauss ----

struct GaussArgs {
  Common common;
  std::string field = "5";
  unsigned n_max = 3;
};

void cmd_gauss(const GaussArgs& a, Json cfg, std::ostream& out) {
  const FieldPtr F = parse_field(a.field);
  if (a.n_max == 0) throw Error(Errc::InvalidArgument, "--n-max must be positive");
  cfg.update(field_config(F));
  cfg["n_max"] = a.n_max;
  const EigenvalueSet set = eigenvalue_set(F);
  struct Row {
    std::uint64_t a;
    unsigned n;
    CycInt S;
    std::int64_t norm;
    bool fix;
  };
  std::vector<Row> rows;
  bool ok = true;
  for (unsigned n = 1; n <= a.n_max; ++n) {
    for (std::uint64_t k = 0; k < F->order(); ++k) {
      const CharSpec spec{F, F->from_index(k)};
      CycInt S = gauss_S(spec, n);
      const bool fix = S_via_fix(spec, n) == S;
      const std::int64_t norm = norm_sq(S);
      const auto qn = static_cast<std::int64_t>(checked_pow(F->order(), n));
      ok = ok && fix && (k == 0 ? S == CycInt(F->characteristic(), qn) : norm == qn);
      rows.push_back({k, n, std::move(S), norm, fix});
    }
  }
  if (a.common.format == "json") {
    Json jr = Json::array();
    for (const auto& r : rows) {
      jr.push_back({{"a", r.a}, {"n", r.n}, {"S", to_json(r.S)}, {"norm_sq", r.norm}, {"fix_agrees", r.fix}});
    }
    print_json(out, Json{{"config", cfg},
                         {"sums", jr},
                         {"eigenvalues",
                          {{"p_star", set.p_star},
                           {"sqrt_p_star", to_json(set.sqrt_p_star)},
                           {"plus_count", set.plus_count},
                           {"minus_count", set.minus_count}}},
                         {"ok", ok}});
  } else if (a.common.format == "csv") {
    print_config(out, cfg);
    out << "# p_star=" << set.p_star << " plus_count=" << set.plus_count << " minus_count=" << set.minus_count << "\n";
    out << "a,n,S,re,im,norm_sq,fix_agrees\n";
    for (const auto& r : rows) {
      const auto z = r.S.to_complex();
      out << r.a << "," << r.n << "," << r.S.to_string() << "," << num(z.real()) << "," << num(z.imag()) << ","
          << r.norm << "," << (r.fix ? "true" : "false") << "\n";
    }
  } else {
    print_config(out, cfg);
    out << "sqrt p* = " << set.sqrt_p_star.to_string() << ", p* = " << set.p_star << "\n";
    out << "eigenvalues +(sqrt p*)^" << set.r << " x" << set.plus_count << ", -(sqrt p*)^" << set.r << " x"
        << set.minus_count << "\n";
    char line[160];
    std::snprintf(line, sizeof line, "%-6s %-3s %-14s %-10s %s\n", "a", "n", "|S|^2", "fix", "S");
    out << line;
    for (const auto& r : rows) {
      std::snprintf(line, sizeof line, "%-6llu %-3u %-14lld %-10s ", static_cast<unsigned long long>(r.a), r.n,
                    static_cast<long long>(r.norm), r.fix ? "ok" : "DIFFERS");
      out << line << r.S.to_string() << "\n";
    }
  }
  if (!ok) throw VerificationFailure("Gauss-sum identities failed");
}

// ---- super ----

struct SuperArgs {
  Common common;
  std::string curve = "0,0,0,1,0";
  bool x011 = false;
  std::uint64_t bound = 200;
  std::optional<std::uint64_t> certify;
  unsigned jobs = 1;
};

void cmd_super(const SuperArgs& a, Json cfg, std::ostream& out) {
  const WeierstrassQ E = a.x011 ? WeierstrassQ::x0_11() : parse_curve(a.curve);
  cfg["curve"] = E.to_string();
  if (a.certify) {
    const auto cert = certify_maximal(E, *a.certify);
    cfg["p"] = *a.certify;
    if (a.common.format == "json") {
      print_json(out, Json{{"config", cfg}, {"certificate", to_json(cert)}});
    } else if (a.common.format == "csv") {
      print_config(out, cfg);
      out << "p,a_p,a_p2,N_p2,counted_directly,extremality,lambda_zero\n";
      out << cert.p << "," << cert.a_p << "," << cert.a_p2.str() << "," << cert.N_p2 << ","
          << (cert.counted_directly ? "true" : "false") << "," << extremality_name(cert.extremality) << ","
          << (cert.lambda_zero ? "true" : "false") << "\n";
    } else {
      print_config(out, cfg);
      out << "a_p         " << cert.a_p << "\n";
      out << "a_{p^2}     " << cert.a_p2.str() << "\n";
      out << "N(F_{p^2})  " << cert.N_p2 << (cert.counted_directly ? " (direct count)" : " (from lift_trace)") << "\n";
      out << "class       " << extremality_name(cert.extremality) << "\n";
      out << "Lambda = 0  " << (cert.lambda_zero ? "certified: |a_{p^2}| = 2p" : "NOT certified") << "\n";
    }
    if (cert.extremality != Extremality::Maximal || !cert.lambda_zero) throw VerificationFailure("not maximal");
    return;
  }

  cfg["bound"] = a.bound;
  std::vector<TraceRecord> records;
  std::optional<X011Report> rep;
  if (a.x011) {
    rep = x0_11_scan(a.bound, a.jobs);
    records = rep->records;
  } else {
    records = scan_primes(E, 3, a.bound, a.jobs);
  }
  std::vector<MaximalCertificate> certs;
  for (const auto& r : records) {
    if (r.supersingular) certs.push_back(certify_maximal(E, r.p));
  }
  bool ok = !rep || rep->ok();
  for (const auto& c : certs) ok = ok && c.extremality == Extremality::Maximal && c.lambda_zero;

  if (a.common.format == "json") {
    Json jr = Json::array();
    for (const auto& r : records) jr.push_back(to_json(r));
    Json jc = Json::array();
    for (const auto& c : certs) jc.push_back(to_json(c));
    Json doc{{"config", cfg}, {"records", jr}, {"certificates", jc}};
    if (rep) {
      Json x = to_json(*rep);
      x.erase("records");
      doc["x011"] = x;
    }
    print_json(out, doc);
  } else if (a.common.format == "csv") {
    print_config(out, cfg);
    out << kTraceCsvHeader << "\n";
    for (const auto& r : records) out << trace_csv_row(r) << "\n";
  } else {
    print_config(out, cfg);
    out << "good odd primes scanned  " << records.size() << "\n";
    out << "supersingular (p > 5)    ";
    for (const auto& c : certs) out << c.p << " ";
    out << "\n";
    for (const auto& c : certs) {
      out << "  p=" << c.p << "  N(F_{p^2})=" << c.N_p2 << "  " << extremality_name(c.extremality)
          << "  a_{p^2}=" << c.a_p2.str() << (c.lambda_zero ? "  Lambda=0" : "  Lambda!=0") << "\n";
    }
    if (rep) {
      out << "N_p = 0 mod 5            " << (rep->all_divisible_by_5 ? "yes" : "NO") << "\n";
      out << "supersingular = 4 mod 5  " << (rep->supersingular_4_mod_5 ? "yes" : "NO") << "\n";
      out << "split in Q(sqrt 5)       " << (rep->supersingular_split ? "yes" : "NO") << "\n";
      out << "a_3, a_5                 " << rep->a3 << ", " << rep->a5 << "\n";
    }
  }
  if (!ok) throw VerificationFailure("supersingular checks failed");
}

// ---- sweep ----

struct SweepArgs {
  Common common;
  Lambda lambda;
  std::string kind = "fixed-degree";
  std::string q = "5";
  unsigned deg = 5;
  unsigned max_deg = 5;
  std::string D = "T^3+T+1";
  std::uint64_t p_max = 100;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> count;
  std::optional<std::string> checkpoint;
  bool resume = false;
  unsigned jobs = 1;
  bool timing = false;
  std::optional<std::uint64_t> stop_after;
  unsigned bins = 10;
};

FamilySpec family_spec(const SweepArgs& a) {
  FamilySpec spec;
  if (a.kind == "fixed-degree") {
    spec.kind = FamilyKind::FixedDegree;
    spec.deg = a.deg;
    spec.q_list = parse_uint_list(a.q);
  } else if (a.kind == "fixed-q") {
    spec.kind = FamilyKind::FixedQAllDegrees;
    const auto qs = parse_uint_list(a.q);
    if (qs.size() != 1) throw Error(Errc::InvalidArgument, "fixed-q needs a single --q");
    spec.q = qs[0];
    spec.max_deg = a.max_deg;
  } else {
    spec.kind = FamilyKind::ReductionFamily;
    spec.D_int = parse_int_poly(a.D);
    spec.p_max = a.p_max;
  }
  if (a.seed.has_value() != a.count.has_value()) {
    throw Error(Errc::InvalidArgument, "--seed and --count go together");
  }
  if (a.seed) spec.sample = SampleMode{*a.seed, *a.count};
  if (a.resume && !a.checkpoint) throw Error(Errc::InvalidArgument, "--resume needs --checkpoint");
  return spec;
}

void cmd_sweep(const SweepArgs& a, Json cfg, std::ostream& out) {
  const FamilySpec spec = family_spec(a);
  SweepOptions opts;
  opts.jobs = a.jobs;
  opts.lambda = lambda_options(a.lambda);
  opts.timing = a.timing;
  opts.histogram_bins = a.bins;
  opts.checkpoint = a.checkpoint;
  opts.resume = a.resume;
  opts.stop_after = a.stop_after;
  cfg["spec"] = spec.canonical();
  cfg["spec_hash"] = spec_hash(spec, opts.lambda);
  cfg["seed"] = spec.sample ? Json(spec.sample->seed) : Json("none");
  add_lambda_config(cfg, opts.lambda);

  const bool csv = a.common.format == "csv";
  if (csv) {
    print_config(out, cfg);
    out << kSweepCsvHeader << "\n";
    opts.on_record = [&](const SweepRecord& r) { out << sweep_csv_row(r) << "\n"; };
  }
  const SweepResult res = run_sweep(spec, opts);
  const SweepSummary& s = res.summary;

  bool ok = true;
  for (const auto& r : res.records) ok = ok && r.double_root == (r.lambda.status == LambdaStatus::ExactZero);
  if (s.contains_xq_minus_x) ok = ok && s.exact_zero > 0 && s.max_lambda && *s.max_lambda == 0.0;

  if (a.common.format == "json") {
    Json jr = Json::array();
    for (const auto& r : res.records) jr.push_back(to_json(r));
    print_json(out, Json{{"config", cfg},
                         {"complete", res.complete},
                         {"resumed", res.resumed},
                         {"records", jr},
                         {"summary", to_json(s)}});
  } else if (csv) {
    out << "# summary members=" << s.members << " max=" << (s.max_lambda ? to_json(s)["max_lambda"].dump() : "none")
        << " exact0=" << s.exact_zero << " complete=" << (res.complete ? "true" : "false") << "\n";
  } else {
    print_config(out, cfg);
    out << "members           " << s.members << (res.complete ? "" : " (incomplete)") << "\n";
    if (res.resumed) out << "resumed           " << res.resumed << " records from the checkpoint\n";
    out << "max Lambda        " << opt_num(s.max_lambda);
    if (s.argmax_seq) out << " at seq " << *s.argmax_seq << " (" << s.argmax_D << " over F_" << s.argmax_q << ")";
    out << "\n";
    out << "exact zeros       " << s.exact_zero << "\n";
    for (int k = 0; k < 4; ++k) {
      char line[64];
      std::snprintf(line, sizeof line, "  %-8s %llu\n", lambda_status_name(static_cast<LambdaStatus>(k)),
                    static_cast<unsigned long long>(s.status_counts[static_cast<std::size_t>(k)]));
      out << line;
    }
    out << "best without double root (observational)  " << opt_num(s.best_non_double_root) << "\n";
    out << "histogram of numeric Lambda\n";
    for (const auto& b : s.histogram) out << "  [" << num(b.lo) << ", " << num(b.hi) << "]  " << b.count << "\n";
  }
  if (!ok) throw VerificationFailure("sweep invariants failed");
}

// ---- satotate ----

struct SatoTateArgs {
  Common common;
  std::string D = "T^3+T+1";
  std::uint64_t p_max = 10000;
};

void cmd_satotate(const SatoTateArgs& a, Json cfg, std::ostream& out) {
  const auto D = parse_int_poly(a.D);
  cfg["D"] = int_poly_string(D);
  cfg["p_max"] = a.p_max;
  const SatoTateReport rep = satotate_scan(D, a.p_max);
  if (a.common.format == "json") {
    print_json(out, Json{{"config", cfg}, {"report", to_json(rep)}});
  } else if (a.common.format == "csv") {
    print_config(out, cfg);
    out << "# observational scan; no limit is asserted\n";
    out << "p,a_p,ratio,lambda_status,lambda_value,running_max\n";
    for (const auto& r : rep.records) {
      out << r.p << "," << r.a_p << "," << Json(r.ratio).dump() << "," << lambda_status_name(r.lambda.status) << ","
          << (r.lambda.value ? Json(*r.lambda.value).dump() : "") << ","
          << (r.running_max ? Json(*r.running_max).dump() : "") << "\n";
    }
  } else {
    print_config(out, cfg);
    out << "good odd primes       " << rep.records.size() << "\n";
    out << "running max Lambda    " << opt_num(rep.max_lambda) << " at p = " << rep.argmax_p << "\n";
    out << "max |a_p|/(2 sqrt p)  " << num(rep.max_abs_ratio) << " at p = " << rep.max_abs_ratio_p << "\n";
    out << "observational scan: evidence only, no limit is asserted\n";
  }
}

// ---- verify ----

struct VerifyArgs {
  Common common;
  std::string suite = "all";
  std::string fields;
  unsigned deg = 3;
  unsigned n_max = 3;
  std::uint64_t bound = 0;
  double tol_weil = 1e-9;
};

void cmd_verify(const VerifyArgs& a, Json cfg, std::ostream& out) {
  VerifyConfig vc;
  if (!a.fields.empty()) {
    vc.fields = parse_uint_list(a.fields);
    for (auto q : vc.fields) field_of_order(q);
  }
  vc.deg = a.deg;
  vc.n_max = a.n_max;
  vc.bound = a.bound;
  vc.tol_weil = a.tol_weil;
  std::vector<std::string> names;
  if (a.suite == "all") {
    names = kSuiteNames;
  } else {
    names.push_back(a.suite);
  }
  cfg["suite"] = a.suite;
  cfg["fields"] = a.fields.empty() ? "default" : a.fields;
  cfg["deg"] = vc.deg;
  cfg["n_max"] = vc.n_max;
  cfg["bound"] = vc.bound ? Json(vc.bound) : Json("default");
  cfg["tol_weil"] = vc.tol_weil;

  std::vector<SuiteResult> results;
  for (const auto& n : names) results.push_back(run_suite(n, vc));
  bool ok = true;
  for (const auto& r : results) ok = ok && r.pass;

  if (a.common.format == "json") {
    Json js = Json::array();
    for (const auto& r : results) {
      js.push_back({{"name", r.name}, {"pass", r.pass}, {"checked", r.checked}, {"detail", r.detail}});
    }
    print_json(out, Json{{"config", cfg}, {"suites", js}, {"pass", ok}});
  } else if (a.common.format == "csv") {
    print_config(out, cfg);
    out << "suite,pass,checked,detail\n";
    for (const auto& r : results) {
      out << r.name << "," << (r.pass ? "true" : "false") << "," << r.checked << "," << csv_cell(r.detail) << "\n";
    }
  } else {
    print_config(out, cfg);
    for (const auto& r : results) {
      char line[64];
      std::snprintf(line, sizeof line, "%-11s %-5s %8llu  ", r.name.c_str(), r.pass ? "PASS" : "FAIL",
                    static_cast<unsigned long long>(r.checked));
      out << line << r.detail << "\n";
    }
  }
  if (!ok) throw VerificationFailure("verification failed");
}

// Restores the process-wide enumeration limit after an in-process run.
class LimitGuard {
 public:
  LimitGuard() : saved_(enumeration_limit()) {}
  ~LimitGuard() { set_enumeration_limit(saved_); }
  LimitGuard(const LimitGuard&) = delete;
  LimitGuard& operator=(const LimitGuard&) = delete;

 private:
  std::uint64_t saved_;
};

}  // namespace

int exit_code_for(Errc code) noexcept {
  switch (code) {
    case Errc::SizeExceeded:
      return kResource;
    case Errc::RootFindingFailure:
    case Errc::NonIntegralCoefficient:
    case Errc::ProfileIncomplete:
    case Errc::IndeterminateNearBoundary:
      return kInternal;
    case Errc::ClosedFormMismatch:
      return kVerification;
    default:
      return kValidation;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quadratic L-functions over F_q[T] and their De Bruijn-Newman constants", "fflambda"};
  app.require_subcommand(1);

  LfunArgs lfun;
  auto* s_lfun = app.add_subcommand("lfun", "L-polynomial of (D, q) by character sums");
  add_common(s_lfun, lfun.common);
  s_lfun->add_option("--field", lfun.field, "Field: p, p^r or a prime power")->required();
  s_lfun->add_option("--poly", lfun.poly, "Monic squarefree D of odd degree, e.g. T^3+T+1")->required();
  s_lfun->add_option("--tol-weil", lfun.tol_weil, "Tolerance on | |alpha| - sqrt q |");

  LambdaArgs lam;
  auto* s_lambda = app.add_subcommand("lambda", "De Bruijn-Newman constant of (D, q)");
  add_common(s_lambda, lam.common);
  add_lambda(s_lambda, lam.lambda);
  s_lambda->add_option("--field", lam.field, "Field: p, p^r or a prime power")->required();
  s_lambda->add_option("--poly", lam.poly, "Monic squarefree D of odd degree")->required();

  ZetaArgs zeta;
  auto* s_zeta = app.add_subcommand("zeta", "Point counts and the zeta numerator");
  add_common(s_zeta, zeta.common);
  s_zeta->add_option("--field", zeta.field, "Field: p, p^r or a prime power")->required();
  s_zeta->add_option("--poly", zeta.poly, "Monic squarefree D of odd degree")->required();

  GaussArgs gauss;
  auto* s_gauss = app.add_subcommand("gauss", "Gauss sums for y^2 = x^q - x");
  add_common(s_gauss, gauss.common);
  s_gauss->add_option("--field", gauss.field, "Field: p, p^r or a prime power");
  s_gauss->add_option("--n-max", gauss.n_max, "Largest extension degree n");

  SuperArgs sup;
  auto* s_super = app.add_subcommand("super", "Supersingular primes and maximal-curve certificates");
  add_common(s_super, sup.common);
  s_super->add_option("--curve", sup.curve, "a1,a2,a3,a4,a6 (default y^2 = x^3 + x)");
  s_super->add_flag("--x011", sup.x011, "Use y^2 + y = x^3 - x^2 - 10x - 20 and check the mod-5 congruences");
  s_super->add_option("--bound", sup.bound, "Largest prime scanned");
  s_super->add_option("--certify", sup.certify, "Certify a single prime");
  s_super->add_option("--jobs", sup.jobs, "Worker threads");

  SweepArgs sw;
  auto* s_sweep = app.add_subcommand("sweep", "Lambda over a family of good pairs");
  add_common(s_sweep, sw.common);
  add_lambda(s_sweep, sw.lambda);
  s_sweep->add_option("--kind", sw.kind, "fixed-degree, fixed-q or reduction")
      ->check(CLI::IsMember({"fixed-degree", "fixed-q", "reduction"}));
  s_sweep->add_option("--q", sw.q, "Field order, comma separated for fixed-degree");
  s_sweep->add_option("--deg", sw.deg, "Degree (fixed-degree)");
  s_sweep->add_option("--max-deg", sw.max_deg, "Largest odd degree (fixed-q)");
  s_sweep->add_option("--D", sw.D, "Monic D over Z (reduction)");
  s_sweep->add_option("--p-max", sw.p_max, "Largest prime (reduction)");
  s_sweep->add_option("--seed", sw.seed, "Sample seed");
  s_sweep->add_option("--count", sw.count, "Sample size");
  s_sweep->add_option("--checkpoint", sw.checkpoint, "Append-only checkpoint file");
  s_sweep->add_flag("--resume", sw.resume, "Replay the checkpoint and continue");
  s_sweep->add_option("--jobs", sw.jobs, "Worker threads");
  s_sweep->add_flag("--timing", sw.timing, "Record runtime_ms (output is then not reproducible)");
  s_sweep->add_option("--stop-after", sw.stop_after, "Stop after this many new records");
  s_sweep->add_option("--bins", sw.bins, "Histogram bins");

  SatoTateArgs st;
  auto* s_st = app.add_subcommand("satotate", "a_p / (2 sqrt p) and Lambda over good primes (observational)");
  add_common(s_st, st.common);
  s_st->add_option("--D", st.D, "Monic squarefree cubic over Z");
  s_st->add_option("--p-max", st.p_max, "Largest prime");

  VerifyArgs ver;
  auto* s_verify = app.add_subcommand("verify", "Cross-module invariant suites");
  add_common(s_verify, ver.common);
  s_verify->add_option("suite", ver.suite, "fe, rh, crosscheck, gauss, katz, maximal, x011 or all")
      ->check(CLI::IsMember({"all", "fe", "rh", "crosscheck", "gauss", "katz", "maximal", "x011"}));
  s_verify->add_option("--field", ver.fields, "Comma-separated field orders");
  s_verify->add_option("--deg", ver.deg, "Degree for fe, rh and crosscheck");
  s_verify->add_option("--n-max", ver.n_max, "Largest n for gauss");
  s_verify->add_option("--bound", ver.bound, "Prime bound for maximal and x011");
  s_verify->add_option("--tol-weil", ver.tol_weil, "Tolerance for rh");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kValidation;
  }

  LimitGuard guard;
  try {
    const Common* common = nullptr;
    for (const Common* c : {&lfun.common, &lam.common, &zeta.common, &gauss.common, &sup.common, &sw.common,
                            &st.common, &ver.common}) {
      if (c->max_enum) common = c;
    }
    if (common != nullptr) {
      set_enumeration_limit(*common->max_enum);
    } else if (const auto env = env_uint("FFLAMBDA_MAX_ENUM")) {
      set_enumeration_limit(*env);
    }
    Json cfg{{"command", app.get_subcommands().front()->get_name()}, {"max_enum", enumeration_limit()}};

    if (s_lfun->parsed()) cmd_lfun(lfun, cfg, out);
    if (s_lambda->parsed()) cmd_lambda(lam, cfg, out);
    if (s_zeta->parsed()) cmd_zeta(zeta, cfg, out);
    if (s_gauss->parsed()) cmd_gauss(gauss, cfg, out);
    if (s_super->parsed()) cmd_super(sup, cfg, out);
    if (s_sweep->parsed()) cmd_sweep(sw, cfg, out);
    if (s_st->parsed()) cmd_satotate(st, cfg, out);
    if (s_verify->parsed()) cmd_verify(ver, cfg, out);
    return kOk;
  } catch (const VerificationFailure& e) {
    err << "verification failure: " << e.what() << "\n";
    return kVerification;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace fflambda::cli
