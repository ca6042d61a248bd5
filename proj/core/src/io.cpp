#include "fflambda/io.hpp"

namespace fflambda {
namespace {

Json opt(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

std::optional<double> opt_from(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<double>();
}

template <typename F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, std::string(what) + ": " + e.what());
  }
}

}  // namespace

Json to_json(const LData& L) {
  return Json{{"q", L.q}, {"g", L.g}, {"c", L.c}, {"D", L.D ? Json(*L.D) : Json(nullptr)}};
}

LData ldata_from_json(const Json& j) {
  return guarded("LData", [&] {
    LData L;
    L.q = j.at("q").get<std::uint64_t>();
    L.g = j.at("g").get<int>();
    L.c = j.at("c").get<std::vector<std::int64_t>>();
    if (j.contains("D") && !j.at("D").is_null()) L.D = j.at("D").get<std::string>();
    return L;
  });
}

Json to_json(const CountProfile& profile) {
  return Json{{"q", profile.q}, {"D", profile.D.to_string()}, {"N", profile.N}};
}

Json to_json(const LambdaResult& r) {
  return Json{{"status", lambda_status_name(r.status)},
              {"value", opt(r.value)},
              {"halfwidth", opt(r.halfwidth)},
              {"witness", r.witness}};
}

LambdaResult lambda_from_json(const Json& j) {
  return guarded("LambdaResult", [&] {
    LambdaResult r;
    r.status = parse_lambda_status(j.at("status").get<std::string>());
    r.value = opt_from(j.at("value"));
    r.halfwidth = opt_from(j.at("halfwidth"));
    r.witness = j.at("witness").get<std::string>();
    return r;
  });
}

Json to_json(const CycInt& z) {
  const auto c = z.to_complex();
  return Json{{"p", z.p()}, {"coeffs", z.coeffs()}, {"approx", {{"re", c.real()}, {"im", c.imag()}}}};
}

CycInt cycint_from_json(const Json& j) {
  return guarded("CycInt", [&] {
    return CycInt(j.at("p").get<std::uint32_t>(), j.at("coeffs").get<std::vector<std::int64_t>>());
  });
}

Json to_json(const SweepRecord& r) {
  return Json{{"seq", r.seq},
              {"q", r.q},
              {"D", r.D},
              {"c_vector", r.c},
              {"lambda_status", lambda_status_name(r.lambda.status)},
              {"lambda_value", opt(r.lambda.value)},
              {"lambda_halfwidth", opt(r.lambda.halfwidth)},
              {"double_root", r.double_root},
              {"runtime_ms", opt(r.runtime_ms)}};
}

Json to_json(const SweepSummary& s) {
  Json counts = Json::object();
  for (int k = 0; k < 4; ++k) {
    counts[lambda_status_name(static_cast<LambdaStatus>(k))] = s.status_counts[static_cast<std::size_t>(k)];
  }
  Json hist = Json::array();
  for (const auto& b : s.histogram) hist.push_back({{"lo", b.lo}, {"hi", b.hi}, {"count", b.count}});
  Json j{{"members", s.members},
         {"max_lambda", opt(s.max_lambda)},
         {"argmax_seq", s.argmax_seq ? Json(*s.argmax_seq) : Json(nullptr)},
         {"argmax_q", s.argmax_seq ? Json(s.argmax_q) : Json(nullptr)},
         {"argmax_D", s.argmax_seq ? Json(s.argmax_D) : Json(nullptr)},
         {"exact_zero", s.exact_zero},
         {"status_counts", counts},
         {"contains_xq_minus_x", s.contains_xq_minus_x},
         {"observational", {{"best_non_double_root", opt(s.best_non_double_root)},
                            {"best_non_double_root_seq", s.best_non_double_root_seq
                                                             ? Json(*s.best_non_double_root_seq)
                                                             : Json(nullptr)}}},
         {"histogram", hist}};
  return j;
}

Json to_json(const TraceRecord& r) {
  return Json{{"p", r.p}, {"a_p", r.a_p}, {"N_p", r.N_p}, {"supersingular", r.supersingular}, {"p_mod_5", r.p % 5}};
}

Json to_json(const MaximalCertificate& c) {
  return Json{{"p", c.p},
              {"a_p", c.a_p},
              {"a_p2", c.a_p2.str()},
              {"N_p2", c.N_p2},
              {"counted_directly", c.counted_directly},
              {"extremality", extremality_name(c.extremality)},
              {"lambda_zero", c.lambda_zero},
              {"sign", c.sign}};
}

Json to_json(const X011Report& r) {
  Json records = Json::array();
  for (const auto& t : r.records) records.push_back(to_json(t));
  return Json{{"bound", r.bound},
              {"bad_primes", r.bad_primes},
              {"supersingular", r.supersingular},
              {"all_divisible_by_5", r.all_divisible_by_5},
              {"supersingular_4_mod_5", r.supersingular_4_mod_5},
              {"supersingular_split_in_Q_sqrt5", r.supersingular_split},
              {"a_3", r.a3},
              {"a_5", r.a5},
              {"ok", r.ok()},
              {"records", records}};
}

Json to_json(const SatoTateReport& r) {
  Json records = Json::array();
  for (const auto& s : r.records) {
    records.push_back({{"p", s.p},
                       {"a_p", s.a_p},
                       {"ratio", s.ratio},
                       {"lambda", to_json(s.lambda)},
                       {"running_max", opt(s.running_max)},
                       {"running_argmax", s.running_argmax}});
  }
  return Json{{"D", r.D},
              {"p_max", r.p_max},
              {"observational", true},
              {"max_lambda", opt(r.max_lambda)},
              {"argmax_p", r.argmax_p},
              {"max_abs_ratio", r.max_abs_ratio},
              {"max_abs_ratio_p", r.max_abs_ratio_p},
              {"records", records}};
}

std::string ldata_csv_row(const LData& L, std::size_t width) {
  std::string row = std::to_string(L.q) + "," + (L.D ? *L.D : std::string());
  for (auto c : L.c) row += "," + std::to_string(c);
  for (std::size_t i = L.c.size(); i < width; ++i) row += ",";
  return row;
}

const char* const kTraceCsvHeader = "p,a_p,N_p,supersingular,p_mod_5";

std::string trace_csv_row(const TraceRecord& r) {
  return std::to_string(r.p) + "," + std::to_string(r.a_p) + "," + std::to_string(r.N_p) + "," +
         (r.supersingular ? "true" : "false") + "," + std::to_string(r.p % 5);
}

}  // namespace fflambda
