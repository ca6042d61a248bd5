#pragma once

// JSON and CSV forms of the result types.

#include <string>

#include <nlohmann/json.hpp>

#include "fflambda/charsum.hpp"
#include "fflambda/sweep.hpp"

namespace fflambda {

using Json = nlohmann::ordered_json;

Json to_json(const LData& L);
LData ldata_from_json(const Json& j);
Json to_json(const CountProfile& profile);
Json to_json(const LambdaResult& r);
LambdaResult lambda_from_json(const Json& j);
Json to_json(const CycInt& z);
CycInt cycint_from_json(const Json& j);
Json to_json(const SweepRecord& r);
Json to_json(const SweepSummary& s);
Json to_json(const TraceRecord& r);
Json to_json(const MaximalCertificate& c);
Json to_json(const X011Report& r);
Json to_json(const SatoTateReport& r);

// q, D, c_0..c_{2g}, padded with empty cells up to `width` coefficients.
std::string ldata_csv_row(const LData& L, std::size_t width = 0);

extern const char* const kTraceCsvHeader;
// p, a_p, N_p, supersingular, p_mod_5
std::string trace_csv_row(const TraceRecord& r);

}  // namespace fflambda
