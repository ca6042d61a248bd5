#pragma once

// Families of good pairs, batch Lambda computation and checkpointed runs.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "fflambda/arithgeo.hpp"
#include "fflambda/deformation.hpp"

namespace fflambda {

enum class FamilyKind { FixedQAllDegrees, FixedDegree, ReductionFamily };
const char* family_kind_name(FamilyKind k) noexcept;

struct SampleMode {
  std::uint64_t seed = 0;
  std::uint64_t count = 0;
};

struct FamilySpec {
  FamilyKind kind = FamilyKind::FixedDegree;
  // FixedQAllDegrees: odd degrees 3..max_deg over F_q.
  std::uint64_t q = 0;
  unsigned max_deg = 0;
  // FixedDegree: degree deg over each field in q_list.
  unsigned deg = 0;
  std::vector<std::uint64_t> q_list;
  // ReductionFamily: monic D over Z (constant first) reduced at odd primes <= p_max.
  std::vector<std::int64_t> D_int;
  std::uint64_t p_max = 0;
  // Exhaustive when empty.
  std::optional<SampleMode> sample;

  // Canonical one-line description; feeds the checkpoint hash.
  std::string canonical() const;
};

// Field of order q = p^r; throws NotPrime or EvenCharacteristic.
FieldPtr field_of_order(std::uint64_t q);

// Number of monic squarefree polynomials of degree d over F_q: q^d - q^{d-1}
// for d >= 2, and q^d for d <= 1.
std::uint64_t squarefree_count(std::uint64_t q, unsigned d) noexcept;

// Uniform draw in [0, n) from the raw 64-bit output by rejection, so the
// stream depends only on the mt19937_64 sequence.
std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t n);

// Deterministic member stream. Exhaustive order: fields in the order given
// (FixedDegree) or degrees ascending (FixedQAllDegrees), then monic index
// order within a degree; primes ascending for ReductionFamily. Sample draws
// uniformly over the same candidate list with mt19937_64(seed), rejecting
// non-good candidates and repeats, and yields members in draw order.
std::vector<GoodPair> enum_family(const FamilySpec& spec);

struct SweepRecord {
  std::uint64_t seq = 0;
  std::uint64_t q = 0;
  std::string D;
  std::vector<std::int64_t> c;
  LambdaResult lambda;
  bool double_root = false;
  std::optional<double> runtime_ms;
};

SweepRecord sweep_member(const GoodPair& pair, std::uint64_t seq, const LambdaOptions& opts, bool timing);

struct HistogramBin {
  double lo = 0.0;
  double hi = 0.0;
  std::uint64_t count = 0;
};

struct SweepSummary {
  std::uint64_t members = 0;
  std::optional<double> max_lambda;  // over ExactZero, Numeric and FloorHit records
  std::optional<std::uint64_t> argmax_seq;
  std::string argmax_D;
  std::uint64_t argmax_q = 0;
  std::uint64_t exact_zero = 0;
  std::array<std::uint64_t, 4> status_counts{};  // indexed by LambdaStatus
  // Observational: best Lambda among records without a double root.
  std::optional<double> best_non_double_root;
  std::optional<std::uint64_t> best_non_double_root_seq;
  std::vector<HistogramBin> histogram;  // Numeric values
  bool contains_xq_minus_x = false;     // some member is T^q - T with q >= 5
};

SweepSummary summarize(const std::vector<SweepRecord>& records, unsigned bins = 10);

struct SweepOptions {
  unsigned jobs = 1;
  LambdaOptions lambda;
  bool timing = false;
  unsigned histogram_bins = 10;
  std::optional<std::string> checkpoint;
  bool resume = false;
  // Stop after this many new records (leaves an unfinished checkpoint).
  std::optional<std::uint64_t> stop_after;
  std::function<void(const SweepRecord&)> on_record;
};

struct SweepResult {
  std::vector<SweepRecord> records;
  SweepSummary summary;
  bool complete = true;
  std::uint64_t resumed = 0;  // records replayed from the checkpoint
};

// FNV-1a 64 over the family and the Lambda options, as 16 hex digits.
std::string spec_hash(const FamilySpec& spec, const LambdaOptions& opts);

// Workers pull members by index; one writer emits records in sequence
// order, so output does not depend on the worker count.
SweepResult run_sweep(const FamilySpec& spec, const SweepOptions& opts = {});

extern const char* const kSweepCsvHeader;
std::string sweep_csv_row(const SweepRecord& r);
SweepRecord parse_sweep_csv_row(const std::string& line);

struct SatoTateRecord {
  std::uint64_t p = 0;
  std::int64_t a_p = 0;
  double ratio = 0.0;  // a_p / (2 sqrt p)
  LambdaResult lambda;
  std::optional<double> running_max;
  std::uint64_t running_argmax = 0;
};

struct SatoTateReport {
  std::vector<std::int64_t> D;
  std::uint64_t p_max = 0;
  std::vector<SatoTateRecord> records;
  std::optional<double> max_lambda;
  std::uint64_t argmax_p = 0;
  double max_abs_ratio = 0.0;
  std::uint64_t max_abs_ratio_p = 0;
};

// Lambda of y^2 = D(x) mod p over the odd good primes p <= p_max. Evidence
// only; no limit is asserted.
SatoTateReport satotate_scan(const std::vector<std::int64_t>& D, std::uint64_t p_max);

}  // namespace fflambda
