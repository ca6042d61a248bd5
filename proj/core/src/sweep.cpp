#include "fflambda/sweep.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <condition_variable>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <limits>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "fflambda/limits.hpp"

namespace fflambda {
namespace {

std::string fmt_g17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt_opt(const std::optional<double>& v) { return v ? fmt_g17(*v) : std::string(); }

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(std::move(cur));
  return out;
}

std::optional<double> parse_opt_double(const std::string& s) {
  if (s.empty()) return std::nullopt;
  std::size_t used = 0;
  const double v = std::stod(s, &used);
  if (used != s.size()) throw Error(Errc::ParseError, "bad number '" + s + "'");
  return v;
}

struct Block {
  FieldPtr field;
  unsigned deg;
  std::uint64_t size;
};

std::vector<Block> candidate_blocks(const FamilySpec& spec) {
  std::vector<Block> blocks;
  auto add = [&](std::uint64_t q, unsigned d) {
    const FieldPtr F = field_of_order(q);
    blocks.push_back({F, d, checked_pow(q, d)});
  };
  if (spec.kind == FamilyKind::FixedQAllDegrees) {
    for (unsigned d = 3; d <= spec.max_deg; d += 2) add(spec.q, d);
  } else {
    for (auto q : spec.q_list) add(q, spec.deg);
  }
  return blocks;
}

std::vector<GoodPair> reduction_members(const FamilySpec& spec) {
  if (spec.D_int.empty() || spec.D_int.back() != 1) {
    throw Error(Errc::NotMonic, "reduction family needs a monic polynomial over Z");
  }
  std::vector<GoodPair> out;
  for (std::uint64_t p = 3; p <= spec.p_max; ++p) {
    if (!is_prime(p)) continue;
    const Poly D = Poly::from_ints(Field::prime(static_cast<std::uint32_t>(p)), spec.D_int);
    if (good_pair_violations(D).empty()) out.push_back(check_good(D));
  }
  return out;
}

std::string checkpoint_header(const FamilySpec& spec, const LambdaOptions& opts) {
  std::string h = "# fflambda sweep checkpoint\n";
  h += "# spec=" + spec.canonical() + "\n";
  h += "# spec_hash=" + spec_hash(spec, opts) + "\n";
  h += "# seed=" + (spec.sample ? std::to_string(spec.sample->seed) : std::string("none")) + "\n";
  h += std::string(kSweepCsvHeader) + "\n";
  return h;
}

std::string summary_line(const SweepSummary& s) {
  std::string line = "# summary members=" + std::to_string(s.members);
  line += " max=" + (s.max_lambda ? fmt_g17(*s.max_lambda) : std::string("none"));
  line += " argmax_seq=" + (s.argmax_seq ? std::to_string(*s.argmax_seq) : std::string("none"));
  for (int k = 0; k < 4; ++k) {
    line += std::string(" ") + lambda_status_name(static_cast<LambdaStatus>(k)) + "=" +
            std::to_string(s.status_counts[static_cast<std::size_t>(k)]);
  }
  return line + "\n";
}

struct Replay {
  std::vector<SweepRecord> records;
  bool finished = false;
};

Replay read_checkpoint(const std::string& path, const FamilySpec& spec, const LambdaOptions& opts,
                       const std::vector<GoodPair>& members) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  // A row cut off mid-write has no newline; drop it.
  if (const auto nl = text.rfind('\n'); nl != std::string::npos) {
    text.resize(nl + 1);
  } else {
    text.clear();
  }
  const std::string expected_hash = "# spec_hash=" + spec_hash(spec, opts);
  Replay replay;
  bool hash_seen = false;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.rfind("# spec_hash=", 0) == 0) {
      if (line != expected_hash) throw Error(Errc::CheckpointMismatch, "checkpoint " + path + " has " + line.substr(2));
      hash_seen = true;
      continue;
    }
    if (line.rfind("# summary", 0) == 0) {
      replay.finished = true;
      break;
    }
    if (line.empty() || line[0] == '#' || line == kSweepCsvHeader) continue;
    SweepRecord r = parse_sweep_csv_row(line);
    const auto seq = replay.records.size();
    if (r.seq != seq || seq >= members.size() || r.q != members[seq].q() || r.D != members[seq].D().to_string()) {
      throw Error(Errc::CheckpointMismatch, "checkpoint row " + std::to_string(seq) + " does not match the family");
    }
    replay.records.push_back(std::move(r));
  }
  if (!hash_seen) throw Error(Errc::CheckpointMismatch, "checkpoint " + path + " has no spec hash");
  return replay;
}

}  // namespace

const char* family_kind_name(FamilyKind k) noexcept {
  switch (k) {
    case FamilyKind::FixedQAllDegrees: return "fixed-q";
    case FamilyKind::FixedDegree: return "fixed-degree";
    case FamilyKind::ReductionFamily: return "reduction";
  }
  return "fixed-degree";
}

std::string FamilySpec::canonical() const {
  std::string s = std::string("kind=") + family_kind_name(kind);
  switch (kind) {
    case FamilyKind::FixedQAllDegrees:
      s += ";q=" + std::to_string(q) + ";max_deg=" + std::to_string(max_deg);
      break;
    case FamilyKind::FixedDegree: {
      s += ";deg=" + std::to_string(deg) + ";q=";
      for (std::size_t i = 0; i < q_list.size(); ++i) s += (i ? ":" : "") + std::to_string(q_list[i]);
      break;
    }
    case FamilyKind::ReductionFamily: {
      s += ";D=";
      for (std::size_t i = 0; i < D_int.size(); ++i) s += (i ? ":" : "") + std::to_string(D_int[i]);
      s += ";p_max=" + std::to_string(p_max);
      break;
    }
  }
  if (sample) {
    s += ";mode=sample;seed=" + std::to_string(sample->seed) + ";count=" + std::to_string(sample->count);
  } else {
    s += ";mode=exhaustive";
  }
  return s;
}

FieldPtr field_of_order(std::uint64_t q) {
  if (q < 2) throw Error(Errc::NotPrime, std::to_string(q) + " is not a prime power");
  std::uint64_t p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (q % p != 0) p = q;
  unsigned r = 0;
  std::uint64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++r;
  }
  if (rest != 1) throw Error(Errc::NotPrime, std::to_string(q) + " is not a prime power");
  if (p == 2) throw Error(Errc::EvenCharacteristic, "q = " + std::to_string(q) + " is even");
  return Field::make(static_cast<std::uint32_t>(p), r);
}

std::uint64_t squarefree_count(std::uint64_t q, unsigned d) noexcept {
  if (d <= 1) return checked_pow(q, d);
  return checked_pow(q, d) - checked_pow(q, d - 1);
}

std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t n) {
  if (n == 0) throw Error(Errc::InvalidArgument, "empty draw range");
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t excess = (max % n + 1) % n;  // 2^64 mod n
  for (;;) {
    const std::uint64_t x = rng();
    if (x <= max - excess) return x % n;
  }
}

std::vector<GoodPair> enum_family(const FamilySpec& spec) {
  if (spec.kind == FamilyKind::ReductionFamily) {
    std::vector<GoodPair> all = reduction_members(spec);
    if (!spec.sample) return all;
    if (spec.sample->count > all.size()) {
      throw Error(Errc::InvalidArgument, "sample of " + std::to_string(spec.sample->count) + " from " +
                                             std::to_string(all.size()) + " members");
    }
    std::mt19937_64 rng(spec.sample->seed);
    std::set<std::uint64_t> seen;
    std::vector<GoodPair> out;
    while (out.size() < spec.sample->count) {
      const auto k = bounded_draw(rng, all.size());
      if (seen.insert(k).second) out.push_back(all[k]);
    }
    return out;
  }

  const auto blocks = candidate_blocks(spec);
  std::uint64_t total = 0;
  std::uint64_t good_total = 0;
  for (const auto& b : blocks) {
    total += b.size;
    good_total += squarefree_count(b.field->order(), b.deg);
  }
  std::vector<GoodPair> out;
  if (!spec.sample) {
    require_enumerable(total, "enum_family");
    for (const auto& b : blocks) {
      for (const Poly& D : MonicPolys(b.field, b.deg)) {
        if (good_pair_violations(D).empty()) out.push_back(check_good(D));
      }
    }
    return out;
  }
  if (spec.sample->count > good_total) {
    throw Error(Errc::InvalidArgument, "sample of " + std::to_string(spec.sample->count) + " from " +
                                           std::to_string(good_total) + " members");
  }
  require_enumerable(spec.sample->count, "enum_family sample");
  std::mt19937_64 rng(spec.sample->seed);
  std::set<std::uint64_t> seen;
  while (out.size() < spec.sample->count) {
    std::uint64_t k = bounded_draw(rng, total);
    if (!seen.insert(k).second) continue;
    for (const auto& b : blocks) {
      if (k < b.size) {
        const Poly D = MonicPolys(b.field, b.deg).at(k);
        if (good_pair_violations(D).empty()) out.push_back(check_good(D));
        break;
      }
      k -= b.size;
    }
  }
  return out;
}

SweepRecord sweep_member(const GoodPair& pair, std::uint64_t seq, const LambdaOptions& opts, bool timing) {
  const auto start = std::chrono::steady_clock::now();
  SweepRecord r;
  r.seq = seq;
  r.q = pair.q();
  r.D = pair.D().to_string();
  const LData L = compute_L(pair);
  r.c = L.c;
  r.lambda = compute_lambda(L, opts);
  r.double_root = has_double_root(L);
  if (timing) {
    r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  return r;
}

SweepSummary summarize(const std::vector<SweepRecord>& records, unsigned bins) {
  SweepSummary s;
  s.members = records.size();
  std::vector<double> numeric;
  for (const auto& r : records) {
    const auto st = r.lambda.status;
    ++s.status_counts[static_cast<std::size_t>(st)];
    if (st == LambdaStatus::ExactZero) ++s.exact_zero;
    if (st == LambdaStatus::Numeric && r.lambda.value) numeric.push_back(*r.lambda.value);
    if (r.q >= 5 && r.D == "T^" + std::to_string(r.q) + "-T") s.contains_xq_minus_x = true;
    if (st == LambdaStatus::NegInfinity || !r.lambda.value) continue;
    const double v = *r.lambda.value;
    if (!s.max_lambda || v > *s.max_lambda) {
      s.max_lambda = v;
      s.argmax_seq = r.seq;
      s.argmax_D = r.D;
      s.argmax_q = r.q;
    }
    if (!r.double_root && (!s.best_non_double_root || v > *s.best_non_double_root)) {
      s.best_non_double_root = v;
      s.best_non_double_root_seq = r.seq;
    }
  }
  if (!numeric.empty() && bins > 0) {
    const auto [mn, mx] = std::minmax_element(numeric.begin(), numeric.end());
    const double lo = *mn;
    const double hi = *mx;
    const unsigned n = hi > lo ? bins : 1;
    const double width = (hi - lo) / n;
    for (unsigned i = 0; i < n; ++i) s.histogram.push_back({lo + i * width, i + 1 == n ? hi : lo + (i + 1) * width, 0});
    for (double v : numeric) {
      auto i = width > 0 ? static_cast<unsigned>((v - lo) / width) : 0u;
      ++s.histogram[std::min(i, n - 1)].count;
    }
  }
  return s;
}

std::string spec_hash(const FamilySpec& spec, const LambdaOptions& opts) {
  const std::string text = spec.canonical() + ";tol_t=" + fmt_g17(opts.tol_t) + ";t_floor=" + fmt_g17(opts.t_floor) +
                           ";tol_root=" + fmt_g17(opts.tol_root) + ";force_bisection=" +
                           (opts.force_bisection ? "1" : "0");
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

const char* const kSweepCsvHeader =
    "seq,q,D,c_vector,lambda_status,lambda_value,lambda_halfwidth,double_root,runtime_ms";

std::string sweep_csv_row(const SweepRecord& r) {
  std::string c;
  for (std::size_t i = 0; i < r.c.size(); ++i) c += (i ? ";" : "") + std::to_string(r.c[i]);
  std::string runtime;
  if (r.runtime_ms) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", *r.runtime_ms);
    runtime = buf;
  }
  return std::to_string(r.seq) + "," + std::to_string(r.q) + "," + r.D + "," + c + "," +
         lambda_status_name(r.lambda.status) + "," + fmt_opt(r.lambda.value) + "," + fmt_opt(r.lambda.halfwidth) + "," +
         (r.double_root ? "true" : "false") + "," + runtime;
}

SweepRecord parse_sweep_csv_row(const std::string& line) {
  const auto f = split(line, ',');
  if (f.size() != 9) throw Error(Errc::ParseError, "sweep row needs 9 fields: " + line);
  try {
    SweepRecord r;
    r.seq = std::stoull(f[0]);
    r.q = std::stoull(f[1]);
    r.D = f[2];
    for (const auto& c : split(f[3], ';')) r.c.push_back(std::stoll(c));
    r.lambda.status = parse_lambda_status(f[4]);
    r.lambda.value = parse_opt_double(f[5]);
    r.lambda.halfwidth = parse_opt_double(f[6]);
    if (f[7] != "true" && f[7] != "false") throw Error(Errc::ParseError, "bad double_root '" + f[7] + "'");
    r.double_root = f[7] == "true";
    r.runtime_ms = parse_opt_double(f[8]);
    return r;
  } catch (const std::logic_error&) {
    throw Error(Errc::ParseError, "malformed sweep row: " + line);
  }
}

SweepResult run_sweep(const FamilySpec& spec, const SweepOptions& opts) {
  const std::vector<GoodPair> members = enum_family(spec);
  SweepResult result;

  std::ofstream out;
  if (opts.checkpoint) {
    const std::string& path = *opts.checkpoint;
    Replay replay;
    if (opts.resume && std::filesystem::exists(path)) replay = read_checkpoint(path, spec, opts.lambda, members);
    result.resumed = replay.records.size();
    result.records = std::move(replay.records);
    // Rewrite the valid prefix so that appends start on a clean line.
    const std::string tmp = path + ".tmp";
    {
      std::ofstream w(tmp, std::ios::binary | std::ios::trunc);
      w << checkpoint_header(spec, opts.lambda);
      for (const auto& r : result.records) w << sweep_csv_row(r) << '\n';
      if (replay.finished && result.records.size() == members.size()) w << summary_line(summarize(result.records));
      if (!w) throw Error(Errc::InvalidArgument, "cannot write checkpoint " + tmp);
    }
    std::filesystem::rename(tmp, path);
    if (replay.finished && result.records.size() == members.size()) {
      for (const auto& r : result.records) {
        if (opts.on_record) opts.on_record(r);
      }
      result.summary = summarize(result.records, opts.histogram_bins);
      return result;
    }
    out.open(path, std::ios::binary | std::ios::app);
  }
  for (const auto& r : result.records) {
    if (opts.on_record) opts.on_record(r);
  }

  const std::uint64_t start = result.records.size();
  std::uint64_t end = members.size();
  if (opts.stop_after) end = std::min<std::uint64_t>(end, start + *opts.stop_after);

  std::vector<std::optional<SweepRecord>> slots(end > start ? end - start : 0);
  std::vector<std::exception_ptr> errors(slots.size());
  std::mutex mu;
  std::condition_variable ready;
  std::atomic<std::uint64_t> next{start};
  std::atomic<bool> stop{false};

  auto worker = [&] {
    for (;;) {
      const std::uint64_t i = next.fetch_add(1);
      if (i >= end || stop.load()) return;
      std::optional<SweepRecord> rec;
      std::exception_ptr err;
      try {
        rec = sweep_member(members[i], i, opts.lambda, opts.timing);
      } catch (...) {
        err = std::current_exception();
      }
      std::lock_guard lock(mu);
      slots[i - start] = std::move(rec);
      errors[i - start] = err;
      ready.notify_all();
    }
  };

  const unsigned jobs = std::max(1u, opts.jobs);
  std::vector<std::thread> pool;
  if (jobs > 1) {
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  auto join_all = [&] {
    stop = true;
    for (auto& t : pool) t.join();
  };

  for (std::uint64_t i = start; i < end; ++i) {
    const std::size_t slot = i - start;
    if (jobs == 1) {
      try {
        slots[slot] = sweep_member(members[i], i, opts.lambda, opts.timing);
      } catch (...) {
        errors[slot] = std::current_exception();
      }
    } else {
      std::unique_lock lock(mu);
      ready.wait(lock, [&] { return slots[slot].has_value() || errors[slot]; });
    }
    if (errors[slot]) {
      join_all();
      std::rethrow_exception(errors[slot]);
    }
    SweepRecord rec = std::move(*slots[slot]);
    if (out.is_open()) {
      out << sweep_csv_row(rec) << '\n';
      out.flush();
    }
    if (opts.on_record) opts.on_record(rec);
    result.records.push_back(std::move(rec));
  }
  join_all();

  result.complete = result.records.size() == members.size();
  result.summary = summarize(result.records, opts.histogram_bins);
  if (out.is_open() && result.complete) {
    out << summary_line(result.summary);
    out.flush();
  }
  return result;
}

SatoTateReport satotate_scan(const std::vector<std::int64_t>& D, std::uint64_t p_max) {
  const WeierstrassQ E = WeierstrassQ::from_cubic(D);
  if (E.discriminant() == 0) throw Error(Errc::NotSquarefree, "D is not squarefree over Q");
  SatoTateReport rep;
  rep.D = D;
  rep.p_max = p_max;
  for (const auto& tr : scan_primes(E, 3, p_max)) {
    SatoTateRecord r;
    r.p = tr.p;
    r.a_p = tr.a_p;
    const double sqrt_p = std::sqrt(static_cast<double>(tr.p));
    r.ratio = static_cast<double>(tr.a_p) / (2.0 * sqrt_p);
    LData L;
    L.q = tr.p;
    L.g = 1;
    L.c = {1, -tr.a_p, static_cast<std::int64_t>(tr.p)};
    r.lambda = compute_lambda(L);
    if (r.lambda.status == LambdaStatus::Numeric && (!rep.max_lambda || *r.lambda.value > *rep.max_lambda)) {
      rep.max_lambda = r.lambda.value;
      rep.argmax_p = tr.p;
    }
    if (std::fabs(r.ratio) > rep.max_abs_ratio) {
      rep.max_abs_ratio = std::fabs(r.ratio);
      rep.max_abs_ratio_p = tr.p;
    }
    r.running_max = rep.max_lambda;
    r.running_argmax = rep.argmax_p;
    rep.records.push_back(std::move(r));
  }
  return rep;
}

}  // namespace fflambda
