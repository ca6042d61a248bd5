#include "fflambda/arithgeo.hpp"

#include <thread>

#include "fflambda/field.hpp"

namespace fflambda {
namespace {

std::int64_t mod(std::int64_t a, std::uint64_t p) {
  const auto m = static_cast<std::int64_t>(p);
  const auto r = a % m;
  return r < 0 ? r + m : r;
}

void check_odd_prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 32)) throw Error(Errc::SizeExceeded, "p must be below 2^32");
  if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  if (p == 2) throw Error(Errc::EvenPrime, "p = 2 is excluded");
}

// p < 2^32, so products of residues fit in 64 bits.
std::int64_t legendre(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) return 0;
  std::uint64_t result = 1;
  std::uint64_t base = a;
  for (std::uint64_t e = (p - 1) / 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return result == 1 ? 1 : -1;
}

}  // namespace

BigInt WeierstrassQ::discriminant() const {
  const BigInt A1 = a1, A2 = a2, A3 = a3, A4 = a4, A6 = a6;
  const BigInt b2 = A1 * A1 + 4 * A2;
  const BigInt b4 = 2 * A4 + A1 * A3;
  const BigInt b6 = A3 * A3 + 4 * A6;
  const BigInt b8 = A1 * A1 * A6 + 4 * A2 * A6 - A1 * A3 * A4 + A2 * A3 * A3 - A4 * A4;
  return -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6;
}

std::string WeierstrassQ::to_string() const {
  return "[" + std::to_string(a1) + "," + std::to_string(a2) + "," + std::to_string(a3) + "," + std::to_string(a4) +
         "," + std::to_string(a6) + "]";
}

WeierstrassQ WeierstrassQ::from_cubic(const std::vector<std::int64_t>& D) {
  if (D.size() != 4 || D[3] != 1) throw Error(Errc::InvalidArgument, "expected a monic cubic {d, c, b, 1}");
  return {0, D[2], 0, D[1], D[0]};
}

bool good_reduction(const WeierstrassQ& E, std::uint64_t p) {
  return E.discriminant() % p != 0;
}

TraceRecord ap(const WeierstrassQ& E, std::uint64_t p) {
  check_odd_prime(p);
  if (!good_reduction(E, p)) throw Error(Errc::BadReduction, "p = " + std::to_string(p) + " divides the discriminant");
  std::vector<std::int8_t> chi(p, -1);
  chi[0] = 0;
  for (std::uint64_t x = 1; x < p; ++x) chi[x * x % p] = 1;

  // (2y + a1 x + a3)^2 = 4(x^3 + a2 x^2 + a4 x + a6) + (a1 x + a3)^2
  const std::int64_t A1 = mod(E.a1, p), A2 = mod(E.a2, p), A3 = mod(E.a3, p), A4 = mod(E.a4, p), A6 = mod(E.a6, p);
  const auto P = static_cast<std::int64_t>(p);
  std::int64_t sum = 0;
  for (std::int64_t x = 0; x < P; ++x) {
    const std::int64_t f = (((x + A2) % P * x + A4) % P * x + A6) % P;
    const std::int64_t h = (A1 * x + A3) % P;
    sum += chi[static_cast<std::size_t>((4 * f + h * h) % P)];
  }
  TraceRecord rec;
  rec.p = p;
  rec.a_p = -sum;
  rec.N_p = static_cast<std::uint64_t>(P + 1 + sum);
  rec.supersingular = rec.a_p == 0 && p > 5;
  return rec;
}

std::uint64_t count_points_ext(const WeierstrassQ& E, std::uint32_t p, unsigned r) {
  check_odd_prime(p);
  const FieldPtr F = Field::make(p, r);
  const FieldElem a1 = F->from_int(E.a1), a2 = F->from_int(E.a2), a3 = F->from_int(E.a3);
  const FieldElem a4 = F->from_int(E.a4), a6 = F->from_int(E.a6), four = F->from_int(4);
  std::int64_t sum = 0;
  for (std::uint64_t k = 0; k < F->order(); ++k) {
    const FieldElem x = F->from_index(k);
    const FieldElem f = ((x + a2) * x + a4) * x + a6;
    const FieldElem h = a1 * x + a3;
    sum += F->quad_char(four * f + h * h);
  }
  return static_cast<std::uint64_t>(static_cast<std::int64_t>(F->order()) + 1 + sum);
}

BigInt lift_trace(std::int64_t a_p, std::uint64_t p, unsigned k) {
  if (BigInt(a_p) * a_p > BigInt(4) * p) {
    throw Error(Errc::HasseViolation, "|a_p| = " + std::to_string(a_p) + " exceeds 2 sqrt(" + std::to_string(p) + ")");
  }
  BigInt prev = 2;
  BigInt cur = a_p;
  if (k == 0) return prev;
  for (unsigned i = 1; i < k; ++i) {
    BigInt next = a_p * cur - BigInt(p) * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

MaximalCertificate certify_maximal(const WeierstrassQ& E, std::uint64_t p, std::uint64_t direct_limit) {
  const TraceRecord rec = ap(E, p);
  if (rec.a_p != 0) {
    throw Error(Errc::NotSupersingular, "a_" + std::to_string(p) + " = " + std::to_string(rec.a_p));
  }
  MaximalCertificate cert;
  cert.p = p;
  cert.a_p = rec.a_p;
  cert.a_p2 = lift_trace(rec.a_p, p, 2);
  const std::uint64_t q = p * p;
  const auto N_lift = static_cast<std::uint64_t>(BigInt(q) + 1 - cert.a_p2);
  if (q <= direct_limit) {
    cert.N_p2 = count_points_ext(E, static_cast<std::uint32_t>(p), 2);
    cert.counted_directly = true;
    if (cert.N_p2 != N_lift) {
      throw Error(Errc::ClosedFormMismatch, "direct count " + std::to_string(cert.N_p2) + " over F_" +
                                                std::to_string(q) + " but lift_trace gives " + std::to_string(N_lift));
    }
  } else {
    cert.N_p2 = N_lift;
  }
  cert.extremality = classify_extremal(cert.N_p2, q);
  cert.sign = cert.a_p2 > 0 ? 1 : (cert.a_p2 < 0 ? -1 : 0);
  cert.lambda_zero = boost::multiprecision::abs(cert.a_p2) == BigInt(2 * p);
  return cert;
}

bool inert(std::int64_t d, std::uint64_t p) {
  check_odd_prime(p);
  const auto r = mod(d, p);
  if (r == 0) throw Error(Errc::Ramified, std::to_string(p) + " divides " + std::to_string(d));
  return legendre(static_cast<std::uint64_t>(r), p) == -1;
}

std::vector<TraceRecord> scan_primes(const WeierstrassQ& E, std::uint64_t lo, std::uint64_t hi, unsigned jobs) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = std::max<std::uint64_t>(lo, 3); p <= hi; ++p) {
    if (is_prime(p) && good_reduction(E, p)) primes.push_back(p);
  }
  std::vector<TraceRecord> out(primes.size());
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(primes.size())));
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) out[i] = ap(E, primes[i]);
  };
  if (jobs <= 1) {
    work(0, primes.size());
    return out;
  }
  std::vector<std::thread> pool;
  const std::size_t chunk = (primes.size() + jobs - 1) / jobs;
  for (std::size_t begin = 0; begin < primes.size(); begin += chunk) {
    pool.emplace_back(work, begin, std::min(primes.size(), begin + chunk));
  }
  for (auto& t : pool) t.join();
  return out;
}

bool X011Report::ok() const noexcept {
  return all_divisible_by_5 && !supersingular.empty() && supersingular_4_mod_5 && supersingular_split &&
         small_primes_nonzero;
}

X011Report x0_11_scan(std::uint64_t bound, unsigned jobs) {
  if (bound < 7) throw Error(Errc::InvalidArgument, "bound must be at least 7");
  const WeierstrassQ E = WeierstrassQ::x0_11();
  X011Report rep;
  rep.bound = bound;
  for (std::uint64_t p = 3; p <= bound; ++p) {
    if (is_prime(p) && !good_reduction(E, p)) rep.bad_primes.push_back(p);
  }
  rep.records = scan_primes(E, 3, bound, jobs);
  rep.all_divisible_by_5 = true;
  rep.supersingular_4_mod_5 = true;
  rep.supersingular_split = true;
  for (const auto& r : rep.records) {
    if (r.N_p % 5 != 0) rep.all_divisible_by_5 = false;
    if (r.p == 3) rep.a3 = r.a_p;
    if (r.p == 5) rep.a5 = r.a_p;
    if (!r.supersingular) continue;
    rep.supersingular.push_back(r.p);
    if (r.p % 5 != 4) rep.supersingular_4_mod_5 = false;
    if (inert(5, r.p)) rep.supersingular_split = false;
  }
  rep.small_primes_nonzero = rep.a3 != 0 && rep.a5 != 0;
  return rep;
}

}  // namespace fflambda
