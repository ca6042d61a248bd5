#pragma once

// Elliptic curves over Q reduced at odd primes.

#include <cstdint>
#include <string>
#include <vector>

#include "fflambda/curve.hpp"
#include "fflambda/exact_poly.hpp"

namespace fflambda {

// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6
struct WeierstrassQ {
  std::int64_t a1 = 0, a2 = 0, a3 = 0, a4 = 0, a6 = 0;

  BigInt discriminant() const;
  std::string to_string() const;

  // y^2 = x^3 + b x^2 + c x + d from the monic cubic {d, c, b, 1}.
  static WeierstrassQ from_cubic(const std::vector<std::int64_t>& D);
  static WeierstrassQ x0_11() { return {0, -1, 1, -10, -20}; }
};

struct TraceRecord {
  std::uint64_t p = 0;
  std::int64_t a_p = 0;
  std::uint64_t N_p = 0;
  bool supersingular = false;  // a_p = 0 and p > 5

  friend bool operator==(const TraceRecord&, const TraceRecord&) = default;
};

bool good_reduction(const WeierstrassQ& E, std::uint64_t p);

// Projective points of E mod p by the x-loop. Throws NotPrime, EvenPrime,
// BadReduction.
TraceRecord ap(const WeierstrassQ& E, std::uint64_t p);

// Projective points of E over F_{p^r}, by direct enumeration.
std::uint64_t count_points_ext(const WeierstrassQ& E, std::uint32_t p, unsigned r);

// a_{p^k} = alpha^k + beta^k via s_k = a s_{k-1} - p s_{k-2}. Throws HasseViolation.
BigInt lift_trace(std::int64_t a_p, std::uint64_t p, unsigned k);

struct MaximalCertificate {
  std::uint64_t p = 0;
  std::int64_t a_p = 0;
  BigInt a_p2;                 // lift_trace(a_p, p, 2)
  std::uint64_t N_p2 = 0;      // points over F_{p^2}
  bool counted_directly = false;
  Extremality extremality = Extremality::Neither;
  bool lambda_zero = false;    // |a_{p^2}| == 2p exactly
  int sign = 0;                // sign of a_{p^2}
};

// Throws NotSupersingular when a_p != 0. Direct count over F_{p^2} when
// p^2 <= direct_limit.
MaximalCertificate certify_maximal(const WeierstrassQ& E, std::uint64_t p, std::uint64_t direct_limit = 1'000'000);

// (d/p) = -1 by Euler's criterion. Throws Ramified when p | d.
bool inert(std::int64_t d, std::uint64_t p);

// Trace records for the odd good primes in [lo, hi], in prime order. Chunks
// of primes run on `jobs` threads.
std::vector<TraceRecord> scan_primes(const WeierstrassQ& E, std::uint64_t lo, std::uint64_t hi, unsigned jobs = 1);

struct X011Report {
  std::uint64_t bound = 0;
  std::vector<TraceRecord> records;
  std::vector<std::uint64_t> bad_primes;
  std::vector<std::uint64_t> supersingular;
  bool all_divisible_by_5 = false;
  bool supersingular_4_mod_5 = false;
  bool supersingular_split = false;  // inert(5, p) false for each
  std::int64_t a3 = 0;
  std::int64_t a5 = 0;
  bool small_primes_nonzero = false;
  bool ok() const noexcept;
};

X011Report x0_11_scan(std::uint64_t bound, unsigned jobs = 1);

}  // namespace fflambda
