#include <gtest/gtest.h>

#include <cmath>
#include <functional>

#include "fflambda/arithgeo.hpp"
#include "fflambda/error.hpp"

using namespace fflambda;

namespace {

const WeierstrassQ kCM{0, 0, 0, 1, 0};       // y^2 = x^3 + x
const WeierstrassQ kCubic{0, 0, 0, 1, 1};    // y^2 = x^3 + x + 1

std::int64_t md(std::int64_t a, std::int64_t p) { return ((a % p) + p) % p; }

// Projective points by looping over every (x, y) in F_p^2.
std::uint64_t naive_count(const WeierstrassQ& E, std::int64_t p) {
  std::uint64_t n = 1;
  for (std::int64_t x = 0; x < p; ++x) {
    const std::int64_t rhs = md(md(md(x * x, p) * x, p) + E.a2 * md(x * x, p) + E.a4 * x + E.a6, p);
    for (std::int64_t y = 0; y < p; ++y) {
      const std::int64_t lhs = md(y * y + E.a1 * x * y + E.a3 * y, p);
      n += lhs == rhs;
    }
  }
  return n;
}

// The same count over F_{p^2}, built with the field library.
std::uint64_t naive_count_p2(const WeierstrassQ& E, std::uint32_t p) {
  const FieldPtr F = Field::make(p, 2);
  const auto c = [&](std::int64_t v) { return F->from_int(v); };
  std::uint64_t n = 1;
  for (std::uint64_t i = 0; i < F->order(); ++i) {
    const FieldElem x = F->from_index(i);
    const FieldElem rhs = x * x * x + c(E.a2) * x * x + c(E.a4) * x + c(E.a6);
    for (std::uint64_t j = 0; j < F->order(); ++j) {
      const FieldElem y = F->from_index(j);
      n += y * y + c(E.a1) * x * y + c(E.a3) * y == rhs;
    }
  }
  return n;
}

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no exception";
  return Errc::InvalidArgument;
}

}  // namespace

TEST(ArithGeo, Discriminants) {
  EXPECT_EQ(WeierstrassQ::x0_11().discriminant(), BigInt(-161051));  // -11^5
  EXPECT_EQ(kCM.discriminant(), BigInt(-64));
  EXPECT_EQ(kCubic.discriminant(), BigInt(-496));
  EXPECT_FALSE(good_reduction(WeierstrassQ::x0_11(), 11));
  EXPECT_TRUE(good_reduction(WeierstrassQ::x0_11(), 13));
  EXPECT_EQ(WeierstrassQ::from_cubic({1, 1, 0, 1}).to_string(), kCubic.to_string());
}

TEST(ArithGeo, TraceExamples) {
  const auto r7 = ap(kCM, 7);
  EXPECT_EQ(r7.a_p, 0);
  EXPECT_EQ(r7.N_p, 8u);
  EXPECT_TRUE(r7.supersingular);
  const auto r5 = ap(kCubic, 5);
  EXPECT_EQ(r5.a_p, -3);
  EXPECT_EQ(r5.N_p, 9u);
  EXPECT_EQ(ap(WeierstrassQ::x0_11(), 19).a_p, 0);
  // a_p = 0 at p <= 5 is not flagged.
  EXPECT_FALSE(ap(kCM, 3).supersingular);
  EXPECT_EQ(ap(kCM, 3).a_p, 0);
}

TEST(ArithGeo, TraceErrors) {
  EXPECT_EQ(code_of([] { ap(WeierstrassQ::x0_11(), 11); }), Errc::BadReduction);
  EXPECT_EQ(code_of([] { ap(kCM, 2); }), Errc::EvenPrime);
  EXPECT_EQ(code_of([] { ap(kCM, 9); }), Errc::NotPrime);
}

TEST(ArithGeo, CountsMatchNaiveLoop) {
  for (const auto& E : {kCM, kCubic, WeierstrassQ::x0_11(), WeierstrassQ{1, -1, 1, 2, -3}}) {
    for (std::uint64_t p = 3; p < 110; p += 2) {
      if (!is_prime(p) || !good_reduction(E, p)) continue;
      const auto r = ap(E, p);
      EXPECT_EQ(r.N_p, naive_count(E, static_cast<std::int64_t>(p))) << E.to_string() << " p=" << p;
      EXPECT_EQ(r.a_p, static_cast<std::int64_t>(p + 1) - static_cast<std::int64_t>(r.N_p));
      EXPECT_LE(static_cast<double>(r.a_p * r.a_p), 4.0 * static_cast<double>(p));
      EXPECT_EQ(count_points_ext(E, static_cast<std::uint32_t>(p), 1), r.N_p);
    }
  }
}

TEST(ArithGeo, HasseBoundOnScan) {
  for (const auto& r : scan_primes(WeierstrassQ::x0_11(), 3, 5000)) {
    EXPECT_LE(static_cast<double>(r.a_p * r.a_p), 4.0 * static_cast<double>(r.p)) << r.p;
  }
}

TEST(ArithGeo, ScanIsIndependentOfJobs) {
  const auto a = scan_primes(kCubic, 3, 3000, 1);
  const auto b = scan_primes(kCubic, 3, 3000, 3);
  EXPECT_EQ(a, b);
  ASSERT_FALSE(a.empty());
  EXPECT_EQ(a.front().p, 3u);
  for (std::size_t i = 1; i < a.size(); ++i) EXPECT_LT(a[i - 1].p, a[i].p);
}

TEST(ArithGeo, LiftTrace) {
  EXPECT_EQ(lift_trace(0, 7, 2), BigInt(-14));
  EXPECT_EQ(lift_trace(0, 101, 2), BigInt(-202));
  EXPECT_EQ(lift_trace(-3, 5, 1), BigInt(-3));
  // s_3 = a^3 - 3ap
  EXPECT_EQ(lift_trace(-3, 5, 3), BigInt(-27 + 45));
  EXPECT_EQ(code_of([] { lift_trace(5, 5, 2); }), Errc::HasseViolation);
}

TEST(ArithGeo, LiftTraceMatchesDirectCount) {
  for (const auto& E : {kCM, kCubic, WeierstrassQ::x0_11()}) {
    for (std::uint32_t p = 3; p <= 31; p += 2) {
      if (!is_prime(p) || !good_reduction(E, p)) continue;
      const auto a = ap(E, p).a_p;
      const std::uint64_t N2 = count_points_ext(E, p, 2);
      EXPECT_EQ(BigInt(N2), BigInt(p) * p + 1 - lift_trace(a, p, 2)) << E.to_string() << " p=" << p;
      if (p <= 13) { EXPECT_EQ(N2, naive_count_p2(E, p)); }
    }
  }
}

TEST(ArithGeo, CertifyMaximal) {
  const auto c7 = certify_maximal(kCM, 7);
  EXPECT_EQ(c7.N_p2, 64u);
  EXPECT_TRUE(c7.counted_directly);
  EXPECT_EQ(c7.extremality, Extremality::Maximal);
  EXPECT_TRUE(c7.lambda_zero);
  EXPECT_EQ(c7.sign, -1);
  EXPECT_EQ(c7.a_p2, BigInt(-14));

  const auto c11 = certify_maximal(kCM, 11);
  EXPECT_EQ(c11.N_p2, 144u);
  EXPECT_EQ(c11.extremality, Extremality::Maximal);

  // Beyond the direct limit the count comes from lift_trace.
  const auto big = certify_maximal(kCM, 1019, 1000);
  EXPECT_FALSE(big.counted_directly);
  EXPECT_EQ(big.N_p2, 1020u * 1020u);
  EXPECT_EQ(big.extremality, Extremality::Maximal);

  EXPECT_EQ(code_of([] { certify_maximal(kCubic, 5); }), Errc::NotSupersingular);
}

TEST(ArithGeo, CMCurveSupersingularAtThreeModFour) {
  for (const auto& r : scan_primes(kCM, 3, 200)) {
    if (r.p % 4 == 3) { EXPECT_EQ(r.a_p, 0) << r.p; }
    if (r.p % 4 == 1) { EXPECT_NE(r.a_p, 0) << r.p; }
  }
}

TEST(ArithGeo, Inert) {
  EXPECT_FALSE(inert(5, 19));
  EXPECT_TRUE(inert(2, 5));
  EXPECT_TRUE(inert(-1, 7));
  EXPECT_FALSE(inert(-1, 13));
  EXPECT_EQ(code_of([] { inert(15, 5); }), Errc::Ramified);
  // Euler's criterion against the square set.
  for (std::uint64_t p : {7ull, 11ull, 13ull, 29ull}) {
    for (std::int64_t d = 1; d < static_cast<std::int64_t>(p); ++d) {
      bool square = false;
      for (std::int64_t y = 1; y < static_cast<std::int64_t>(p); ++y) square = square || (y * y) % static_cast<std::int64_t>(p) == d;
      EXPECT_EQ(inert(d, p), !square);
    }
  }
}

TEST(ArithGeo, X011Scan) {
  const auto rep = x0_11_scan(100);
  EXPECT_TRUE(rep.ok());
  EXPECT_TRUE(rep.all_divisible_by_5);
  EXPECT_EQ(rep.supersingular, (std::vector<std::uint64_t>{19, 29}));
  for (auto p : rep.supersingular) {
    EXPECT_EQ(p % 5, 4u);
    EXPECT_FALSE(inert(5, p));
  }
  EXPECT_NE(rep.a3, 0);
  EXPECT_NE(rep.a5, 0);
  EXPECT_EQ(rep.bad_primes, (std::vector<std::uint64_t>{11}));
  for (const auto& r : rep.records) EXPECT_EQ(r.N_p % 5, 0u) << r.p;
  EXPECT_EQ(code_of([] { x0_11_scan(5); }), Errc::InvalidArgument);
}
