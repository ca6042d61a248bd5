#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "fflambda/error.hpp"
#include "fflambda/lfunction.hpp"
#include "fflambda/limits.hpp"
#include "fflambda/sweep.hpp"

using namespace fflambda;

namespace {

std::int64_t legendre(std::int64_t a, std::int64_t p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) return 0;
  std::int64_t r = 1, b = a, e = (p - 1) / 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r == 1 ? 1 : -1;
}

std::vector<std::int64_t> L_of(std::uint64_t q, const char* D) {
  return compute_L(check_good(parse_poly(field_of_order(q), D))).c;
}

}  // namespace

TEST(LFunction, Examples) {
  EXPECT_EQ(L_of(3, "T^3+T"), (std::vector<std::int64_t>{1, 0, 3}));
  EXPECT_EQ(L_of(5, "T^3+T+1"), (std::vector<std::int64_t>{1, 3, 5}));
  EXPECT_EQ(L_of(5, "T^5-T"), (std::vector<std::int64_t>{1, 0, -10, 0, 25}));
}

TEST(LFunction, GoodPairViolations) {
  const FieldPtr F5 = Field::prime(5);
  const auto v = [&](const char* s) { return good_pair_violations(parse_poly(F5, s)); };
  EXPECT_TRUE(v("T^3+T+1").empty());
  EXPECT_EQ(v("2*T^3+1"), std::vector<Errc>{Errc::NotMonic});
  EXPECT_EQ(v("T^3"), std::vector<Errc>{Errc::NotSquarefree});
  EXPECT_EQ(v("T^4+2"), std::vector<Errc>{Errc::EvenDegree});
  EXPECT_EQ(v("T+1"), std::vector<Errc>{Errc::DegreeTooSmall});
  EXPECT_EQ(v("T^2"), (std::vector<Errc>{Errc::NotSquarefree, Errc::EvenDegree, Errc::DegreeTooSmall}));
  try {
    check_good(parse_poly(F5, "T^4+2"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::EvenDegree);
  }
}

TEST(LFunction, LinearCoefficientIsLegendreSum) {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    const FieldPtr F = Field::prime(p);
    for (const auto& D : monic_enum(F, 3)) {
      if (!is_squarefree(D)) continue;
      std::int64_t want = 0;
      for (std::int64_t x = 0; x < p; ++x) {
        std::int64_t v = 0;
        for (int i = 3; i >= 0; --i) v = v * x + static_cast<std::int64_t>(F->index(D.coeff(i)));
        want += legendre(v, p);
      }
      const GoodPair pair = check_good(D);
      EXPECT_EQ(compute_c(pair, 1), want) << D.to_string();
      EXPECT_EQ(compute_L(pair).c[1], want);
    }
  }
}

TEST(LFunction, SieveMatchesFactorisation) {
  for (std::uint64_t q : {3ull, 5ull, 9ull}) {
    const FieldPtr F = field_of_order(q);
    const char* D = q == 9 ? "T^5+[4]*T+1" : q == 5 ? "T^5+T^2+1" : "T^5+2*T^2+T+1";
    const GoodPair pair = check_good(parse_poly(F, D));
    for (unsigned n = 0; n <= (q == 3 ? 5u : 3u); ++n) {
      const auto table = kronecker_table(pair, n);
      const auto polys = monic_enum(F, n);
      ASSERT_EQ(table.size(), polys.size());
      for (std::uint64_t k = 0; k < polys.size(); ++k) {
        EXPECT_EQ(table[k], kronecker(pair.D(), polys.at(k))) << polys.at(k).to_string();
      }
    }
  }
}

TEST(LFunction, VanishesAboveTwoG) {
  for (const char* D : {"T^3+T+1", "T^3-T", "T^5+2*T+1"}) {
    const GoodPair pair = check_good(parse_poly(Field::prime(3), D));
    const unsigned d = static_cast<unsigned>(pair.D().degree());
    EXPECT_EQ(compute_c(pair, d), 0) << D;
    EXPECT_EQ(compute_c(pair, d + 1), 0) << D;
  }
}

TEST(LFunction, FunctionalEquationAndWeilBound) {
  std::vector<GoodPair> members;
  for (std::uint64_t q : {3ull, 5ull}) {
    FamilySpec spec;
    spec.kind = FamilyKind::FixedDegree;
    spec.deg = 3;
    spec.q_list = {q};
    for (auto& m : enum_family(spec)) members.push_back(m);
  }
  FamilySpec spec3;
  spec3.kind = FamilyKind::FixedDegree;
  spec3.deg = 5;
  spec3.q_list = {3};
  for (auto& m : enum_family(spec3)) members.push_back(m);
  spec3.q_list = {9};
  spec3.deg = 3;
  for (auto& m : enum_family(spec3)) members.push_back(m);
  ASSERT_EQ(members.size(), 18u + 100u + 162u + 648u);

  for (const auto& pair : members) {
    const LData L = compute_L(pair);
    EXPECT_TRUE(satisfies_functional_equation(L)) << pair.D().to_string();
    const auto roots = inverse_roots(L);
    EXPECT_EQ(roots.roots.size(), static_cast<std::size_t>(2 * L.g));
    EXPECT_TRUE(roots.weil_ok) << pair.D().to_string() << " deviation " << roots.max_deviation;
  }
}

TEST(LFunction, FunctionalEquationSampledQ5Quintics) {
  FamilySpec spec;
  spec.kind = FamilyKind::FixedDegree;
  spec.deg = 5;
  spec.q_list = {5};
  spec.sample = SampleMode{99, 40};
  for (const auto& pair : enum_family(spec)) {
    const LData L = compute_L(pair);
    EXPECT_TRUE(satisfies_functional_equation(L));
    EXPECT_TRUE(inverse_roots(L).weil_ok);
  }
}

TEST(LFunction, Validate) {
  EXPECT_NO_THROW(validate({5, 1, {1, 3, 5}, std::nullopt}));
  for (const LData& bad : {LData{5, 1, {1, 3, 4}, std::nullopt}, LData{5, 1, {2, 3, 5}, std::nullopt},
                           LData{5, 2, {1, 3, 5}, std::nullopt}}) {
    try {
      validate(bad);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::FunctionalEquationViolation);
    }
    EXPECT_FALSE(satisfies_functional_equation(bad));
  }
}

TEST(LFunction, Phi) {
  const LData a{3, 1, {1, 0, 3}, std::nullopt};
  EXPECT_EQ(phi(a, 0), 0.0);
  EXPECT_NEAR(phi(a, 1), std::sqrt(3.0), 1e-15);
  const LData b{5, 1, {1, 3, 5}, std::nullopt};
  EXPECT_EQ(phi(b, 0), 3.0);
  const LData c{5, 2, {1, 0, -10, 0, 25}, std::nullopt};
  EXPECT_NEAR(phi(c, 2), 5.0, 1e-14);
  EXPECT_NEAR(phi(c, 0), -10.0, 1e-14);
  try {
    phi(c, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::IndexOutOfRange);
  }
}

TEST(LFunction, InverseRootExamples) {
  const auto r1 = inverse_roots({3, 1, {1, 0, 3}, std::nullopt});
  ASSERT_EQ(r1.roots.size(), 2u);
  for (const auto& z : r1.roots) {
    EXPECT_NEAR(z.real(), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(z.imag()), std::sqrt(3.0), 1e-12);
    // 1 + 3 z^{-2} = 0
    EXPECT_NEAR(std::abs(1.0 + 3.0 / (z * z)), 0.0, 1e-12);
  }
  EXPECT_NEAR(r1.roots[0].imag() + r1.roots[1].imag(), 0.0, 1e-12);

  const auto r2 = inverse_roots({5, 2, {1, 0, -10, 0, 25}, std::nullopt});
  ASSERT_EQ(r2.roots.size(), 4u);
  int plus = 0, minus = 0;
  for (const auto& z : r2.roots) {
    EXPECT_NEAR(z.imag(), 0.0, 1e-12);
    if (std::abs(z.real() - std::sqrt(5.0)) < 1e-12) ++plus;
    if (std::abs(z.real() + std::sqrt(5.0)) < 1e-12) ++minus;
  }
  EXPECT_EQ(plus, 2);
  EXPECT_EQ(minus, 2);
  EXPECT_TRUE(r2.weil_ok);

  const auto r3 = inverse_roots({5, 1, {1, 3, 5}, std::nullopt});
  ASSERT_EQ(r3.roots.size(), 2u);
  EXPECT_NEAR(std::abs(r3.roots[0] - std::conj(r3.roots[1])), 0.0, 1e-12);
  // the inverse roots sum to -c_1
  EXPECT_NEAR((r3.roots[0] + r3.roots[1]).real(), -3.0, 1e-12);
  EXPECT_TRUE(r3.weil_ok);
}

TEST(LFunction, WeilFlagRespondsToTolerance) {
  // 1 + T + T^2 has inverse roots of modulus 1, far from sqrt(5).
  const auto r = inverse_roots({5, 1, {1, 1, 1}, std::nullopt});
  EXPECT_FALSE(r.weil_ok);
  EXPECT_NEAR(r.max_deviation, std::sqrt(5.0) - 1.0, 1e-12);
}

TEST(LFunction, SizeGuard) {
  const std::uint64_t saved = enumeration_limit();
  set_enumeration_limit(100);
  const GoodPair pair = check_good(parse_poly(Field::prime(5), "T^5-T"));
  try {
    compute_L(pair);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::SizeExceeded);
  }
  set_enumeration_limit(saved);
}
