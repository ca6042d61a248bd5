#include <gtest/gtest.h>

#include <map>
#include <set>

#include "fflambda/error.hpp"
#include "fflambda/field.hpp"
#include "fflambda/poly.hpp"

using namespace fflambda;

namespace {

const std::uint64_t kOddPrimePowers[] = {3, 5, 7, 9, 11, 13, 17, 19, 23, 25, 27};

FieldPtr make_field(std::uint64_t q) {
  for (std::uint32_t p = 3; p <= q; p += 2) {
    if (!is_prime(p)) continue;
    std::uint64_t v = p;
    unsigned r = 1;
    while (v < q) v *= p, ++r;
    if (v == q) return Field::make(p, r);
  }
  ADD_FAILURE() << q << " is not an odd prime power";
  return nullptr;
}

std::vector<FieldElem> elements(const FieldPtr& F) {
  std::vector<FieldElem> out;
  for (std::uint64_t k = 0; k < F->order(); ++k) out.push_back(F->from_index(k));
  return out;
}

}  // namespace

TEST(Field, PrimeFieldMatchesIntegersModP) {
  for (std::uint32_t p : {3u, 5u, 7u, 13u}) {
    const FieldPtr F = Field::prime(p);
    for (std::int64_t a = 0; a < p; ++a) {
      for (std::int64_t b = 0; b < p; ++b) {
        EXPECT_EQ(F->index(F->from_int(a) + F->from_int(b)), static_cast<std::uint64_t>((a + b) % p));
        EXPECT_EQ(F->index(F->from_int(a) * F->from_int(b)), static_cast<std::uint64_t>((a * b) % p));
        EXPECT_EQ(F->index(F->from_int(a) - F->from_int(b)), static_cast<std::uint64_t>(((a - b) % p + p) % p));
      }
    }
    EXPECT_EQ(F->from_int(-1), F->from_int(p - 1));
  }
}

TEST(Field, RejectsBadCharacteristic) {
  EXPECT_THROW(Field::prime(9), Error);
  try {
    Field::prime(2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::EvenCharacteristic);
  }
  try {
    Field::prime(15);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotPrime);
  }
}

TEST(Field, AxiomsExhaustive) {
  for (std::uint64_t q : {9ull, 25ull, 27ull}) {
    const FieldPtr F = make_field(q);
    const auto xs = elements(F);
    ASSERT_EQ(xs.size(), q);
    for (const auto& a : xs) {
      if (!a.is_zero()) {
        EXPECT_EQ(a * F->inv(a), F->one());
      }
      EXPECT_EQ(a + (-a), F->zero());
      EXPECT_EQ(F->pow(a, q), a);
    }
    // distributivity on a strided sample
    for (std::size_t i = 0; i < xs.size(); i += 2) {
      for (std::size_t j = 1; j < xs.size(); j += 3) {
        for (std::size_t k = 0; k < xs.size(); k += 5) {
          EXPECT_EQ(xs[i] * (xs[j] + xs[k]), xs[i] * xs[j] + xs[i] * xs[k]);
        }
      }
    }
  }
}

TEST(Field, IndexRoundTrip) {
  const FieldPtr F = Field::make(3, 3);
  std::set<std::uint64_t> seen;
  for (const auto& e : elements(F)) seen.insert(F->index(e));
  EXPECT_EQ(seen.size(), 27u);
  EXPECT_THROW(F->from_index(27), Error);
}

TEST(Field, ModulusIsSmallestIrreducibleInIndexOrder) {
  // Degrees 2 and 3: irreducible iff rootless. Walk candidates in the
  // documented order (constant term most significant) and take the first.
  for (std::uint32_t p : {3u, 5u, 7u}) {
    const FieldPtr Fp = Field::prime(p);
    for (unsigned n : {2u, 3u}) {
      std::vector<std::int64_t> want;
      std::uint64_t count = 1;
      for (unsigned i = 0; i < n; ++i) count *= p;
      for (std::uint64_t k = 0; k < count && want.empty(); ++k) {
        std::vector<std::int64_t> c(n + 1, 0);
        std::uint64_t rest = k;
        for (int i = static_cast<int>(n) - 1; i >= 0; --i) {
          c[i] = static_cast<std::int64_t>(rest % p);
          rest /= p;
        }
        c[n] = 1;
        bool rootless = true;
        for (std::int64_t x = 0; x < p && rootless; ++x) {
          std::int64_t v = 0;
          for (int i = static_cast<int>(n); i >= 0; --i) v = (v * x + c[i]) % p;
          rootless = v != 0;
        }
        if (rootless) want = c;
      }
      const FieldPtr F = Field::make(p, n);
      ASSERT_EQ(F->modulus().size(), n + 1);
      for (unsigned i = 0; i <= n; ++i) EXPECT_EQ(Fp->index(F->modulus()[i]), static_cast<std::uint64_t>(want[i]));
    }
  }
}

TEST(Field, QuadCharMatchesSquareSet) {
  for (std::uint64_t q : kOddPrimePowers) {
    const FieldPtr F = make_field(q);
    const auto xs = elements(F);
    std::set<std::uint64_t> squares;
    for (const auto& x : xs) {
      if (!x.is_zero()) squares.insert(F->index(x * x));
    }
    EXPECT_EQ(squares.size(), (q - 1) / 2);
    for (const auto& x : xs) {
      const int want = x.is_zero() ? 0 : (squares.count(F->index(x)) ? 1 : -1);
      EXPECT_EQ(F->quad_char(x), want) << F->name() << " index " << F->index(x);
    }
  }
}

TEST(Field, QuadCharMultiplicative) {
  for (std::uint64_t q : kOddPrimePowers) {
    const FieldPtr F = make_field(q);
    const auto xs = elements(F);
    for (std::size_t i = 1; i < xs.size(); ++i) {
      EXPECT_EQ(F->quad_char(xs[i] * xs[i]), 1);
      for (std::size_t j = 1; j < xs.size(); ++j) {
        EXPECT_EQ(F->quad_char(xs[i] * xs[j]), F->quad_char(xs[i]) * F->quad_char(xs[j]));
      }
    }
  }
}

TEST(Field, TowerEmbeddingIsAHomomorphism) {
  const FieldPtr F9 = Field::make(3, 2);
  const FieldPtr F81 = F9->extension(2);
  EXPECT_EQ(F81->order(), 81u);
  EXPECT_TRUE(F81->has_subfield(*F9));
  EXPECT_TRUE(F81->has_subfield(F9->prime_field()));
  const auto xs = elements(F9);
  for (const auto& a : xs) {
    const FieldElem ea = F81->embed(a);
    EXPECT_TRUE(F81->lies_in(ea, *F9));
    EXPECT_EQ(F81->restrict_to(ea, *F9), a);
    // Elements of F_9 are fixed by x -> x^9.
    EXPECT_EQ(F81->pow(ea, 9), ea);
    for (const auto& b : xs) {
      EXPECT_EQ(F81->embed(a * b), ea * F81->embed(b));
      EXPECT_EQ(F81->embed(a + b), ea + F81->embed(b));
    }
  }
  // Exactly 9 elements of F_81 lie in F_9.
  int inside = 0;
  for (const auto& x : elements(F81)) inside += F81->lies_in(x, *F9);
  EXPECT_EQ(inside, 9);
}

TEST(Field, ExtensionsAreShared) {
  const FieldPtr F = Field::prime(5);
  EXPECT_EQ(F->extension(2).get(), F->extension(2).get());
  EXPECT_EQ(F->extension(1).get(), F.get());
}

TEST(Field, MixingFieldsThrows) {
  const FieldPtr A = Field::prime(3);
  const FieldPtr B = Field::prime(5);
  try {
    (void)(A->one() + B->one());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ContextMismatch);
  }
}

TEST(Field, TraceToSubfield) {
  const FieldPtr F3 = Field::prime(3);
  const FieldPtr F27 = Field::make(3, 3);
  for (const auto& x : elements(F27)) {
    const FieldElem t = trace_to_subfield(x, *F3);
    const FieldElem direct = x + F27->pow(x, 3) + F27->pow(x, 9);
    EXPECT_EQ(F27->embed(t), direct);
  }
  // Trace is onto with equal fibres.
  std::map<std::uint64_t, int> fibre;
  for (const auto& x : elements(F27)) ++fibre[F3->index(trace_to_subfield(x, *F3))];
  for (const auto& [v, n] : fibre) EXPECT_EQ(n, 9) << v;
}
