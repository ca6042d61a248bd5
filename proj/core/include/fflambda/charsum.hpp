#pragma once

// Exact Gauss sums for the curve y^2 = x^q - x, with the additive characters
// chi_a(b) = zeta_p^{Tr(ab)} of G = F_q acting by translation x -> x + a.

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "fflambda/lfunction.hpp"

namespace fflambda {

// Element of Z[zeta_p] in the basis 1, zeta, ..., zeta^{p-2}.
class CycInt {
 public:
  explicit CycInt(std::uint32_t p);
  CycInt(std::uint32_t p, std::int64_t integer);
  CycInt(std::uint32_t p, std::vector<std::int64_t> coeffs);
  // zeta^k, k taken mod p.
  static CycInt zeta_power(std::uint32_t p, std::int64_t k);

  std::uint32_t p() const noexcept { return p_; }
  const std::vector<std::int64_t>& coeffs() const noexcept { return c_; }
  bool is_rational() const noexcept;
  // Exact integer value; throws NotRational.
  std::int64_t to_integer() const;
  CycInt conj() const;
  std::complex<double> to_complex() const;
  bool divisible_by(std::int64_t d) const noexcept;
  // Throws NonDivisible if some coefficient is not a multiple of d.
  CycInt exact_div(std::int64_t d) const;
  std::string to_string() const;

  CycInt operator-() const;
  CycInt& operator+=(const CycInt& o);
  CycInt& operator-=(const CycInt& o);
  friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
  friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
  friend CycInt operator*(const CycInt& a, const CycInt& b);
  friend CycInt operator*(std::int64_t k, const CycInt& a);
  friend bool operator==(const CycInt& a, const CycInt& b) noexcept { return a.p_ == b.p_ && a.c_ == b.c_; }

 private:
  void check(const CycInt& o) const;
  std::uint32_t p_;
  std::vector<std::int64_t> c_;
};

// integer z * conj(z); throws NotRational otherwise.
std::int64_t norm_sq(const CycInt& z);

// Builds sum_k counts[k] zeta^k from a histogram over exponents mod p.
CycInt from_exponent_histogram(std::uint32_t p, const std::vector<std::int64_t>& counts);

struct CharSpec {
  FieldPtr field;  // F_q
  FieldElem a;
};

CycInt chi_eval(const CharSpec& spec, const FieldElem& b);

// sum over y in F_{q^n} of chi_a(Tr_{F_{q^n}/F_q}(y^2)).
CycInt gauss_S(const CharSpec& spec, unsigned n);

// Fixed points of Frob_q^n o [-a] on the affine curve, via the trace
// condition: q * #{y in F_{q^n} : Tr(y^2) = a}.
std::uint64_t fix_count(const FieldPtr& field, const FieldElem& a, unsigned n);

// Same count by looping over the affine points (x, y) with y in F_{q^n} and x
// in F_{q^{np}}, checking y^2 = x^q - x and x^{q^n} - x = a directly. Limited
// to q^{np} <= max_points.
std::uint64_t fix_count_by_points(const FieldPtr& field, const FieldElem& a, unsigned n,
                                  std::uint64_t max_points = 1'000'000);

// (1/q) sum_a chi(a) fix_count(a, n), divided exactly.
CycInt S_via_fix(const CharSpec& spec, unsigned n);

// sum_{x in F_p} zeta^{x^2}; its square is p* = (-1/p) p.
CycInt quadratic_gauss_sum(std::uint32_t p);

struct Eigenvalue {
  FieldElem a;
  CycInt S;       // gauss_S(chi_a, 1)
  CycInt alpha;   // -S, the Frobenius eigenvalue on the chi_a component
  int residue = 0;  // quad_char(a)
};

struct EigenvalueSet {
  std::uint32_t p = 0;
  unsigned r = 0;
  std::int64_t p_star = 0;
  CycInt sqrt_p_star{3};  // quadratic_gauss_sum(p)
  std::vector<Eigenvalue> eigenvalues;  // a != 0, in index order
  int plus_count = 0;   // alpha == +(sqrt p*)^r
  int minus_count = 0;  // alpha == -(sqrt p*)^r
};

// Eigenvalues {-gauss_S(chi_a, 1) : a != 0}, checked against
// S(chi_a, 1) = (-1)^{r+1} (sqrt p*)^r for square a, (-1)^r (sqrt p*)^r
// otherwise, with both signs occurring (q-1)/2 times. Throws ClosedFormMismatch.
EigenvalueSet eigenvalue_set(const FieldPtr& field);

// prod_{a != 0} (1 - alpha_a T), expanded in Z[zeta_p] and coerced to Z.
LData katz_L_polynomial(const EigenvalueSet& set, std::uint64_t q);

}  // namespace fflambda
