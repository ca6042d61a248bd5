#pragma once

// Dense univariate polynomials over a Field, in the variable T.

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fflambda/field.hpp"

namespace fflambda {

class Poly {
 public:
  explicit Poly(FieldPtr field);
  // Coefficients constant term first; trailing zeros are stripped.
  Poly(FieldPtr field, std::vector<FieldElem> coeffs);

  static Poly from_ints(FieldPtr field, std::initializer_list<std::int64_t> coeffs);
  static Poly from_ints(FieldPtr field, const std::vector<std::int64_t>& coeffs);
  static Poly constant(FieldPtr field, const FieldElem& c);
  static Poly monomial(FieldPtr field, const FieldElem& c, unsigned k);
  static Poly variable(FieldPtr field);

  const FieldPtr& field() const noexcept { return field_; }
  // -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  bool is_monic() const noexcept;
  const std::vector<FieldElem>& coeffs() const noexcept { return coeffs_; }
  FieldElem coeff(std::size_t i) const;
  FieldElem lead() const;

  Poly monic() const;
  Poly derivative() const;
  // Evaluates at x, which may lie in any extension of field() in the tower.
  FieldElem operator()(const FieldElem& x) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const FieldElem& c, const Poly& a);
  friend Poly operator/(const Poly& a, const Poly& b);
  friend Poly operator%(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) noexcept;

  // Canonical text form, highest degree first. Prime-subfield coefficients
  // print as symmetric residues; other coefficients print as [index].
  std::string to_string() const;

 private:
  void check_same(const Poly& other) const;
  void strip() noexcept;

  FieldPtr field_;
  std::vector<FieldElem> coeffs_;
};

// (quotient, remainder); throws ZeroPolynomial for b == 0.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
// Monic gcd (zero only if both inputs are zero).
Poly gcd(Poly a, Poly b);
Poly pow_mod(Poly base, std::uint64_t exp, const Poly& modulus);

bool is_squarefree(const Poly& f);
bool is_irreducible(const Poly& f);

struct Factor {
  Poly poly;
  int multiplicity;
};
// Monic irreducible factors by trial division, in enumeration order.
std::vector<Factor> factor(const Poly& f);

// Smallest monic irreducible of degree n over field under the documented
// order (see MonicPolys).
Poly find_smallest_irreducible(const FieldPtr& field, unsigned n);

// Monic polynomials of degree n, q^n of them. Index k maps to the coefficient
// vector (c_0, ..., c_{n-1}) whose base-q digits, c_0 most significant, spell k
// (element digits are Field::index). This is lexicographic order with the
// constant term compared first.
class MonicPolys {
 public:
  MonicPolys(FieldPtr field, unsigned n);

  std::uint64_t size() const noexcept { return count_; }
  unsigned degree() const noexcept { return n_; }
  Poly at(std::uint64_t k) const;

  class iterator {
   public:
    using value_type = Poly;
    using difference_type = std::ptrdiff_t;
    iterator(const MonicPolys* owner, std::uint64_t k) : owner_(owner), k_(k) {}
    Poly operator*() const { return owner_->at(k_); }
    iterator& operator++() {
      ++k_;
      return *this;
    }
    bool operator==(const iterator& o) const noexcept { return k_ == o.k_; }

   private:
    const MonicPolys* owner_;
    std::uint64_t k_;
  };
  iterator begin() const { return {this, 0}; }
  iterator end() const { return {this, count_}; }

 private:
  FieldPtr field_;
  unsigned n_;
  std::uint64_t count_;
};

MonicPolys monic_enum(FieldPtr field, unsigned n);
// Inverse of MonicPolys::at for a monic polynomial.
std::uint64_t monic_index(const Poly& f);

// Kronecker symbol (D/f) for monic f, via factorisation of f.
int kronecker(const Poly& D, const Poly& f);
// (D/P) for monic irreducible P, computed in F_q[T]/(P).
int kronecker_irreducible(const Poly& D, const Poly& P);

// Sum of e^{q^i}, i < [F:target], where q = |target|.
FieldElem trace_to_subfield(const FieldElem& e, const Field& target);

// Grammar: terms c*T^k, c*T, T^k, T, c joined by + or -; whitespace ignored.
// c is a decimal integer reduced mod p, or [k] for the field element of index k.
Poly parse_poly(const FieldPtr& field, std::string_view text);

// Same grammar over Z, without [k] terms; coefficients constant first.
std::vector<std::int64_t> parse_int_poly(std::string_view text);

}  // namespace fflambda
