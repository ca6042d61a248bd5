#pragma once

// Finite fields F_{p^r} of odd characteristic, built as towers.
//
// A prime field F_p is the root of every tower. An extension of degree n over
// a field F is F[theta]/(m(theta)) where m is the lexicographically smallest
// monic irreducible of degree n over F (coefficients compared from the
// constant term upward, using element indices). Elements are stored as a flat
// vector of residues mod p: an element sum_j a_j theta^j of the extension keeps
// a_j in slots [j*s, (j+1)*s) where s is the degree of F over F_p. The residues
// of an element belonging to a subfield F_sub of the tower therefore occupy a
// prefix of length deg(F_sub), and embedding is a relabelling.

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace fflambda {

inline constexpr std::size_t kMaxFieldDegree = 16;
using Residues = std::array<std::uint32_t, kMaxFieldDegree>;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class FieldElem {
 public:
  FieldElem() = default;

  const Field* field() const noexcept { return field_; }
  const Residues& residues() const noexcept { return rep_; }
  bool is_zero() const noexcept;

  friend bool operator==(const FieldElem& a, const FieldElem& b) noexcept {
    return a.field_ == b.field_ && a.rep_ == b.rep_;
  }

  FieldElem operator-() const;
  FieldElem& operator+=(const FieldElem& rhs);
  FieldElem& operator-=(const FieldElem& rhs);
  FieldElem& operator*=(const FieldElem& rhs);
  friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
  friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
  friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
  friend FieldElem operator/(const FieldElem& a, const FieldElem& b);

 private:
  friend class Field;
  FieldElem(const Field* field, const Residues& rep) : field_(field), rep_(rep) {}

  const Field* field_ = nullptr;
  Residues rep_{};
};

class Field : public std::enable_shared_from_this<Field> {
  struct PrivateTag {};

 public:
  // F_p; shared per p while any reference is alive.
  static FieldPtr prime(std::uint32_t p);
  // F_{p^r} as a degree-r extension of F_p.
  static FieldPtr make(std::uint32_t p, unsigned r);

  // Degree-n extension over this field (n == 1 returns this field).
  FieldPtr extension(unsigned n) const;

  std::uint32_t characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return degree_; }
  unsigned relative_degree() const noexcept { return rel_degree_; }
  std::uint64_t order() const noexcept { return order_; }
  bool is_prime_field() const noexcept { return base_ == nullptr; }
  const FieldPtr& base() const noexcept { return base_; }
  const Field& prime_field() const noexcept;
  // Defining polynomial over base(), constant term first, monic; empty for F_p.
  const std::vector<FieldElem>& modulus() const noexcept { return modulus_; }
  std::string modulus_string() const;
  std::string name() const;

  // True if sub is this field or one of its ancestors in the tower.
  bool has_subfield(const Field& sub) const noexcept;

  FieldElem zero() const noexcept { return FieldElem(this, Residues{}); }
  FieldElem one() const noexcept;
  FieldElem from_int(std::int64_t v) const noexcept;
  // Index = sum_i residue_i * p^i over the flat representation.
  FieldElem from_index(std::uint64_t index) const;
  std::uint64_t index(const FieldElem& e) const;
  // Class of theta in base()[theta]/(modulus); for F_p this is 1.
  FieldElem generator() const;

  FieldElem embed(const FieldElem& e) const;
  bool lies_in(const FieldElem& e, const Field& sub) const;
  FieldElem restrict_to(const FieldElem& e, const Field& sub) const;

  FieldElem add(const FieldElem& a, const FieldElem& b) const;
  FieldElem sub(const FieldElem& a, const FieldElem& b) const;
  FieldElem neg(const FieldElem& a) const;
  FieldElem mul(const FieldElem& a, const FieldElem& b) const;
  FieldElem inv(const FieldElem& a) const;
  FieldElem pow(const FieldElem& a, std::uint64_t exp) const;

  // Quadratic character of F_q: 0, 1 or -1.
  int quad_char(const FieldElem& e) const;

  Field(PrivateTag, std::uint32_t p);
  Field(PrivateTag, FieldPtr base, std::vector<FieldElem> modulus);

 private:
  void check_owner(const FieldElem& e) const;
  Residues add_raw(const Residues& a, const Residues& b) const noexcept;
  Residues sub_raw(const Residues& a, const Residues& b) const noexcept;
  Residues mul_raw(const Residues& a, const Residues& b) const noexcept;
  Residues pow_raw(Residues a, std::uint64_t exp) const noexcept;
  Residues one_raw() const noexcept;

  std::uint32_t p_;
  unsigned degree_;
  unsigned rel_degree_;
  std::uint64_t order_;
  FieldPtr base_;
  std::vector<FieldElem> modulus_;
  std::vector<Residues> modulus_raw_;  // modulus coefficients as base residues

  mutable std::mutex cache_mu_;
  // Fields are interned for the life of the process, so the raw owner
  // pointer in FieldElem never dangles.
  mutable std::map<unsigned, FieldPtr> extensions_;
};

bool is_prime(std::uint64_t n) noexcept;

}  // namespace fflambda
