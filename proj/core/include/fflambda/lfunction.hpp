#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fflambda/error.hpp"
#include "fflambda/poly.hpp"

namespace fflambda {

// D monic, squarefree, of odd degree >= 3 over a field of odd order.
class GoodPair {
 public:
  const FieldPtr& field() const noexcept { return D_.field(); }
  const Poly& D() const noexcept { return D_; }
  std::uint64_t q() const noexcept { return D_.field()->order(); }
  int genus() const noexcept { return (D_.degree() - 1) / 2; }

 private:
  friend GoodPair check_good(const Poly& D);
  explicit GoodPair(Poly D) : D_(std::move(D)) {}
  Poly D_;
};

// Every violated condition, in the order NotMonic, NotSquarefree, EvenDegree,
// DegreeTooSmall. Empty means D is good.
std::vector<Errc> good_pair_violations(const Poly& D);
GoodPair check_good(const Poly& D);

// L(s, chi_D) = sum_n c_n (q^{-s})^n.
struct LData {
  std::uint64_t q = 0;
  int g = 0;
  std::vector<std::int64_t> c;
  std::optional<std::string> D;

  friend bool operator==(const LData&, const LData&) = default;
};

// c_0 = 1, length 2g+1 and c_{g+n} = q^n c_{g-n}; throws
// FunctionalEquationViolation otherwise.
void validate(const LData& L);
bool satisfies_functional_equation(const LData& L) noexcept;

// c_n = sum of (D/f) over monic f of degree n.
std::int64_t compute_c(const GoodPair& pair, unsigned n);

struct LOptions {
  // compute_L also checks c_{2g+1} = 0 when q^{2g+1} is at most this.
  std::uint64_t vanishing_check_limit = std::uint64_t{1} << 18;
};

LData compute_L(const GoodPair& pair, const LOptions& opts = {});

// The character values (D/f) for every monic f of degree n, indexed as in
// MonicPolys. Values are built multiplicatively from the irreducibles, whose
// symbols are evaluated in the residue field F_q[T]/(P).
std::vector<std::int8_t> kronecker_table(const GoodPair& pair, unsigned n);

// Phi_n = c_{g-n} q^{n/2}, 0 <= n <= g.
double phi(const LData& L, int n);

struct InverseRoots {
  std::vector<std::complex<double>> roots;
  double max_deviation = 0.0;  // max | |alpha| - sqrt(q) |
  bool weil_ok = false;
};

// The 2g numbers alpha_i with sum c_n T^n = prod (1 - alpha_i T). Repeated
// roots are located on the exact squarefree part and repeated.
InverseRoots inverse_roots(const LData& L, double tol_weil = 1e-9);

}  // namespace fflambda
