#include "fflambda/charsum.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "fflambda/limits.hpp"

namespace fflambda {
namespace {

// Reduces a length-p exponent histogram with zeta^{p-1} = -(1 + ... + zeta^{p-2}).
std::vector<std::int64_t> reduce(std::vector<std::int64_t> w, std::uint32_t p) {
  const std::int64_t top = w[p - 1];
  w.resize(p - 1);
  for (auto& c : w) c -= top;
  return w;
}

unsigned prime_trace_exponent(const FieldElem& e) {
  const Field& prime = e.field()->prime_field();
  return trace_to_subfield(e, prime).residues()[0];
}

// counts[index(a)] = #{y in F_{q^n} : Tr_{F_{q^n}/F_q}(y^2) = a}.
std::vector<std::uint64_t> trace_square_distribution(const FieldPtr& field, unsigned n) {
  require_enumerable(checked_pow(field->order(), n), "trace distribution");
  const FieldPtr ext = field->extension(n);
  std::vector<std::uint64_t> counts(field->order(), 0);
  for (std::uint64_t k = 0; k < ext->order(); ++k) {
    const FieldElem y = ext->from_index(k);
    ++counts[field->index(trace_to_subfield(ext->mul(y, y), *field))];
  }
  return counts;
}

}  // namespace

CycInt::CycInt(std::uint32_t p) : p_(p), c_(p - 1, 0) {}

CycInt::CycInt(std::uint32_t p, std::int64_t integer) : CycInt(p) { c_[0] = integer; }

CycInt::CycInt(std::uint32_t p, std::vector<std::int64_t> coeffs) : p_(p), c_(std::move(coeffs)) {
  if (c_.size() == p) {
    c_ = reduce(std::move(c_), p);
  } else if (c_.size() != p - 1) {
    throw Error(Errc::InvalidArgument, "CycInt needs p-1 or p coefficients");
  }
}

CycInt CycInt::zeta_power(std::uint32_t p, std::int64_t k) {
  std::vector<std::int64_t> w(p, 0);
  auto m = k % static_cast<std::int64_t>(p);
  if (m < 0) m += p;
  w[static_cast<std::size_t>(m)] = 1;
  return CycInt(p, std::move(w));
}

void CycInt::check(const CycInt& o) const {
  if (o.p_ != p_) throw Error(Errc::ContextMismatch, "cyclotomic integers for different p");
}

bool CycInt::is_rational() const noexcept {
  for (std::size_t i = 1; i < c_.size(); ++i) {
    if (c_[i] != 0) return false;
  }
  return true;
}

std::int64_t CycInt::to_integer() const {
  if (!is_rational()) throw Error(Errc::NotRational, to_string() + " is not a rational integer");
  return c_[0];
}

CycInt CycInt::conj() const {
  std::vector<std::int64_t> w(p_, 0);
  for (std::size_t k = 0; k < c_.size(); ++k) w[(p_ - k) % p_] += c_[k];
  return CycInt(p_, std::move(w));
}

std::complex<double> CycInt::to_complex() const {
  std::complex<double> z = 0;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(p_);
    z += static_cast<double>(c_[k]) * std::polar(1.0, theta);
  }
  return z;
}

bool CycInt::divisible_by(std::int64_t d) const noexcept {
  for (auto c : c_) {
    if (c % d != 0) return false;
  }
  return true;
}

CycInt CycInt::exact_div(std::int64_t d) const {
  if (d == 0 || !divisible_by(d)) throw Error(Errc::NonDivisible, to_string() + " is not divisible by " + std::to_string(d));
  CycInt out = *this;
  for (auto& c : out.c_) c /= d;
  return out;
}

std::string CycInt::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    const auto c = c_[k];
    if (c == 0) continue;
    const auto mag = c < 0 ? -c : c;
    if (c < 0) {
      out += "-";
    } else if (!out.empty()) {
      out += "+";
    }
    if (k == 0) {
      out += std::to_string(mag);
      continue;
    }
    if (mag != 1) out += std::to_string(mag) + "*";
    out += "z";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

CycInt CycInt::operator-() const {
  CycInt out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

CycInt& CycInt::operator+=(const CycInt& o) {
  check(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CycInt& CycInt::operator-=(const CycInt& o) {
  check(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

CycInt operator*(const CycInt& a, const CycInt& b) {
  a.check(b);
  const std::uint32_t p = a.p_;
  std::vector<std::int64_t> w(p, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) w[(i + j) % p] += a.c_[i] * b.c_[j];
  }
  return CycInt(p, std::move(w));
}

CycInt operator*(std::int64_t k, const CycInt& a) {
  CycInt out = a;
  for (auto& c : out.c_) c *= k;
  return out;
}

std::int64_t norm_sq(const CycInt& z) { return (z * z.conj()).to_integer(); }

CycInt from_exponent_histogram(std::uint32_t p, const std::vector<std::int64_t>& counts) {
  if (counts.size() != p) throw Error(Errc::InvalidArgument, "histogram needs p entries");
  return CycInt(p, counts);
}

CycInt chi_eval(const CharSpec& spec, const FieldElem& b) {
  if (b.field() != spec.field.get() || spec.a.field() != spec.field.get()) {
    throw Error(Errc::ContextMismatch, "character and argument over different fields");
  }
  return CycInt::zeta_power(spec.field->characteristic(), prime_trace_exponent(spec.a * b));
}

CycInt gauss_S(const CharSpec& spec, unsigned n) {
  const FieldPtr& F = spec.field;
  const auto p = F->characteristic();
  const auto dist = trace_square_distribution(F, n);
  std::vector<std::int64_t> hist(p, 0);
  for (std::uint64_t k = 0; k < dist.size(); ++k) {
    if (dist[k] == 0) continue;
    hist[prime_trace_exponent(spec.a * F->from_index(k))] += static_cast<std::int64_t>(dist[k]);
  }
  return CycInt(p, std::move(hist));
}

std::uint64_t fix_count(const FieldPtr& field, const FieldElem& a, unsigned n) {
  if (a.field() != field.get()) throw Error(Errc::ContextMismatch, "a is not in the given field");
  return field->order() * trace_square_distribution(field, n)[field->index(a)];
}

std::uint64_t fix_count_by_points(const FieldPtr& field, const FieldElem& a, unsigned n,
                                  std::uint64_t max_points) {
  if (a.field() != field.get()) throw Error(Errc::ContextMismatch, "a is not in the given field");
  const std::uint64_t q = field->order();
  const auto p = field->characteristic();
  const std::uint64_t points = checked_pow(q, n * p);
  if (points > max_points) {
    throw Error(Errc::SizeExceeded, "point loop needs " + std::to_string(points) + " x values");
  }
  const FieldPtr K = field->extension(n);
  const FieldPtr E = K->extension(p);
  // roots[index(z)] = #{y in K : y^2 = z}
  std::vector<std::uint64_t> roots(K->order(), 0);
  for (std::uint64_t k = 0; k < K->order(); ++k) {
    const FieldElem y = K->from_index(k);
    ++roots[K->index(K->mul(y, y))];
  }
  const FieldElem a_in_E = E->embed(a);
  const std::uint64_t qn = K->order();
  std::uint64_t count = 0;
  for (std::uint64_t k = 0; k < E->order(); ++k) {
    const FieldElem x = E->from_index(k);
    const FieldElem z = E->sub(E->pow(x, q), x);
    if (!E->lies_in(z, *K)) continue;
    const auto nroots = roots[K->index(E->restrict_to(z, *K))];
    if (nroots == 0) continue;
    if (E->sub(E->pow(x, qn), x) == a_in_E) count += nroots;
  }
  return count;
}

CycInt S_via_fix(const CharSpec& spec, unsigned n) {
  const FieldPtr& F = spec.field;
  const auto p = F->characteristic();
  const auto dist = trace_square_distribution(F, n);
  std::vector<std::int64_t> hist(p, 0);
  for (std::uint64_t k = 0; k < F->order(); ++k) {
    const std::uint64_t fixed = F->order() * dist[k];
    hist[prime_trace_exponent(spec.a * F->from_index(k))] += static_cast<std::int64_t>(fixed);
  }
  return CycInt(p, std::move(hist)).exact_div(static_cast<std::int64_t>(F->order()));
}

CycInt quadratic_gauss_sum(std::uint32_t p) {
  std::vector<std::int64_t> hist(p, 0);
  for (std::uint64_t x = 0; x < p; ++x) ++hist[x * x % p];
  return CycInt(p, std::move(hist));
}

EigenvalueSet eigenvalue_set(const FieldPtr& field) {
  EigenvalueSet set;
  set.p = field->characteristic();
  set.r = field->degree();
  set.p_star = set.p % 4 == 1 ? static_cast<std::int64_t>(set.p) : -static_cast<std::int64_t>(set.p);
  set.sqrt_p_star = quadratic_gauss_sum(set.p);
  if (!(set.sqrt_p_star * set.sqrt_p_star == CycInt(set.p, set.p_star))) {
    throw Error(Errc::ClosedFormMismatch, "quadratic Gauss sum does not square to p*");
  }
  CycInt power(set.p, 1);
  for (unsigned i = 0; i < set.r; ++i) power = power * set.sqrt_p_star;
  const CycInt neg_power = -power;

  for (std::uint64_t k = 1; k < field->order(); ++k) {
    Eigenvalue ev{field->from_index(k), CycInt(set.p), CycInt(set.p), 0};
    ev.S = gauss_S({field, ev.a}, 1);
    ev.alpha = -ev.S;
    ev.residue = field->quad_char(ev.a);
    const bool plus_sign = ev.residue == 1 ? (set.r + 1) % 2 == 0 : set.r % 2 == 0;
    const CycInt expected = plus_sign ? power : neg_power;
    if (!(ev.S == expected)) {
      throw Error(Errc::ClosedFormMismatch, "S(chi_a, 1) = " + ev.S.to_string() + " but the sign rule gives " +
                                                expected.to_string());
    }
    if (ev.alpha == power) ++set.plus_count;
    if (ev.alpha == neg_power) ++set.minus_count;
    set.eigenvalues.push_back(std::move(ev));
  }
  const auto half = static_cast<int>((field->order() - 1) / 2);
  if (set.plus_count != half || set.minus_count != half) {
    throw Error(Errc::ClosedFormMismatch, "eigenvalue multiplicities " + std::to_string(set.plus_count) + " and " +
                                              std::to_string(set.minus_count) + ", expected " + std::to_string(half));
  }
  return set;
}

LData katz_L_polynomial(const EigenvalueSet& set, std::uint64_t q) {
  std::vector<CycInt> poly{CycInt(set.p, 1)};
  for (const auto& ev : set.eigenvalues) {
    std::vector<CycInt> next(poly.size() + 1, CycInt(set.p));
    for (std::size_t k = 0; k < poly.size(); ++k) {
      next[k] += poly[k];
      next[k + 1] -= ev.alpha * poly[k];
    }
    poly = std::move(next);
  }
  LData L;
  L.q = q;
  L.g = static_cast<int>(set.eigenvalues.size() / 2);
  for (const auto& c : poly) L.c.push_back(c.to_integer());
  L.D = "T^" + std::to_string(q) + "-T";
  return L;
}

}  // namespace fflambda
