#include "fflambda/poly.hpp"

#include <cctype>
#include <string>

#include "fflambda/error.hpp"
#include "fflambda/limits.hpp"

namespace fflambda {

Poly::Poly(FieldPtr field) : field_(std::move(field)) {}

Poly::Poly(FieldPtr field, std::vector<FieldElem> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) {
    if (c.field() != field_.get()) throw Error(Errc::ContextMismatch, "coefficient from another field");
  }
  strip();
}

Poly Poly::from_ints(FieldPtr field, std::initializer_list<std::int64_t> coeffs) {
  return from_ints(std::move(field), std::vector<std::int64_t>(coeffs));
}

Poly Poly::from_ints(FieldPtr field, const std::vector<std::int64_t>& coeffs) {
  std::vector<FieldElem> c;
  c.reserve(coeffs.size());
  for (auto v : coeffs) c.push_back(field->from_int(v));
  return Poly(std::move(field), std::move(c));
}

Poly Poly::constant(FieldPtr field, const FieldElem& c) { return Poly(std::move(field), {c}); }

Poly Poly::monomial(FieldPtr field, const FieldElem& c, unsigned k) {
  std::vector<FieldElem> v(k + 1, field->zero());
  v[k] = c;
  return Poly(std::move(field), std::move(v));
}

Poly Poly::variable(FieldPtr field) {
  auto one = field->one();
  return monomial(std::move(field), one, 1);
}

void Poly::strip() noexcept {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

void Poly::check_same(const Poly& other) const {
  if (field_.get() != other.field_.get()) {
    throw Error(Errc::ContextMismatch, "polynomials over different fields");
  }
}

bool Poly::is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == field_->one(); }

FieldElem Poly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : field_->zero(); }

FieldElem Poly::lead() const {
  if (coeffs_.empty()) throw Error(Errc::ZeroPolynomial, "leading coefficient of zero");
  return coeffs_.back();
}

Poly Poly::monic() const {
  if (is_zero()) throw Error(Errc::ZeroPolynomial, "cannot normalise the zero polynomial");
  if (is_monic()) return *this;
  return field_->inv(lead()) * *this;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return Poly(field_);
  std::vector<FieldElem> d;
  d.reserve(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    d.push_back(field_->from_int(static_cast<std::int64_t>(i % field_->characteristic())) * coeffs_[i]);
  }
  return Poly(field_, std::move(d));
}

FieldElem Poly::operator()(const FieldElem& x) const {
  const Field* target = x.field();
  if (target == nullptr || !target->has_subfield(*field_)) {
    throw Error(Errc::NoEmbedding, "evaluation point is not in an extension of " + field_->name());
  }
  FieldElem acc = target->zero();
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = target->add(target->mul(acc, x), target->embed(*it));
  }
  return acc;
}

Poly Poly::operator-() const {
  std::vector<FieldElem> c;
  c.reserve(coeffs_.size());
  for (const auto& e : coeffs_) c.push_back(-e);
  return Poly(field_, std::move(c));
}

Poly& Poly::operator+=(const Poly& rhs) {
  check_same(rhs);
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), field_->zero());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  strip();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  check_same(rhs);
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), field_->zero());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  strip();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_same(b);
  if (a.is_zero() || b.is_zero()) return Poly(a.field_);
  std::vector<FieldElem> c(a.coeffs_.size() + b.coeffs_.size() - 1, a.field_->zero());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(a.field_, std::move(c));
}

Poly operator*(const FieldElem& c, const Poly& a) {
  std::vector<FieldElem> out;
  out.reserve(a.coeffs_.size());
  for (const auto& e : a.coeffs_) out.push_back(c * e);
  return Poly(a.field_, std::move(out));
}

Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

bool operator==(const Poly& a, const Poly& b) noexcept {
  return a.field_.get() == b.field_.get() && a.coeffs_ == b.coeffs_;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(Errc::ZeroPolynomial, "division by the zero polynomial");
  const auto& field = a.field();
  if (field.get() != b.field().get()) throw Error(Errc::ContextMismatch, "polynomials over different fields");
  if (a.degree() < b.degree()) return {Poly(field), a};
  std::vector<FieldElem> rem = a.coeffs();
  const auto& bc = b.coeffs();
  const auto db = static_cast<std::size_t>(b.degree());
  const FieldElem inv_lead = field->inv(bc.back());
  const bool monic = bc.back() == field->one();
  std::vector<FieldElem> quot(rem.size() - db, field->zero());
  for (std::size_t k = rem.size(); k-- > db;) {
    if (rem[k].is_zero()) continue;
    const FieldElem c = monic ? rem[k] : rem[k] * inv_lead;
    quot[k - db] = c;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= c * bc[j];
  }
  rem.resize(db, field->zero());
  return {Poly(field, std::move(quot)), Poly(field, std::move(rem))};
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : a.monic();
}

Poly pow_mod(Poly base, std::uint64_t exp, const Poly& modulus) {
  Poly out = Poly::constant(modulus.field(), modulus.field()->one()) % modulus;
  base = base % modulus;
  while (exp != 0) {
    if (exp & 1U) out = (out * base) % modulus;
    exp >>= 1;
    if (exp != 0) base = (base * base) % modulus;
  }
  return out;
}

bool is_squarefree(const Poly& f) {
  if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "squarefreeness of the zero polynomial");
  return gcd(f, f.derivative()).degree() == 0;
}

bool is_irreducible(const Poly& f) {
  if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "irreducibility of the zero polynomial");
  const int n = f.degree();
  if (n <= 0) return false;
  if (n == 1) return true;
  const Poly g = f.monic();
  const auto& field = g.field();
  const Poly t = Poly::variable(field);
  // frob[i] = T^{q^i} mod g.
  std::vector<Poly> frob{t % g};
  for (int i = 1; i <= n; ++i) frob.push_back(pow_mod(frob.back(), field->order(), g));
  if (!(frob[static_cast<std::size_t>(n)] == t % g)) return false;
  int m = n;
  for (int r = 2; r <= m; ++r) {
    if (m % r != 0) continue;
    while (m % r == 0) m /= r;
    if (gcd(frob[static_cast<std::size_t>(n / r)] - t, g).degree() != 0) return false;
  }
  return true;
}

std::vector<Factor> factor(const Poly& f) {
  if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "factorisation of the zero polynomial");
  Poly rest = f.monic();
  std::vector<Factor> out;
  const auto& field = f.field();
  for (unsigned d = 1; 2 * d <= static_cast<unsigned>(rest.degree()); ++d) {
    MonicPolys candidates(field, d);
    for (std::uint64_t k = 0; k < candidates.size() && 2 * d <= static_cast<unsigned>(rest.degree()); ++k) {
      Poly p = candidates.at(k);
      auto [quot, rem] = divmod(rest, p);
      if (!rem.is_zero() || !is_irreducible(p)) continue;
      int mult = 0;
      while (true) {
        auto [q2, r2] = divmod(rest, p);
        if (!r2.is_zero()) break;
        rest = std::move(q2);
        ++mult;
      }
      out.push_back({std::move(p), mult});
    }
  }
  if (rest.degree() >= 1) {
    bool merged = false;
    for (auto& fac : out) {
      if (fac.poly == rest) {
        ++fac.multiplicity;
        merged = true;
      }
    }
    if (!merged) out.push_back({std::move(rest), 1});
  }
  return out;
}

Poly find_smallest_irreducible(const FieldPtr& field, unsigned n) {
  MonicPolys candidates(field, n);
  for (std::uint64_t k = 0; k < candidates.size(); ++k) {
    Poly p = candidates.at(k);
    if (is_irreducible(p)) return p;
  }
  throw Error(Errc::InvalidArgument, "no irreducible polynomial found");  // unreachable for n >= 1
}

MonicPolys::MonicPolys(FieldPtr field, unsigned n)
    : field_(std::move(field)), n_(n), count_(checked_pow(field_->order(), n)) {
  require_enumerable(count_, "monic enumeration");
}

Poly MonicPolys::at(std::uint64_t k) const {
  if (k >= count_) throw Error(Errc::IndexOutOfRange, "monic index out of range");
  std::vector<FieldElem> c(n_ + 1, field_->zero());
  const std::uint64_t q = field_->order();
  for (unsigned i = n_; i-- > 0;) {
    c[i] = field_->from_index(k % q);
    k /= q;
  }
  c[n_] = field_->one();
  return Poly(field_, std::move(c));
}

MonicPolys monic_enum(FieldPtr field, unsigned n) { return MonicPolys(std::move(field), n); }

std::uint64_t monic_index(const Poly& f) {
  if (!f.is_monic()) throw Error(Errc::NotMonic, "monic_index needs a monic polynomial");
  std::uint64_t k = 0;
  const auto& field = *f.field();
  for (int i = 0; i < f.degree(); ++i) k = k * field.order() + field.index(f.coeffs()[static_cast<std::size_t>(i)]);
  return k;
}

int kronecker_irreducible(const Poly& D, const Poly& P) {
  if (P.degree() <= 0) return 1;
  const Poly r = D % P;
  if (r.is_zero()) return 0;
  const auto& field = P.field();
  const std::uint64_t q = field->order();
  Poly s = pow_mod(r, (q - 1) / 2, P);
  Poly prod = s;
  for (int i = 1; i < P.degree(); ++i) {
    s = pow_mod(s, q, P);
    prod = (prod * s) % P;
  }
  const Poly one = Poly::constant(field, field->one());
  if (prod == one) return 1;
  if (prod == -one) return -1;
  throw Error(Errc::InvalidArgument, "modulus passed to kronecker_irreducible is not irreducible");
}

int kronecker(const Poly& D, const Poly& f) {
  if (D.field().get() != f.field().get()) throw Error(Errc::ContextMismatch, "D and f over different fields");
  if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "Kronecker symbol at zero");
  if (!f.is_monic()) throw Error(Errc::NotMonic, "Kronecker symbol needs monic f");
  int out = 1;
  for (const auto& fac : factor(f)) {
    const int chi = kronecker_irreducible(D, fac.poly);
    if (chi == 0) return 0;
    if (chi < 0 && fac.multiplicity % 2 != 0) out = -out;
  }
  return out;
}

FieldElem trace_to_subfield(const FieldElem& e, const Field& target) {
  const Field* source = e.field();
  if (source == nullptr || !source->has_subfield(target)) {
    throw Error(Errc::NoEmbedding, target.name() + " does not embed in the source field");
  }
  const unsigned n = source->degree() / target.degree();
  FieldElem acc = e;
  FieldElem cur = e;
  for (unsigned i = 1; i < n; ++i) {
    cur = source->pow(cur, target.order());
    acc += cur;
  }
  return source->restrict_to(acc, target);
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  const auto p = field_->characteristic();
  const Field& prime = field_->prime_field();
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const auto& c = coeffs_[k];
    if (c.is_zero()) continue;
    std::string mag;
    bool negative = false;
    if (field_->lies_in(c, prime)) {
      const auto v = c.residues()[0];
      const std::uint32_t m = v > p / 2 ? p - v : v;
      negative = v > p / 2;
      if (m != 1 || k == 0) mag = std::to_string(m);
    } else {
      mag = "[" + std::to_string(field_->index(c)) + "]";
    }
    if (negative) {
      out += "-";
    } else if (!out.empty()) {
      out += "+";
    }
    out += mag;
    if (k > 0) {
      if (!mag.empty()) out += "*";
      out += "T";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

namespace {

struct Term {
  bool negative = false;
  bool is_index = false;  // [k]
  std::uint64_t value = 1;
  std::size_t k = 0;
};

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) {
    for (char ch : text) {
      if (!std::isspace(static_cast<unsigned char>(ch))) s_.push_back(ch);
    }
  }

  std::vector<Term> parse() {
    if (s_.empty()) fail("empty polynomial");
    std::vector<Term> terms;
    bool first = true;
    while (pos_ < s_.size()) {
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
      } else if (!first) {
        fail("expected + or -");
      }
      first = false;
      Term t = term();
      t.negative = negative;
      terms.push_back(t);
    }
    return terms;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(Errc::ParseError, why + " at position " + std::to_string(pos_) + " in '" + s_ + "'");
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  std::uint64_t number() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
    std::uint64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<std::uint64_t>(peek() - '0');
      if (v > (std::uint64_t{1} << 62)) fail("number too large");
      ++pos_;
    }
    return v;
  }

  Term term() {
    Term t;
    bool have_coeff = false;
    if (peek() == '[') {
      ++pos_;
      t.value = number();
      t.is_index = true;
      if (peek() != ']') fail("expected ]");
      ++pos_;
      have_coeff = true;
    } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
      t.value = number();
      have_coeff = true;
    }
    if (have_coeff) {
      if (peek() != '*') return t;
      ++pos_;
    }
    if (peek() != 'T') fail("expected T");
    ++pos_;
    t.k = 1;
    if (peek() == '^') {
      ++pos_;
      t.k = static_cast<std::size_t>(number());
      if (t.k > 4096) fail("exponent too large");
    }
    return t;
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const FieldPtr& field, std::string_view text) {
  std::vector<FieldElem> coeffs;
  for (const Term& t : PolyParser(text).parse()) {
    FieldElem c = t.is_index ? field->from_index(t.value)
                             : field->from_int(static_cast<std::int64_t>(t.value % field->characteristic()));
    if (t.negative) c = -c;
    if (coeffs.size() <= t.k) coeffs.resize(t.k + 1, field->zero());
    coeffs[t.k] += c;
  }
  return Poly(field, std::move(coeffs));
}

std::vector<std::int64_t> parse_int_poly(std::string_view text) {
  PolyParser parser(text);
  std::vector<std::int64_t> coeffs;
  for (const Term& t : parser.parse()) {
    if (t.is_index) parser.fail("field index terms need a field");
    if (t.value > (std::uint64_t{1} << 40)) parser.fail("coefficient too large");
    if (coeffs.size() <= t.k) coeffs.resize(t.k + 1, 0);
    const auto v = static_cast<std::int64_t>(t.value);
    coeffs[t.k] += t.negative ? -v : v;
  }
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  return coeffs;
}

}  // namespace fflambda
