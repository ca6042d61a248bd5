#include "fflambda/field.hpp"

#include <string>

#include "fflambda/error.hpp"
#include "fflambda/limits.hpp"
#include "fflambda/poly.hpp"

namespace fflambda {
namespace {

std::mutex g_prime_mu;
std::map<std::uint32_t, FieldPtr> g_primes;

inline std::uint32_t mulmod(std::uint64_t a, std::uint64_t b, std::uint32_t p) noexcept {
  return static_cast<std::uint32_t>(a * b % p);
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

bool FieldElem::is_zero() const noexcept {
  for (auto r : rep_) {
    if (r != 0) return false;
  }
  return true;
}

FieldElem FieldElem::operator-() const { return field_->neg(*this); }
FieldElem& FieldElem::operator+=(const FieldElem& rhs) { return *this = field_->add(*this, rhs); }
FieldElem& FieldElem::operator-=(const FieldElem& rhs) { return *this = field_->sub(*this, rhs); }
FieldElem& FieldElem::operator*=(const FieldElem& rhs) { return *this = field_->mul(*this, rhs); }
FieldElem operator/(const FieldElem& a, const FieldElem& b) {
  return a.field_->mul(a, a.field_->inv(b));
}

Field::Field(PrivateTag, std::uint32_t p)
    : p_(p), degree_(1), rel_degree_(1), order_(p) {}

Field::Field(PrivateTag, FieldPtr base, std::vector<FieldElem> modulus)
    : p_(base->p_),
      degree_(base->degree_ * static_cast<unsigned>(modulus.size() - 1)),
      rel_degree_(static_cast<unsigned>(modulus.size() - 1)),
      order_(checked_pow(base->p_, base->degree_ * static_cast<unsigned>(modulus.size() - 1))),
      base_(std::move(base)),
      modulus_(std::move(modulus)) {
  modulus_raw_.reserve(modulus_.size());
  for (const auto& c : modulus_) modulus_raw_.push_back(c.residues());
}

FieldPtr Field::prime(std::uint32_t p) {
  if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  if (p == 2) throw Error(Errc::EvenCharacteristic, "characteristic 2 is not supported");
  require_enumerable(p, "prime field");
  std::lock_guard lock(g_prime_mu);
  if (auto it = g_primes.find(p); it != g_primes.end()) {
    return it->second;
  }
  auto field = std::make_shared<const Field>(PrivateTag{}, p);
  g_primes[p] = field;
  return field;
}

FieldPtr Field::make(std::uint32_t p, unsigned r) {
  if (r == 0) throw Error(Errc::InvalidArgument, "extension degree must be at least 1");
  auto base = prime(p);
  return base->extension(r);
}

FieldPtr Field::extension(unsigned n) const {
  if (n == 0) throw Error(Errc::InvalidArgument, "extension degree must be at least 1");
  auto self = shared_from_this();
  if (n == 1) return self;
  if (static_cast<std::size_t>(degree_) * n > kMaxFieldDegree) {
    throw Error(Errc::SizeExceeded, "total extension degree " + std::to_string(degree_ * n) +
                                        " exceeds " + std::to_string(kMaxFieldDegree));
  }
  require_enumerable(checked_pow(order_, n), "extension field");
  std::lock_guard lock(cache_mu_);
  if (auto it = extensions_.find(n); it != extensions_.end()) {
    return it->second;
  }
  auto modulus = find_smallest_irreducible(self, n);
  auto field = std::make_shared<const Field>(PrivateTag{}, self, modulus.coeffs());
  extensions_[n] = field;
  return field;
}

const Field& Field::prime_field() const noexcept {
  const Field* f = this;
  while (f->base_) f = f->base_.get();
  return *f;
}

std::string Field::name() const {
  if (is_prime_field()) return "F_" + std::to_string(p_);
  return "F_" + std::to_string(p_) + "^" + std::to_string(degree_);
}

std::string Field::modulus_string() const {
  if (is_prime_field()) return "";
  return Poly(base_, modulus_).to_string();
}

bool Field::has_subfield(const Field& sub) const noexcept {
  for (const Field* f = this; f != nullptr; f = f->base_.get()) {
    if (f == &sub) return true;
  }
  return false;
}

FieldElem Field::one() const noexcept { return FieldElem(this, one_raw()); }

Residues Field::one_raw() const noexcept {
  Residues r{};
  r[0] = 1;
  return r;
}

FieldElem Field::from_int(std::int64_t v) const noexcept {
  Residues r{};
  auto m = v % static_cast<std::int64_t>(p_);
  if (m < 0) m += p_;
  r[0] = static_cast<std::uint32_t>(m);
  return FieldElem(this, r);
}

FieldElem Field::from_index(std::uint64_t index) const {
  if (index >= order_) throw Error(Errc::IndexOutOfRange, "element index out of range");
  Residues r{};
  for (unsigned i = 0; i < degree_; ++i) {
    r[i] = static_cast<std::uint32_t>(index % p_);
    index /= p_;
  }
  return FieldElem(this, r);
}

std::uint64_t Field::index(const FieldElem& e) const {
  check_owner(e);
  std::uint64_t out = 0;
  for (unsigned i = degree_; i-- > 0;) out = out * p_ + e.rep_[i];
  return out;
}

FieldElem Field::generator() const {
  Residues r{};
  if (is_prime_field()) {
    r[0] = 1;
  } else if (rel_degree_ == 1) {
    r = base_->neg(modulus_[0]).rep_;
  } else {
    r[base_->degree_] = 1;
  }
  return FieldElem(this, r);
}

FieldElem Field::embed(const FieldElem& e) const {
  if (e.field_ == nullptr || !has_subfield(*e.field_)) {
    throw Error(Errc::NoEmbedding, "element does not belong to a subfield of " + name());
  }
  return FieldElem(this, e.rep_);
}

bool Field::lies_in(const FieldElem& e, const Field& sub) const {
  check_owner(e);
  if (!has_subfield(sub)) throw Error(Errc::NoEmbedding, sub.name() + " is not a subfield of " + name());
  for (unsigned i = sub.degree_; i < degree_; ++i) {
    if (e.rep_[i] != 0) return false;
  }
  return true;
}

FieldElem Field::restrict_to(const FieldElem& e, const Field& sub) const {
  if (!lies_in(e, sub)) throw Error(Errc::NoEmbedding, "element is not in " + sub.name());
  return FieldElem(&sub, e.rep_);
}

void Field::check_owner(const FieldElem& e) const {
  if (e.field_ != this) {
    throw Error(Errc::ContextMismatch,
                "element of " + (e.field_ ? e.field_->name() : std::string("<detached>")) +
                    " used in " + name());
  }
}

Residues Field::add_raw(const Residues& a, const Residues& b) const noexcept {
  Residues r{};
  for (unsigned i = 0; i < degree_; ++i) {
    auto s = a[i] + b[i];
    r[i] = s >= p_ ? s - p_ : s;
  }
  return r;
}

Residues Field::sub_raw(const Residues& a, const Residues& b) const noexcept {
  Residues r{};
  for (unsigned i = 0; i < degree_; ++i) r[i] = a[i] >= b[i] ? a[i] - b[i] : a[i] + p_ - b[i];
  return r;
}

Residues Field::mul_raw(const Residues& a, const Residues& b) const noexcept {
  Residues r{};
  if (is_prime_field()) {
    r[0] = mulmod(a[0], b[0], p_);
    return r;
  }
  const unsigned n = rel_degree_;
  if (base_->is_prime_field()) {
    // Schoolbook product mod p, then reduce by the monic modulus.
    std::array<std::uint64_t, 2 * kMaxFieldDegree> acc{};
    for (unsigned i = 0; i < n; ++i) {
      if (a[i] == 0) continue;
      for (unsigned j = 0; j < n; ++j) {
        acc[i + j] = (acc[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p_;
      }
    }
    for (unsigned k = 2 * n - 1; k-- > n;) {
      const std::uint64_t c = acc[k];
      if (c == 0) continue;
      for (unsigned j = 0; j < n; ++j) {
        const std::uint64_t m = modulus_raw_[j][0];
        acc[k - n + j] = (acc[k - n + j] + c * (p_ - m)) % p_;
      }
    }
    for (unsigned i = 0; i < n; ++i) r[i] = static_cast<std::uint32_t>(acc[i]);
    return r;
  }
  const unsigned s = base_->degree_;
  auto block = [s](const Residues& v, unsigned j) {
    Residues out{};
    for (unsigned k = 0; k < s; ++k) out[k] = v[j * s + k];
    return out;
  };
  std::vector<Residues> acc(2 * n - 1, Residues{});
  for (unsigned i = 0; i < n; ++i) {
    const auto ai = block(a, i);
    for (unsigned j = 0; j < n; ++j) {
      acc[i + j] = base_->add_raw(acc[i + j], base_->mul_raw(ai, block(b, j)));
    }
  }
  for (unsigned k = 2 * n - 1; k-- > n;) {
    for (unsigned j = 0; j < n; ++j) {
      acc[k - n + j] = base_->sub_raw(acc[k - n + j], base_->mul_raw(acc[k], modulus_raw_[j]));
    }
  }
  for (unsigned j = 0; j < n; ++j) {
    for (unsigned k = 0; k < s; ++k) r[j * s + k] = acc[j][k];
  }
  return r;
}

Residues Field::pow_raw(Residues a, std::uint64_t exp) const noexcept {
  Residues out = one_raw();
  while (exp != 0) {
    if (exp & 1U) out = mul_raw(out, a);
    exp >>= 1;
    if (exp != 0) a = mul_raw(a, a);
  }
  return out;
}

FieldElem Field::add(const FieldElem& a, const FieldElem& b) const {
  check_owner(a);
  check_owner(b);
  return FieldElem(this, add_raw(a.rep_, b.rep_));
}

FieldElem Field::sub(const FieldElem& a, const FieldElem& b) const {
  check_owner(a);
  check_owner(b);
  return FieldElem(this, sub_raw(a.rep_, b.rep_));
}

FieldElem Field::neg(const FieldElem& a) const {
  check_owner(a);
  return FieldElem(this, sub_raw(Residues{}, a.rep_));
}

FieldElem Field::mul(const FieldElem& a, const FieldElem& b) const {
  check_owner(a);
  check_owner(b);
  return FieldElem(this, mul_raw(a.rep_, b.rep_));
}

FieldElem Field::inv(const FieldElem& a) const {
  check_owner(a);
  if (a.is_zero()) throw Error(Errc::InvalidArgument, "inverse of zero");
  return FieldElem(this, pow_raw(a.rep_, order_ - 2));
}

FieldElem Field::pow(const FieldElem& a, std::uint64_t exp) const {
  check_owner(a);
  return FieldElem(this, pow_raw(a.rep_, exp));
}

int Field::quad_char(const FieldElem& e) const {
  check_owner(e);
  if (e.is_zero()) return 0;
  const auto r = pow_raw(e.rep_, (order_ - 1) / 2);
  return r == one_raw() ? 1 : -1;
}

}  // namespace fflambda
