#include "cacti/scalar.hpp"

#include <sstream>

namespace cacti {

namespace {

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::int64_t mod_reduce(const BigInt& v, std::int64_t p) {
  BigInt r = v % p;
  if (r < 0) r += p;
  return static_cast<std::int64_t>(r);
}

// inverse of a mod p, a nonzero; extended Euclid
std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = a % p;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw Error("no inverse mod " + std::to_string(p));
  return ((t % p) + p) % p;
}

}  // namespace

FieldSpec FieldSpec::prime(std::int64_t p) {
  if (!is_prime(p)) throw Error("field characteristic must be prime, got " + std::to_string(p));
  return FieldSpec{FieldKind::prime_field, p};
}

FieldSpec FieldSpec::parse(const std::string& tag) {
  if (tag == "q" || tag == "Q" || tag == "rationals") return rationals();
  if (tag.size() >= 2 && (tag[0] == 'f' || tag[0] == 'F')) {
    try {
      return prime(std::stoll(tag.substr(1)));
    } catch (const std::invalid_argument&) {
    } catch (const std::out_of_range&) {
    }
  }
  throw Error("unknown field tag '" + tag + "' (expected q, f2, f3, ...)");
}

std::string FieldSpec::str() const {
  return kind == FieldKind::rationals ? "q" : "f" + std::to_string(characteristic);
}

Scalar Scalar::zero(const FieldSpec& f) {
  Scalar s;
  s.field_ = f;
  return s;
}

Scalar Scalar::one(const FieldSpec& f) { return of_int(1, f); }

Scalar Scalar::of_int(std::int64_t v, const FieldSpec& f) { return of_big(BigInt(v), f); }

Scalar Scalar::of_big(const BigInt& v, const FieldSpec& f) {
  Scalar s;
  s.field_ = f;
  if (f.kind == FieldKind::rationals)
    s.q_ = BigRat(v);
  else
    s.r_ = mod_reduce(v, f.characteristic);
  return s;
}

Scalar Scalar::of_fraction(const BigInt& num, const BigInt& den, const FieldSpec& f) {
  if (den == 0) throw Error("zero denominator");
  Scalar s;
  s.field_ = f;
  if (f.kind == FieldKind::rationals) {
    s.q_ = (den < 0) ? BigRat(-num, -den) : BigRat(num, den);
  } else {
    std::int64_t d = mod_reduce(den, f.characteristic);
    if (d == 0)
      throw Error("denominator vanishes in characteristic " +
                  std::to_string(f.characteristic));
    std::int64_t n = mod_reduce(num, f.characteristic);
    s.r_ = static_cast<std::int64_t>(
        (static_cast<BigInt>(n) * mod_inverse(d, f.characteristic)) % f.characteristic);
  }
  return s;
}

bool Scalar::is_zero() const {
  return field_.kind == FieldKind::rationals ? q_.is_zero() : r_ == 0;
}

bool Scalar::is_one() const {
  return field_.kind == FieldKind::rationals ? q_ == 1 : r_ == 1;
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (field_.kind == FieldKind::rationals)
    s.q_ = -q_;
  else if (r_ != 0)
    s.r_ = field_.characteristic - r_;
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error("division by zero");
  Scalar s = *this;
  if (field_.kind == FieldKind::rationals)
    s.q_ = 1 / q_;
  else
    s.r_ = mod_inverse(r_, field_.characteristic);
  return s;
}

void Scalar::require_same_field(const Scalar& a, const Scalar& b) {
  if (!(a.field_ == b.field_))
    throw Error("mixed scalar fields: " + a.field_.str() + " vs " + b.field_.str());
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  Scalar::require_same_field(a, b);
  Scalar s = a;
  if (a.field_.kind == FieldKind::rationals)
    s.q_ = a.q_ + b.q_;
  else
    s.r_ = (a.r_ + b.r_) % a.field_.characteristic;
  return s;
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar::require_same_field(a, b);
  Scalar s = a;
  if (a.field_.kind == FieldKind::rationals)
    s.q_ = a.q_ * b.q_;
  else
    s.r_ = static_cast<std::int64_t>(
        (static_cast<BigInt>(a.r_) * b.r_) % a.field_.characteristic);
  return s;
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

bool Scalar::operator==(const Scalar& other) const {
  if (!(field_ == other.field_)) return false;
  return field_.kind == FieldKind::rationals ? q_ == other.q_ : r_ == other.r_;
}

bool Scalar::operator<(const Scalar& other) const {
  require_same_field(*this, other);
  return field_.kind == FieldKind::rationals ? q_ < other.q_ : r_ < other.r_;
}

const BigRat& Scalar::rat() const {
  if (field_.kind != FieldKind::rationals) throw Error("rat() on prime-field scalar");
  return q_;
}

std::string Scalar::str() const {
  std::ostringstream os;
  if (field_.kind == FieldKind::rationals) {
    os << numerator(q_);
    if (denominator(q_) != 1) os << "/" << denominator(q_);
  } else {
    os << r_ << " mod " << field_.characteristic;
  }
  return os.str();
}

Scalar sign_scalar(int parity, const FieldSpec& f) {
  return (parity % 2 == 0) ? Scalar::one(f) : -Scalar::one(f);
}

}  // namespace cacti
