#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace cacti {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Engine errors carry a plain message; the CLI maps them to exit code 2.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

enum class FieldKind { rationals, prime_field };

struct FieldSpec {
  FieldKind kind = FieldKind::rationals;
  std::int64_t characteristic = 0;  // 0 for rationals, the prime p otherwise

  static FieldSpec rationals() { return FieldSpec{}; }
  static FieldSpec prime(std::int64_t p);
  // "q" | "f2" | "f3" | "f<p>"
  static FieldSpec parse(const std::string& tag);

  bool operator==(const FieldSpec&) const = default;
  std::string str() const;
};

// Exact field element. Rationals are kept in lowest terms with positive
// denominator (cpp_rational canonicalizes); prime-field residues live in [0, p).
class Scalar {
 public:
  Scalar() = default;  // rational zero

  static Scalar zero(const FieldSpec& f);
  static Scalar one(const FieldSpec& f);
  static Scalar of_int(std::int64_t v, const FieldSpec& f);
  static Scalar of_big(const BigInt& v, const FieldSpec& f);
  static Scalar of_fraction(const BigInt& num, const BigInt& den, const FieldSpec& f);

  const FieldSpec& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar inverse() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  bool operator==(const Scalar& other) const;
  bool operator!=(const Scalar& other) const { return !(*this == other); }

  // Total order for canonical term sorting; not meaningful arithmetically.
  bool operator<(const Scalar& other) const;

  const BigRat& rat() const;
  std::int64_t residue() const { return r_; }

  std::string str() const;

 private:
  FieldSpec field_;
  BigRat q_;           // rationals payload
  std::int64_t r_ = 0; // prime-field payload

  static void require_same_field(const Scalar& a, const Scalar& b);
};

// (-1)^k as a field element.
Scalar sign_scalar(int parity, const FieldSpec& f);

}  // namespace cacti
