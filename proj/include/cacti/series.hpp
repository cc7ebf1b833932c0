#pragma once

#include <vector>

#include "cacti/scalar.hpp"

namespace cacti {

// Polynomial truncation of a power series: coefficients of t^0 .. t^order.
class TruncatedSeries {
 public:
  TruncatedSeries(const FieldSpec& f, int order);

  static TruncatedSeries identity(const FieldSpec& f, int order);  // t

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const FieldSpec& field() const { return field_; }

  const Scalar& coeff(int k) const;
  void set_coeff(int k, const Scalar& v);

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

  // f.compose(g) = f(g(t)); requires g(0) = 0 so the truncation is exact.
  TruncatedSeries compose(const TruncatedSeries& g) const;

  bool operator==(const TruncatedSeries&) const;
  std::string str() const;

 private:
  FieldSpec field_;
  std::vector<Scalar> coeffs_;

  static void require_compatible(const TruncatedSeries& a, const TruncatedSeries& b);
};

// Exponential generating function Sum dims[n-1] t^n / n! as a truncated series
// over the rationals. dims are per-arity dimensions starting at arity 1.
TruncatedSeries egf_from_dims(const std::vector<BigInt>& dims, int order);

// Inverse of egf_from_dims; checks that n! * coeff(n) is an integer and that
// the constant term vanishes.
std::vector<BigInt> dims_from_egf(const TruncatedSeries& f);

// f_dual(-f(-t)) == t through order N, both series given by dimension lists.
bool inversion_holds(const std::vector<BigInt>& dims, const std::vector<BigInt>& dual_dims,
                     int N);

std::string dims_str(const std::vector<BigInt>& dims);

}  // namespace cacti
