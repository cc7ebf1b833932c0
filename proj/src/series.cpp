#include "cacti/series.hpp"

#include <sstream>

namespace cacti {

TruncatedSeries::TruncatedSeries(const FieldSpec& f, int order) : field_(f) {
  if (order < 0) throw Error("series order must be nonnegative");
  coeffs_.assign(order + 1, Scalar::zero(f));
}

TruncatedSeries TruncatedSeries::identity(const FieldSpec& f, int order) {
  TruncatedSeries t(f, order);
  if (order >= 1) t.set_coeff(1, Scalar::one(f));
  return t;
}

const Scalar& TruncatedSeries::coeff(int k) const {
  if (k < 0 || k > order()) throw Error("series coefficient index out of range");
  return coeffs_[k];
}

void TruncatedSeries::set_coeff(int k, const Scalar& v) {
  if (k < 0 || k > order()) throw Error("series coefficient index out of range");
  if (!(v.field() == field_)) throw Error("series coefficient from wrong field");
  coeffs_[k] = v;
}

void TruncatedSeries::require_compatible(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (!(a.field_ == b.field_)) throw Error("mixed series fields");
  if (a.order() != b.order()) throw Error("mixed series truncation orders");
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries::require_compatible(a, b);
  TruncatedSeries r = a;
  for (int k = 0; k <= a.order(); ++k) r.coeffs_[k] += b.coeffs_[k];
  return r;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries::require_compatible(a, b);
  TruncatedSeries r = a;
  for (int k = 0; k <= a.order(); ++k) r.coeffs_[k] -= b.coeffs_[k];
  return r;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries::require_compatible(a, b);
  TruncatedSeries r(a.field_, a.order());
  for (int i = 0; i <= a.order(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (int j = 0; i + j <= a.order(); ++j)
      r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return r;
}

TruncatedSeries TruncatedSeries::compose(const TruncatedSeries& g) const {
  require_compatible(*this, g);
  if (!g.coeff(0).is_zero())
    throw Error("series composition requires zero constant term");
  // Horner in g, truncated at every step.
  TruncatedSeries r(field_, order());
  for (int k = order(); k >= 0; --k) {
    r = r * g;
    r.coeffs_[0] += coeffs_[k];
  }
  return r;
}

bool TruncatedSeries::operator==(const TruncatedSeries& other) const {
  return field_ == other.field_ && coeffs_ == other.coeffs_;
}

std::string TruncatedSeries::str() const {
  std::ostringstream os;
  os << "[";
  for (int k = 0; k <= order(); ++k) {
    if (k) os << ", ";
    os << coeffs_[k].str();
  }
  os << "]";
  return os.str();
}

TruncatedSeries egf_from_dims(const std::vector<BigInt>& dims, int order) {
  FieldSpec q = FieldSpec::rationals();
  TruncatedSeries f(q, order);
  BigInt fact = 1;
  for (int n = 1; n <= order; ++n) {
    fact *= n;
    if (n - 1 < static_cast<int>(dims.size()))
      f.set_coeff(n, Scalar::of_fraction(dims[n - 1], fact, q));
  }
  return f;
}

std::vector<BigInt> dims_from_egf(const TruncatedSeries& f) {
  if (!(f.field() == FieldSpec::rationals()))
    throw Error("dimension extraction needs a rational series");
  if (!f.coeff(0).is_zero()) throw Error("series has a nonzero constant term");
  std::vector<BigInt> dims;
  BigInt fact = 1;
  for (int n = 1; n <= f.order(); ++n) {
    fact *= n;
    BigRat v = f.coeff(n).rat() * fact;
    if (denominator(v) != 1)
      throw Error("series coefficient " + f.coeff(n).str() + " at t^" + std::to_string(n) +
                  " is not of the form integer/n!");
    dims.push_back(numerator(v));
  }
  return dims;
}

bool inversion_holds(const std::vector<BigInt>& dims, const std::vector<BigInt>& dual_dims,
                     int N) {
  FieldSpec q = FieldSpec::rationals();
  TruncatedSeries f = egf_from_dims(dims, N);
  TruncatedSeries g = egf_from_dims(dual_dims, N);
  // -f(-t)
  TruncatedSeries mf(q, N);
  for (int k = 0; k <= N; ++k) {
    Scalar c = f.coeff(k);
    if (k % 2 == 0) c = -c;
    mf.set_coeff(k, c);
  }
  return g.compose(mf) == TruncatedSeries::identity(q, N);
}

std::string dims_str(const std::vector<BigInt>& dims) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (i) os << ", ";
    os << dims[i];
  }
  os << "]";
  return os.str();
}

}  // namespace cacti
