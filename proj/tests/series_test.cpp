#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cacti/series.hpp"

using namespace cacti;

namespace {
const FieldSpec Q = FieldSpec::rationals();

std::vector<BigInt> dims(std::initializer_list<long long> v) {
  return std::vector<BigInt>(v.begin(), v.end());
}
}  // namespace

TEST_CASE("egf round trip") {
  auto d = dims({1, 2, 9, 64, 625});
  TruncatedSeries f = egf_from_dims(d, 5);
  CHECK(dims_from_egf(f) == d);
  CHECK(f.coeff(3) == Scalar::of_fraction(3, 2, Q));
  CHECK(f.coeff(4) == Scalar::of_fraction(8, 3, Q));
}

TEST_CASE("composition identities") {
  TruncatedSeries t = TruncatedSeries::identity(Q, 6);
  TruncatedSeries f = egf_from_dims(dims({1, 3, 20, 210, 3024}), 6);
  CHECK(f.compose(t) == f);
  CHECK(t.compose(f) == f);

  // associativity on a skew triple
  TruncatedSeries g = egf_from_dims(dims({1, 1, 2, 5, 14, 42}), 6);
  TruncatedSeries h = egf_from_dims(dims({1, 0, 3, 0, 7, 1}), 6);
  CHECK(f.compose(g).compose(h) == f.compose(g.compose(h)));

  TruncatedSeries c(Q, 6);
  c.set_coeff(0, Scalar::one(Q));
  CHECK_THROWS_AS(f.compose(c), Error);
}

TEST_CASE("marked-forest composite") {
  // one marked factor of associative-memory products over trees: the
  // composite of dims (n) with dims (n^{n-1}) starts 1, 4, 24, 200.
  TruncatedSeries perm = egf_from_dims(dims({1, 2, 3, 4, 5}), 5);
  TruncatedSeries nap = egf_from_dims(dims({1, 2, 9, 64, 625}), 5);
  auto composite = dims_from_egf(perm.compose(nap));
  CHECK(composite[0] == 1);
  CHECK(composite[1] == 4);
  CHECK(composite[2] == 24);
  CHECK(composite[3] == 200);
}

TEST_CASE("lie over leibniz composite") {
  auto lie = dims({1, 1, 2, 6, 24, 120});    // (n-1)!
  auto leib = dims({1, 2, 6, 24, 120, 720}); // n!
  TruncatedSeries f = egf_from_dims(lie, 6).compose(egf_from_dims(leib, 6));
  // (n-1)! (2^n - 1)
  CHECK(dims_from_egf(f) == dims({1, 3, 14, 90, 744, 7560}));
}

TEST_CASE("inversion identities") {
  CHECK(inversion_holds(dims({1, 2, 9, 64, 625, 7776}),  // n^{n-1}
                        dims({1, 2, 3, 4, 5, 6}),        // n
                        6));
  CHECK(inversion_holds(dims({1, 2, 6, 24, 120, 720}),
                        dims({1, 2, 6, 24, 120, 720}), 6));
  CHECK_FALSE(inversion_holds(dims({1, 2, 9, 64, 625, 7776}),
                              dims({1, 2, 3, 4, 5, 7}), 6));
}

TEST_CASE("prime field reduction of a rational series") {
  FieldSpec f3 = FieldSpec::prime(3);
  TruncatedSeries a(f3, 4), b(f3, 4);
  a.set_coeff(1, Scalar::one(f3));
  a.set_coeff(2, Scalar::of_int(2, f3));
  b.set_coeff(1, Scalar::of_int(2, f3));
  TruncatedSeries prod = a * b;
  CHECK(prod.coeff(2) == Scalar::of_int(2, f3));
  CHECK(prod.coeff(3) == Scalar::of_int(1, f3));  // 4 mod 3
}
