#include <cmath>

#include "doctest.h"
#include "llc/exact_values.hpp"

using namespace llc;

TEST_CASE("roots of unity reduce and compose") {
  RootOfUnity r(3, 6);
  CHECK(r == RootOfUnity(1, 2));
  CHECK(r == RootOfUnity::minus_one());
  CHECK(RootOfUnity::i().pow(2) == RootOfUnity::minus_one());
  CHECK(RootOfUnity::i().pow(4).is_one());
  CHECK((RootOfUnity(1, 3) * RootOfUnity(2, 3)).is_one());
  CHECK(RootOfUnity(1, 5).inverse() == RootOfUnity(4, 5));
  CHECK(RootOfUnity::from_sign(-1) == RootOfUnity::minus_one());
}

TEST_CASE("cyclotomic relations vanish") {
  for (int n : {3, 4, 5, 6, 8, 9, 12, 15, 24}) {
    CycloValue s;
    for (int k = 0; k < n; ++k) s += CycloValue(RootOfUnity(k, n));
    CHECK(s.is_zero());
  }
  CycloValue a = CycloValue(RootOfUnity(1, 3)) + CycloValue(RootOfUnity(2, 3));
  CHECK(a == CycloValue(std::int64_t{-1}));
  CHECK(CycloValue(RootOfUnity(1, 6)) - CycloValue(RootOfUnity(1, 3)) == CycloValue(std::int64_t{1}));
}

TEST_CASE("canonical form is idempotent and agrees with the numeric value") {
  CycloValue v = CycloValue(RootOfUnity(1, 12), Rational(3, 2)) + CycloValue(RootOfUnity(5, 12)) +
                 CycloValue(RootOfUnity(7, 8), Rational(-2));
  CycloValue c = v.canonical();
  CHECK(c.canonical().to_json() == c.to_json());
  auto x = v.approx(5.0), y = c.approx(5.0);
  CHECK(std::abs(x - y) < 1e-12);
}

TEST_CASE("sqrt q symbols") {
  CycloValue a = CycloValue::sqrt_q(1);
  CHECK(a * a == CycloValue::sqrt_q(2));
  CHECK(!(CycloValue::sqrt_q(1) == CycloValue(std::int64_t{1})));
  CHECK(CycloValue::sqrt_q(3).with_sqrtq_power(0) == CycloValue(std::int64_t{1}));
  CHECK(std::abs(CycloValue::sqrt_q(1).approx(7.0) - std::sqrt(7.0)) < 1e-12);
}

TEST_CASE("conjugation and products") {
  CycloValue v = CycloValue(RootOfUnity(1, 5)) + CycloValue(RootOfUnity::i(), Rational(2));
  auto n = (v * v.conj()).approx(1.0);
  CHECK(std::abs(n.imag()) < 1e-12);
  CHECK(std::abs(n - v.approx(1.0) * std::conj(v.approx(1.0))) < 1e-12);
  CHECK(CycloValue(RootOfUnity(1, 7)).as_root_of_unity() == RootOfUnity(1, 7));
  CHECK(CycloValue(Rational(3, 4)).as_rational() == Rational(3, 4));
}

TEST_CASE("opaque scales multiply by adding multiplicities") {
  OpaqueScale a, b;
  a.add(ScaleTag::DegPi, 1).add(ScaleTag::CPsiG, -1);
  b.add(ScaleTag::CPsiG, 1);
  OpaqueScale c = a * b;
  CHECK(c.multiplicity(ScaleTag::DegPi) == 1);
  CHECK(c.multiplicity(ScaleTag::CPsiG) == 0);
  CHECK(!(a == c));
}
