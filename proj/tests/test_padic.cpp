#include <random>

#include "doctest.h"
#include "llc/errors.hpp"
#include "llc/numtheory.hpp"
#include "llc/padic.hpp"

using namespace llc;
using i64 = std::int64_t;

TEST_CASE("p-adic integers agree with integer arithmetic mod p^k") {
  std::mt19937_64 rng(1);
  for (i64 p : {3, 5, 7}) {
    const int prec = 5;
    const i64 m = nt::ipow(p, prec);
    for (int t = 0; t < 200; ++t) {
      i64 x = static_cast<i64>(rng() % 100000) - 50000, y = static_cast<i64>(rng() % 100000) - 50000;
      if (x == 0 || y == 0) continue;
      auto X = PadicElem::from_int(p, x, prec), Y = PadicElem::from_int(p, y, prec);
      CHECK((X + Y).equals(PadicElem::from_int(p, x + y, prec)));
      CHECK((X * Y).equals(PadicElem::from_int(p, x * y, prec)));
      CHECK(X.val() == nt::valuation(x, p));
      if (x % p != 0) CHECK(nt::mod(X.inverse().mod_pk(prec) * x, m) == 1);
    }
  }
}

TEST_CASE("rationals and negative valuations") {
  auto a = PadicElem::from_rational(3, 5, 9, 6);
  CHECK(a.val() == -2);
  CHECK((a * PadicElem::from_int(3, 9, 6)).equals(PadicElem::from_int(3, 5, 6)));
  CHECK_THROWS_AS(PadicElem::zero(3).inverse(), ZeroInput);
}

TEST_CASE("norm in E is multiplicative and conjugation is an involution") {
  std::mt19937_64 rng(2);
  for (i64 z : {2, 3, 6}) {
    auto cfg = FieldConfig::make(3, z, 6);
    for (int t = 0; t < 100; ++t) {
      auto w1 = QuadExtElem::from_ints(cfg, static_cast<i64>(rng() % 50) - 25, static_cast<i64>(rng() % 50) + 1);
      auto w2 = QuadExtElem::from_ints(cfg, static_cast<i64>(rng() % 50) - 25, static_cast<i64>(rng() % 50) + 1);
      CHECK((w1 * w2).norm().equals(w1.norm() * w2.norm()));
      CHECK(w1.conj().conj().equals(w1));
      CHECK((w1 / w2 * w2).equals(w1));
      CHECK(w1.norm().equals((w1 * w1.conj()).a()));
    }
  }
}

TEST_CASE("valuation of E") {
  auto unr = FieldConfig::make(5, 2, 6), ram = FieldConfig::make(5, 5, 6);
  CHECK(QuadExtElem::uniformizer(unr).v_E() == 1);
  CHECK(QuadExtElem::uniformizer(ram).v_E() == 1);
  CHECK(QuadExtElem::from_ints(ram, 5, 0).v_E() == 2);
  CHECK(QuadExtElem::from_ints(unr, 25, 5).v_E() == 1);
  CHECK(unr->e() == 1);
  CHECK(ram->e() == 2);
}

TEST_CASE("norm groups have index two") {
  for (i64 p : {3, 5, 7}) {
    i64 n = nt::least_nonresidue(p);
    for (i64 z : {n, p, n * p}) {
      auto cfg = FieldConfig::make(p, z, 6);
      int norms = 0;
      for (i64 c : {i64{1}, n, p, n * p}) norms += is_norm(cfg->F(c), *cfg) ? 1 : 0;
      CHECK(norms == 2);
      CHECK(is_norm(-cfg->zeta_elem(), *cfg));
    }
  }
}

TEST_CASE("two normalizations of the absolute value of E") {
  auto unr = FieldConfig::make(3, 2, 6), ram = FieldConfig::make(3, 3, 6);
  auto p_unr = QuadExtElem::uniformizer(unr), p_ram = QuadExtElem::uniformizer(ram);
  // |p|_F = 1/3 for the extending value in both cases.
  CHECK(abs_E_sqrtq_power(QuadExtElem::from_ints(unr, 3, 0), AbsNorm::Extending) == -2);
  CHECK(abs_E_sqrtq_power(QuadExtElem::from_ints(ram, 3, 0), AbsNorm::Extending) == -2);
  // q_E-normalized: unramified uniformizer 1/9, ramified uniformizer 1/3.
  CHECK(abs_E_sqrtq_power(p_unr, AbsNorm::Normalized) == -4);
  CHECK(abs_E_sqrtq_power(p_ram, AbsNorm::Normalized) == -2);
  CHECK(abs_E_sqrtq_power(p_ram, AbsNorm::Extending) == -1);
  CHECK(abs_F_sqrtq_power(PadicElem::from_rational(3, 1, 9, 6)) == 4);
}
