#include <random>

#include "doctest.h"
#include "llc/errors.hpp"
#include "llc/numtheory.hpp"
#include "llc/torus_cover.hpp"
#include "llc/verifier.hpp"
#include "support.hpp"

using namespace llc;
using i64 = std::int64_t;

TEST_CASE("n(w) examples") {
  auto unr = FieldConfig::make(5, 2, 6), ram = FieldConfig::make(5, 5, 6);
  CHECK(depth_n(QuadExtElem::from_ints(unr, 1, 25)) == Rational(2));
  CHECK(depth_n(QuadExtElem::from_ints(unr, 5, 1)) == Rational(0));
  CHECK(depth_n(QuadExtElem::from_ints(ram, 1, 5)) == Rational(3, 2));
  CHECK(depth_n(QuadExtElem::from_ints(ram, 1, 1)) == Rational(1, 2));
  CHECK(depth_n(QuadExtElem::from_ints(ram, 5, 1)) == Rational(0));
  CHECK(depth_n(QuadExtElem::delta(ram)) == Rational(0));
  CHECK_THROWS_AS(depth_n(QuadExtElem::from_ints(unr, 3, 0)), NotRegular);
  CHECK_THROWS_AS(decompose(QuadExtElem::from_ints(unr, 5, 1)), NotPositiveDepth);
}

TEST_CASE("n(w) agrees with coset search") {
  std::mt19937_64 rng(7);
  for (i64 z : {2, 3}) {
    auto cfg = FieldConfig::make(3, z, 6);
    for (int t = 0; t < 60; ++t) {
      int va = static_cast<int>(rng() % 3), vb = va + static_cast<int>(rng() % 4) - 1;
      i64 ua = 1 + static_cast<i64>(rng() % 26), ub = 1 + static_cast<i64>(rng() % 26);
      if (ua % 3 == 0) ++ua;
      if (ub % 3 == 0) ++ub;
      QuadExtElem w(cfg, PadicElem::make(3, va, ua, 6), PadicElem::make(3, std::max(vb, 0), ub, 6));
      CHECK(depth_n(w) == depth_by_search(w, 4));
    }
  }
}

TEST_CASE("decompose writes w = c (1 + Y)") {
  auto cfg = FieldConfig::make(3, 3, 6);
  QuadExtElem w = QuadExtElem::from_ints(cfg, 2, 9);
  auto [c, Y] = decompose(w);
  CHECK((QuadExtElem::from_ints(cfg, 1, 0) + Y).scale(c).equals(w));
}

TEST_CASE("kappa is a bijection onto the cover") {
  for (i64 z : {2, 3, 6}) {
    auto cfg = FieldConfig::make(3, z, 8);
    TorusCover T(cfg, build_tau_tilde(cfg, 0));
    auto Q = UnitQuotient::make(cfg, 1);
    for (const auto& w : test::all_elements(Q)) {
      CoverElem k = T.kappa(w);
      CHECK(T.in_cover(k));
      CHECK(same_class_mod_norms(T.kappa_inv(k), w));
    }
    CHECK(hilbert(T.non_norm(), cfg->zeta_elem()) == -1);
  }
}

TEST_CASE("genuine characters need chi|F^* = aleph") {
  auto cfg = FieldConfig::make(3, 2, 8);
  for (const auto& P : enumerate_pairs(cfg, 1, false)) {
    if (restricts_to_aleph(P.chi))
      CHECK_NOTHROW(GenuineChar::make(P));
    else
      CHECK_THROWS_AS(GenuineChar::make(P), NotGenuine);
  }
}

TEST_CASE("formula outside the range is rejected") {
  auto cfg = FieldConfig::make(3, 2, 8);
  AdditiveChar psi = standard_psi(*cfg);
  for (const auto& P : enumerate_pairs(cfg, 1, true)) {
    if (P.level != 1) continue;
    GenuineChar chi = GenuineChar::make(P);
    CHECK_THROWS_AS(formula_F(chi, QuadExtElem::from_ints(cfg, 1, 9), build_tau_tilde(cfg, 0), {false, psi}),
                    OutOfRange);
    break;
  }
}

TEST_CASE("stratified samples") {
  for (i64 z : {2, 3}) {
    auto cfg = FieldConfig::make(5, z, 8);
    auto s1 = sample_points(cfg, 2, 11), s2 = sample_points(cfg, 2, 11);
    REQUIRE(s1.size() == s2.size());
    CHECK(s1.size() >= 50);
    for (std::size_t i = 0; i < s1.size(); ++i) {
      CHECK(s1[i].equals(s2[i]));
      CHECK(depth_n(s1[i]) * 2 <= Rational(2));
    }
  }
}
