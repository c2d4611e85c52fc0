#include <map>
#include <set>

#include "doctest.h"
#include "llc/characters.hpp"
#include "llc/errors.hpp"
#include "llc/numtheory.hpp"
#include "support.hpp"

using namespace llc;
using i64 = std::int64_t;

TEST_CASE("unit quotient: dlog inverts the generator product") {
  for (i64 z : {2, 3, 6}) {
    auto cfg = FieldConfig::make(3, z, 8);
    auto Q = UnitQuotient::make(cfg, 1);
    auto elems = test::all_elements(Q);
    CHECK(static_cast<i64>(elems.size()) == Q->group_order());
    std::set<std::vector<i64>> seen;
    for (const auto& w : elems) seen.insert(Q->dlog(w));
    CHECK(seen.size() == elems.size());
    // E^*/(1 + p_E^2) with the uniformizer taken mod its 4th power.
    i64 units = cfg->ramified ? 2 * 3 : 8 * 9;
    CHECK(Q->group_order() == 4 * units);
  }
}

TEST_CASE("characters are homomorphisms") {
  auto cfg = FieldConfig::make(5, 2, 8);
  auto Q = UnitQuotient::make(cfg, 1);
  auto elems = test::all_elements(Q);
  int n = 0;
  for_each_char(Q, [&](const MultChar& chi) {
    if (n++ % 97 != 0) return;
    for (std::size_t i = 0; i < elems.size(); i += 37)
      for (std::size_t j = 0; j < elems.size(); j += 53)
        CHECK(chi(elems[i] * elems[j]) == chi(elems[i]) * chi(elems[j]));
  });
}

TEST_CASE("factoring through the norm matches the brute-force kernel of w -> w/wbar") {
  for (i64 z : {2, 3}) {
    auto cfg = FieldConfig::make(3, z, 8);
    auto Q = UnitQuotient::make(cfg, 1);
    auto elems = test::all_elements(Q);
    for_each_char(Q, [&](const MultChar& chi) {
      bool brute = true;
      for (const auto& w : elems)
        if (!chi(w / w.conj()).is_one()) brute = false;
      CHECK(factors_through_norm(chi) == brute);
    });
  }
}

TEST_CASE("solve_alpha represents chi on the upper layers") {
  for (i64 p : {3, 5})
    for (i64 z : {nt::least_nonresidue(p), p}) {
      auto cfg = FieldConfig::make(p, z, 8);
      AdditiveChar psi = standard_psi(*cfg);
      int checked = 0;
      for (const auto& P : enumerate_pairs(cfg, 2, true)) {
        if (P.level < 1) continue;
        int n = P.level, j = (n + 2) / 2;
        QuadExtElem alpha = solve_alpha(P.chi, psi);
        CHECK(alpha.v_E() == -n);
        // x = a + b delta with v_E(x) >= j, over residues of a and b.
        int va = cfg->ramified ? (j + 1) / 2 : j, vb = cfg->ramified ? j / 2 : j;
        for (i64 s = 0; s < p * p; ++s)
          for (i64 t = 0; t < p * p; ++t) {
            PadicElem a = s == 0 ? PadicElem::zero(p) : PadicElem::make(p, va, s, cfg->precision);
            PadicElem b = t == 0 ? PadicElem::zero(p) : PadicElem::make(p, vb, t, cfg->precision);
            QuadExtElem x(cfg, a, b);
            QuadExtElem one = QuadExtElem::from_ints(cfg, 1, 0);
            CHECK(P.chi(one + x) == psi((alpha * x).trace()));
            ++checked;
          }
      }
      CHECK(checked > 0);
    }
}

TEST_CASE("level-0 PGL pairs for the unramified extension") {
  for (i64 p : {3, 5, 7}) {
    auto cfg = FieldConfig::make(p, nt::least_nonresidue(p), 6);
    auto pairs = enumerate_pairs(cfg, 0, true);
    std::set<int> classes;
    for (const auto& P : pairs) {
      CHECK(P.level == 0);
      CHECK(restricts_to_aleph(P.chi));
      classes.insert(P.galois_class);
    }
    CHECK(static_cast<i64>(classes.size()) == (p - 1) / 2);
    CHECK(static_cast<i64>(pairs.size()) == p - 1);
  }
}

TEST_CASE("no level-0 admissible pairs for ramified extensions") {
  auto cfg = FieldConfig::make(5, 5, 6);
  CHECK(enumerate_pairs(cfg, 0, false).empty());
}

TEST_CASE("Galois conjugation pairs up characters") {
  auto cfg = FieldConfig::make(3, 2, 8);
  for (const auto& P : enumerate_pairs(cfg, 1, true)) {
    MultChar c = P.chi.galois_conj();
    CHECK(!(c == P.chi));
    CHECK(c.galois_conj() == P.chi);
  }
}

TEST_CASE("character JSON round trip") {
  auto cfg = FieldConfig::make(5, 10, 8);
  auto pairs = enumerate_pairs(cfg, 1, true);
  REQUIRE(!pairs.empty());
  const auto& chi = pairs.front().chi;
  CHECK(MultChar::from_json(chi.quotient(), chi.to_json()) == chi);
}

TEST_CASE("mu is quadratic on units in the unramified case") {
  auto cfg = FieldConfig::make(5, 2, 8);
  AdditiveChar psi = standard_psi(*cfg);
  for (const auto& P : enumerate_pairs(cfg, 1, true)) {
    if (P.level == 0) continue;
    MultChar mu = build_mu(P, psi);
    CHECK(mu(QuadExtElem::uniformizer(cfg)) == RootOfUnity::minus_one());
    CHECK(mu(QuadExtElem::from_ints(cfg, 2, 1)).is_one());
  }
}

TEST_CASE("make_pair rejects Galois-invariant characters") {
  auto cfg = FieldConfig::make(3, 2, 8);
  auto Q = UnitQuotient::make(cfg, 1);
  CHECK_THROWS_AS(make_pair(MultChar::trivial(Q), standard_psi(*cfg)), NotRegular);
}

TEST_CASE("gamma_root") {
  auto cfg = FieldConfig::make(5, 5, 8);
  auto d = QuadExtElem::delta(cfg);
  CHECK(gamma_root(d, d) == 1);
  CHECK(gamma_root(d.pow(3).scale(cfg->F(2)), d) == 2);
  for (i64 a = 1; a < 5; ++a)
    for (i64 b = 1; b < 5; ++b) {
      auto x = QuadExtElem::from_ints(cfg, a, 1).scale(cfg->F(5)), y = QuadExtElem::from_ints(cfg, b, 3);
      CHECK(gamma_root(x * y, d) == nt::mod(gamma_root(x, d) * gamma_root(y, d), 5));
    }
}

TEST_CASE("extensions of aleph") {
  for (i64 z : {2, 3, 6}) {
    auto cfg = FieldConfig::make(3, z, 8);
    auto t0 = build_tau_tilde(cfg, 0), t1 = build_tau_tilde(cfg, 1);
    CHECK(!(t0 == t1));
    for (i64 c : {1, 2, 3, 6, -1, 9, 10})
      for (const auto& t : {t0, t1}) CHECK(t(QuadExtElem::from_ints(cfg, c, 0)) == aleph(*cfg, cfg->F(c)));
  }
}

TEST_CASE("2-power extensions of aleph are trivial on 1 + p_E") {
  for (i64 z : {2, 5, 10}) {
    auto cfg = FieldConfig::make(5, z, 8);
    auto Q = UnitQuotient::make(cfg, 1);
    int count = 0;
    for (const auto& nu : aleph_extensions(cfg)) {
      i64 o = 1;
      for (const auto& r : nu.values_on_generators()) o = nt::lcm(o, r.den());
      if ((o & (o - 1)) != 0) continue;
      ++count;
      for (i64 a = 0; a < 5; ++a)
        for (i64 b = 0; b < 5; ++b) {
          QuadExtElem x(cfg, a == 0 ? PadicElem::zero(5) : PadicElem::make(5, 1, a, 8),
                        b == 0 ? PadicElem::zero(5) : PadicElem::make(5, cfg->ramified ? 0 : 1, b, 8));
          CHECK(nu(QuadExtElem::from_ints(cfg, 1, 0) + x).is_one());
        }
    }
    CHECK(count > 0);
  }
}

TEST_CASE("alpha of a minimal pair is a minimal element") {
  for (i64 z : {2, 3}) {
    auto cfg = FieldConfig::make(3, z, 8);
    for (const auto& P : enumerate_pairs(cfg, 3, true)) {
      if (P.level == 0 || !P.minimal) continue;
      // The delta-part carries the valuation, so no element of F is within p_E^{-n+1}.
      QuadExtElem bd(cfg, PadicElem::zero(3), P.alpha->b());
      CHECK(bd.v_E() == -P.level);
      if (!P.alpha->a().is_zero()) CHECK(QuadExtElem::from_F(cfg, P.alpha->a()).v_E() > -P.level);
    }
  }
}

TEST_CASE("ramified mu(delta) = (x_pi, zeta) gamma(zeta, psi) up to level 3") {
  for (i64 p : {3, 5})
    for (i64 z : {p, p * nt::least_nonresidue(p)}) {
      auto cfg = FieldConfig::make(p, z, 8);
      AdditiveChar psi = standard_psi(*cfg);
      int seen3 = 0;
      for (const auto& P : enumerate_pairs(cfg, 3, true)) {
        if (!P.minimal) continue;
        CHECK(P.level % 2 == 1);
        MultChar mu = build_mu(P, psi);
        CHECK(mu(QuadExtElem::delta(cfg)) == aleph(*cfg, *P.x_pi) * weil_index(cfg->zeta_elem(), psi));
        if (P.level == 3) ++seen3;
      }
      CHECK(seen3 > 0);
    }
}

TEST_CASE("mu for non-minimal pairs") {
  for (i64 z : {2, 3}) {
    auto cfg = FieldConfig::make(3, z, 8);
    AdditiveChar psi = standard_psi(*cfg);
    int seen = 0;
    for (const auto& P : enumerate_pairs(cfg, 2, false)) {
      if (P.minimal || P.level == 0) continue;
      ++seen;
      MultChar mu = build_mu(P, psi);
      for (i64 c : {1, 2, 3, 6, 4, 10}) CHECK(mu(QuadExtElem::from_ints(cfg, c, 0)) == aleph(*cfg, cfg->F(c)));
      CHECK(mu(QuadExtElem::from_ints(cfg, 1, 3)).is_one());
    }
    CHECK(seen > 0);
  }
}
