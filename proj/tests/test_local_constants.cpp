#include <cmath>
#include <complex>
#include <numbers>
#include <set>

#include "doctest.h"
#include "llc/errors.hpp"
#include "llc/local_constants.hpp"
#include "llc/numtheory.hpp"

using namespace llc;
using i64 = std::int64_t;
using cd = std::complex<double>;

namespace {

cd e(double x) { return std::polar(1.0, 2 * std::numbers::pi * x); }

cd root(const RootOfUnity& r) { return e(static_cast<double>(r.num()) / static_cast<double>(r.den())); }

// Normalized sum over x mod p^l of e(u x^2 / p^l). Substituting x -> p x
// shifts l by 2, so nonpositive l is lifted by an even amount first.
cd gauss_oracle(i64 u, i64 p, int l) {
  while (l <= 0) l += 2;
  i64 m = nt::ipow(p, l);
  u = nt::mod(u, m);
  cd s = 0;
  for (i64 x = 0; x < m; ++x) s += e(static_cast<double>(nt::mulmod(u, nt::mulmod(x, x, m), m)) / static_cast<double>(m));
  return s / std::abs(s);
}

// Square-class image of N(E^*) by brute force over small a + b delta.
std::set<std::pair<int, int>> norm_classes(const FieldConfig& cfg) {
  std::set<std::pair<int, int>> out;
  for (i64 a = -12; a <= 12; ++a)
    for (i64 b = -12; b <= 12; ++b) {
      i64 n = a * a - cfg.zeta * b * b;
      if (n == 0) continue;
      out.insert(square_class(cfg.F(n)));
    }
  return out;
}

}  // namespace

TEST_CASE("quadratic Gauss sums agree with direct summation") {
  for (i64 p : {3, 5, 7, 11, 13})
    for (i64 c = 1; c < p; ++c) {
      cd direct = 0;
      for (i64 x = 0; x < p; ++x) direct += e(static_cast<double>(c * x * x % p) / static_cast<double>(p));
      CHECK(std::abs(quadratic_gauss_sum(c, p).approx(static_cast<double>(p)) - direct) < 1e-9);
      CHECK(std::abs(root(finite_weil_index(c, p)) - direct / std::abs(direct)) < 1e-9);
    }
}

TEST_CASE("gamma_F(a psi) matches normalized Gauss sums over Z/p^l") {
  for (i64 p : {3, 5, 7})
    for (int level = 0; level <= 2; ++level) {
      AdditiveChar psi{p, level};
      for (int v = -3; v <= 3; ++v)
        for (i64 u = 1; u < p * p; ++u) {
          if (u % p == 0) continue;
          auto a = PadicElem::make(p, v, u, 6);
          int l = level - v;
          CHECK(std::abs(root(gamma_F(a, psi)) - gauss_oracle(u, p, l)) < 1e-9);
        }
    }
}

TEST_CASE("additive character levels") {
  AdditiveChar psi{5, 1};
  CHECK(psi(PadicElem::from_int(5, 5, 6)).is_one());
  CHECK(!psi(PadicElem::from_int(5, 1, 6)).is_one());
  CHECK(psi(PadicElem::from_int(5, 1, 6)) == RootOfUnity(1, 5));
  CHECK(psi.level_of_multiple(PadicElem::from_rational(5, 1, 25, 6)) == 3);
}

TEST_CASE("Hilbert symbol agrees with the brute-force norm group") {
  for (i64 p : {3, 5, 7}) {
    i64 n = nt::least_nonresidue(p);
    for (i64 z : {n, p, n * p}) {
      auto cfg = FieldConfig::make(p, z, 6);
      auto N = norm_classes(*cfg);
      CHECK(N.size() == 2);
      for (i64 c : {i64{1}, n, p, n * p, i64{-1}, -p, 2 * p * p, 3 * p})
        CHECK((hilbert(cfg->F(c), cfg->zeta_elem()) == 1) == (N.count(square_class(cfg->F(c))) == 1));
    }
  }
}

TEST_CASE("Langlands constant examples") {
  auto unr = FieldConfig::make(3, 2, 6);
  CHECK(langlands_constant(*unr, AdditiveChar{3, 1}) == RootOfUnity::minus_one());
  auto ram = FieldConfig::make(3, 3, 6);
  CHECK(langlands_constant(*ram, AdditiveChar{3, 1}) == RootOfUnity::i());
  for (i64 p : {3, 5})
    for (i64 z : {nt::least_nonresidue(p), p, p * nt::least_nonresidue(p)}) {
      auto cfg = FieldConfig::make(p, z, 6);
      for (int level = 0; level <= 2; ++level) {
        AdditiveChar psi{p, level};
        // Weil index of psi o N as the product of two one-dimensional Gauss sums.
        cd oracle = gauss_oracle(1, p, level) * gauss_oracle(-cfg->zeta_unit, p, level - cfg->v_zeta);
        CHECK(std::abs(root(langlands_constant(*cfg, psi)) - oracle) < 1e-9);
      }
    }
}

TEST_CASE("Gram matrix at alpha = Y = delta") {
  for (i64 z : {2, 3, 6}) {
    auto cfg = FieldConfig::make(3, z, 6);
    auto d = QuadExtElem::delta(cfg);
    auto G = gram_alpha_Y(d, d);
    CHECK(G[0][0].equals(cfg->F(4 * z)));
    CHECK(G[1][1].equals(cfg->F(-4 * z * z)));
    CHECK(G[0][1].is_zero());
    CHECK(G[1][0].is_zero());
  }
}

TEST_CASE("gamma(alpha, Y) needs nonzero delta-coefficients") {
  auto cfg = FieldConfig::make(5, 2, 6);
  AdditiveChar psi{5, 1};
  CHECK_THROWS_AS(gamma_alpha_Y(QuadExtElem::from_ints(cfg, 1, 0), QuadExtElem::delta(cfg), psi), DegenerateForm);
}

TEST_CASE("legendre rejects multiples of p") { CHECK_THROWS_AS(legendre(10, 5), ZeroInput); }
