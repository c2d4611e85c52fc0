#include "llc/local_constants.hpp"

#include <cmath>

#include "llc/errors.hpp"
#include "llc/numtheory.hpp"

namespace llc {

using i64 = std::int64_t;

namespace {

int parity(int n) { return ((n % 2) + 2) % 2; }

// Residual Weil index of x -> e(u x^2 / p): legendre(u) times the value for
// u = 1, which is 1 for p = 1 mod 4 and i for p = 3 mod 4 with the sign of
// the square root fixed by the numerical Gauss sum.
RootOfUnity residual_index(i64 u, i64 p) { return finite_weil_index(u, p); }

using Mat2 = std::array<std::array<PadicElem, 2>, 2>;

Mat2 mat_mul(const Mat2& x, const Mat2& y) {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i][j] = x[i][0] * y[0][j] + x[i][1] * y[1][j];
  return r;
}

Mat2 mat_sub(const Mat2& x, const Mat2& y) {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i][j] = x[i][j] - y[i][j];
  return r;
}

Mat2 bracket(const Mat2& x, const Mat2& y) { return mat_sub(mat_mul(x, y), mat_mul(y, x)); }

Mat2 embed(const QuadExtElem& w) {
  PadicElem z = w.cfg()->zeta_elem();
  return {{{w.a(), w.b()}, {w.b() * z, w.a()}}};
}

}  // namespace

RootOfUnity AdditiveChar::operator()(const PadicElem& x) const {
  if (x.is_zero()) {
    if (x.val() >= level) return RootOfUnity::one();
    throw PrecisionExhausted("psi of an element known only modulo p^" + std::to_string(x.val()));
  }
  int k = level - x.val();
  if (k <= 0) return RootOfUnity::one();
  if (x.prec() < k) throw PrecisionExhausted("psi needs " + std::to_string(k) + " digits");
  i64 m = nt::ipow(p, k);
  return RootOfUnity(nt::mod(x.unit(), m), m);
}

int legendre(i64 u, i64 p) { return nt::legendre(u, p); }

CycloValue quadratic_gauss_sum(i64 c, i64 p) {
  CycloValue s;
  for (i64 x = 0; x < p; ++x) s += CycloValue(RootOfUnity(nt::mulmod(c, x * x, p), p));
  return s;
}

RootOfUnity finite_weil_index(i64 c, i64 p) {
  int l = legendre(c, p);
  CycloValue g = quadratic_gauss_sum(c, p);
  auto z = g.approx(static_cast<double>(p));
  double r = std::sqrt(static_cast<double>(p));
  // The four candidates i^k sqrt(p); the square of the sum is legendre(-1) p.
  RootOfUnity best;
  double err = 1e300;
  for (int k = 0; k < 4; ++k) {
    RootOfUnity cand(k, 4);
    double e = std::abs(z - cand.to_complex() * r);
    if (e < err) {
      err = e;
      best = cand;
    }
  }
  auto sq = (g * g).as_rational();
  if (!sq || *sq != Rational(legendre(-1, p) * p) || err > 1e-6)
    throw InternalMismatch("quadratic Gauss sum normalization");
  (void)l;
  return best;
}

RootOfUnity gamma_F(const PadicElem& a, const AdditiveChar& psi) {
  if (a.is_zero()) throw ZeroInput("gamma_F of zero");
  int l = psi.level_of_multiple(a);
  if (parity(l) == 0) return RootOfUnity::one();
  return residual_index(a.unit_residue(), psi.p);
}

RootOfUnity weil_index(const PadicElem& a, const AdditiveChar& psi) {
  return gamma_F(a, psi) * gamma_F(psi).inverse();
}

RootOfUnity weil_index_chain_verbatim(const PadicElem& a, const AdditiveChar& psi) {
  if (a.is_zero()) throw ZeroInput("weil index of zero");
  int la = psi.level_of_multiple(a);
  RootOfUnity num = residual_index(a.unit_residue(), psi.p).pow(la);
  RootOfUnity den = residual_index(1, psi.p).pow(psi.level);
  return num * den.inverse();
}

int hilbert(const PadicElem& a, const PadicElem& b) {
  if (a.is_zero() || b.is_zero()) throw ZeroInput("Hilbert symbol of zero");
  i64 p = a.p();
  int al = parity(a.val()), be = parity(b.val());
  int s = 1;
  if (al && be && (p % 4 == 3)) s = -s;
  if (be && legendre(a.unit_residue(), p) < 0) s = -s;
  if (al && legendre(b.unit_residue(), p) < 0) s = -s;
  return s;
}

int hasse_invariant(const DiagQuadForm& Q) {
  int h = 1;
  for (std::size_t i = 0; i < Q.coeffs.size(); ++i)
    for (std::size_t j = i + 1; j < Q.coeffs.size(); ++j) h *= hilbert(Q.coeffs[i], Q.coeffs[j]);
  return h;
}

RootOfUnity form_weil_index(const DiagQuadForm& Q, const AdditiveChar& psi) {
  if (Q.coeffs.empty()) return RootOfUnity::one();
  RootOfUnity prod;
  PadicElem det = PadicElem::from_int(psi.p, 1, Q.coeffs.front().prec() + 1);
  for (const auto& c : Q.coeffs) {
    if (c.is_zero()) throw DegenerateForm("zero coefficient in a diagonal form");
    prod *= gamma_F(c, psi);
    det = det * c;
  }
  RootOfUnity other = RootOfUnity::from_sign(hasse_invariant(Q)) *
                      gamma_F(psi).pow(static_cast<i64>(Q.coeffs.size())) * weil_index(det, psi);
  if (other != prod) throw InternalMismatch("Weil index of a form: product vs Hasse invariant");
  return prod;
}

RootOfUnity langlands_constant(const FieldConfig& cfg, const AdditiveChar& psi) {
  PadicElem z = cfg.zeta_elem();
  DiagQuadForm nf{{cfg.F(1), -z}};
  RootOfUnity via_form = form_weil_index(nf, psi);
  RootOfUnity via_symbol = weil_index(z, psi) * RootOfUnity::from_sign(hilbert(cfg.F(-1), z));
  if (via_form != via_symbol) throw InternalMismatch("Langlands constant: the two routes disagree");
  return via_form;
}

std::array<std::array<PadicElem, 2>, 2> gram_alpha_Y(const QuadExtElem& alpha, const QuadExtElem& Y) {
  const auto& cfg = alpha.cfg();
  PadicElem one = cfg->F(1), zero = PadicElem::zero(cfg->p);
  Mat2 A{{{one, zero}, {zero, -one}}};
  Mat2 B{{{zero, one}, {-cfg->zeta_elem(), zero}}};
  Mat2 al = embed(alpha), y = embed(Y);
  std::array<Mat2, 2> basis{A, B};
  PadicElem half = PadicElem::from_rational(cfg->p, 1, 2, cfg->precision);
  Mat2 G;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Mat2 m = mat_mul(bracket(al, basis[j]), bracket(basis[i], y));
      G[i][j] = (m[0][0] + m[1][1]) * half;
    }
  return G;
}

RootOfUnity gamma_alpha_Y_closed(const QuadExtElem& alpha, const QuadExtElem& Y, const AdditiveChar& psi) {
  if (alpha.b().is_zero() || Y.b().is_zero())
    throw DegenerateForm("gamma(alpha, Y) needs nonzero delta-coefficients");
  PadicElem z = alpha.cfg()->zeta_elem();
  return RootOfUnity::from_sign(hilbert(alpha.b(), z) * hilbert(Y.b(), z)) * weil_index(z, psi);
}

RootOfUnity gamma_alpha_Y(const QuadExtElem& alpha, const QuadExtElem& Y, const AdditiveChar& psi) {
  if (alpha.b().is_zero() || Y.b().is_zero())
    throw DegenerateForm("gamma(alpha, Y) needs nonzero delta-coefficients");
  auto G = gram_alpha_Y(alpha, Y);
  DiagQuadForm Q;
  if (G[0][1].is_zero() && G[1][0].is_zero()) {
    Q.coeffs = {G[0][0], G[1][1]};
  } else if (!G[0][0].is_zero()) {
    PadicElem det = G[0][0] * G[1][1] - G[0][1] * G[1][0];
    Q.coeffs = {G[0][0], det / G[0][0]};
  } else {
    throw InternalMismatch("Gram matrix of Q_(alpha, Y) is not diagonalizable as expected");
  }
  for (const auto& c : Q.coeffs)
    if (c.is_zero()) throw DegenerateForm("Q_(alpha, Y) is degenerate");
  RootOfUnity direct = form_weil_index(Q, psi);
  if (direct != gamma_alpha_Y_closed(alpha, Y, psi))
    throw InternalMismatch("gamma(alpha, Y): Gram-matrix route and closed form disagree");
  return direct;
}

}  // namespace llc
