#pragma once

#include <array>
#include <vector>

#include "llc/exact_values.hpp"
#include "llc/padic.hpp"

namespace llc {

/// psi(x) = exp(2 pi i frac(x / p^level)); trivial on p^level Z_p and not on
/// p^(level-1) Z_p.
struct AdditiveChar {
  std::int64_t p = 3;
  int level = 1;

  RootOfUnity operator()(const PadicElem& x) const;
  /// The character a*psi : x -> psi(a x) has level level - v(a).
  int level_of_multiple(const PadicElem& a) const { return level - a.val(); }
};

struct DiagQuadForm {
  std::vector<PadicElem> coeffs;
};

/// Legendre symbol of u modulo p; ZeroInput when p | u.
int legendre(std::int64_t u, std::int64_t p);

/// Sum over F_p of exp(2 pi i c x^2 / p), exactly.
CycloValue quadratic_gauss_sum(std::int64_t c, std::int64_t p);

/// Normalized Gauss sum of x -> psibar(c x^2) over F_p, psibar(t) = e(t/p),
/// as a fourth root of unity.
RootOfUnity finite_weil_index(std::int64_t c, std::int64_t p);

/// gamma_F(a psi): Weil index of x -> psi(a x^2). Equal to 1 when the level
/// of a psi is even and to the residual Weil index of a psi otherwise.
RootOfUnity gamma_F(const PadicElem& a, const AdditiveChar& psi);
inline RootOfUnity gamma_F(const AdditiveChar& psi) {
  return gamma_F(PadicElem::from_int(psi.p, 1, 2), psi);
}

/// gamma_F(a, psi) = gamma_F(a psi) / gamma_F(psi).
RootOfUnity weil_index(const PadicElem& a, const AdditiveChar& psi);

/// The same ratio with the residual Weil indices raised to the full levels,
/// gamma_k(abar psibar)^{l(a psi)} / gamma_k(psibar)^{l(psi)}. Differs from
/// weil_index when q = 3 mod 4 and the levels are not both at most 1.
RootOfUnity weil_index_chain_verbatim(const PadicElem& a, const AdditiveChar& psi);

/// Tame Hilbert symbol (a, b) for odd p.
int hilbert(const PadicElem& a, const PadicElem& b);

int hasse_invariant(const DiagQuadForm& Q);

/// Weil index of psi o Q for a diagonal form, as the product of the
/// one-dimensional indices; cross-checked against h(Q) gamma(psi)^n
/// gamma(det Q, psi) (InternalMismatch on disagreement).
RootOfUnity form_weil_index(const DiagQuadForm& Q, const AdditiveChar& psi);

/// lambda_{E/F}(psi), as the Weil index of the norm form diag(1, -zeta) and
/// as gamma_F(zeta, psi) (-1, zeta); InternalMismatch when they disagree.
RootOfUnity langlands_constant(const FieldConfig& cfg, const AdditiveChar& psi);

/// Gram matrix of Q(V, W) = tr([alpha, W][V, Y]) / 2 on the complement of E
/// in gl_2 in the basis A = diag(1, -1), B = [[0, 1], [-zeta, 0]].
std::array<std::array<PadicElem, 2>, 2> gram_alpha_Y(const QuadExtElem& alpha, const QuadExtElem& Y);

/// gamma(alpha, Y): the Weil index of psi o Q_{(alpha, Y)}, from the Gram
/// matrix, checked against (x, zeta)(y, zeta) gamma_F(zeta, psi).
/// DegenerateForm when a delta-coefficient vanishes.
RootOfUnity gamma_alpha_Y(const QuadExtElem& alpha, const QuadExtElem& Y, const AdditiveChar& psi);

/// The closed form (x, zeta)(y, zeta) gamma_F(zeta, psi).
RootOfUnity gamma_alpha_Y_closed(const QuadExtElem& alpha, const QuadExtElem& Y, const AdditiveChar& psi);

}  // namespace llc
