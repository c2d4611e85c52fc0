#pragma once

#include <cstdint>
#include <vector>

#include "llc/characters.hpp"
#include "llc/exact_values.hpp"

namespace llc {

/// n(w) for regular w in E^*: positive when w lies in F^*(1 + p_E), as a
/// rational (half-integers occur for ramified E); 0 otherwise.
Rational depth_n(const QuadExtElem& w);

/// w = c (1 + Y) with c in F^* and Y = (b/a) delta; NotPositiveDepth when
/// n(w) = 0.
std::pair<PadicElem, QuadExtElem> decompose(const QuadExtElem& w);

/// Element (z, lambda) of the tau-rho cover of E^*/F^*; z is stored as a
/// representative of its class.
struct CoverElem {
  QuadExtElem z;
  RootOfUnity lambda;
};

/// The double cover of E^*/F^* defined by tau~, with kappa : E^*/N(E^*) ->
/// cover.
class TorusCover {
 public:
  TorusCover(CfgPtr cfg, MultChar tau);

  const MultChar& tau() const { return tau_; }
  /// A fixed element of F^* that is not a norm from E.
  const PadicElem& non_norm() const { return x0_; }

  CoverElem kappa(const QuadExtElem& w) const;
  /// Representative w of the N(E^*)-class with kappa([w]) = x.
  QuadExtElem kappa_inv(const CoverElem& x) const;
  CoverElem mul(const CoverElem& x, const CoverElem& y) const;
  /// s = 1 (false) or the nontrivial Weyl element (true).
  CoverElem weyl_act(bool s, const CoverElem& x) const;
  bool in_cover(const CoverElem& x) const;
  bool equal(const CoverElem& x, const CoverElem& y) const;

 private:
  CfgPtr cfg_;
  MultChar tau_;
  PadicElem x0_;
};

/// w1 / w2 in F^*.
bool same_class_mod_F(const QuadExtElem& w1, const QuadExtElem& w2);
/// w1 / w2 in N(E^*).
bool same_class_mod_norms(const QuadExtElem& w1, const QuadExtElem& w2);

/// Regular genuine character of the cover attached to a PGL admissible pair.
class GenuineChar {
 public:
  /// NotGenuine when chi|_{F^*} != aleph, NotRegular when chi = chi o conj.
  static GenuineChar make(const AdmissiblePair& pair);
  const AdmissiblePair& pair() const { return pair_; }
  RootOfUnity operator()(const QuadExtElem& w) const { return pair_.chi(w); }

 private:
  AdmissiblePair pair_;
};

/// Options for formula_F: the positive root and the additive character.
struct FormulaOptions {
  bool flip_positive_root = false;
  AdditiveChar psi;
};

/// Reduced value of F(chi~) at w for 0 <= n(w) <= r/2 with r the level;
/// OutOfRange otherwise. For level 0 the depth-zero epsilon (with its
/// leading minus sign) is used.
ReducedKernel formula_F(const GenuineChar& chi, const QuadExtElem& w, const MultChar& tau,
                        const FormulaOptions& opt);

/// Depth-zero formula without the leading minus sign, kept for comparison.
ReducedKernel formula_F_depth_zero_unsigned(const GenuineChar& chi, const QuadExtElem& w, const MultChar& tau,
                                            const AdditiveChar& psi);

/// Reduced supercuspidal character of pi_phi for positive-level phi at w with
/// 0 <= n(w) <= r/2, r = level(phi).
ReducedKernel debacker_kernel(const MultChar& phi, const QuadExtElem& w, const AdditiveChar& psi);

/// The same positive-depth kernel through the closed form
/// (x, zeta) gamma(zeta, psi) [phi(w) nu(w) + (-1, zeta) phi(wbar) nu(wbar)]
/// / nu((w - wbar)/2 delta), for nu of 2-power order extending aleph.
ReducedKernel debacker_kernel_nu_route(const MultChar& phi, const MultChar& nu, const QuadExtElem& w,
                                       const AdditiveChar& psi);

/// |D(w)|^{-1/2} as a power of q^{1/2}, with D(w) = (w - wbar)^2 / N(w) in F
/// measured with |.|_F.
int discriminant_sqrtq_power(const QuadExtElem& w);

struct SampleVerdict {
  QuadExtElem w;
  Rational depth;
  ReducedKernel lhs, rhs;
  bool equal = false;
};

struct CompareReport {
  std::vector<SampleVerdict> samples;
  bool all_equal = true;
  std::size_t mismatches = 0;
  json to_json(bool include_values = true) const;
};

/// formula_F(chi~) against debacker_kernel(chi * twist) on the sample.
CompareReport compare_kernels(const AdmissiblePair& pair, const MultChar& twist, const std::vector<QuadExtElem>& sample,
                              const MultChar& tau, const AdditiveChar& psi);

/// Stratified representatives of E^*/F^* with 0 <= n(w) <= r/2, each
/// rescaled by a seeded element of F^*. Strata: w = delta, and 1 + p^k v
/// delta for each k in range with v over units mod p^3 (at most
/// per_stratum of them, chosen by the seed).
std::vector<QuadExtElem> sample_points(const CfgPtr& cfg, int r, std::uint64_t seed, std::size_t per_stratum = 30,
                                       bool include_positive = true);

}  // namespace llc
