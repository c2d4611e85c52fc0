#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "llc/exact_values.hpp"
#include "llc/local_constants.hpp"
#include "llc/padic.hpp"
#include "llc/unit_quotient.hpp"

namespace llc {

/// Finite-order character of E^* factoring through a UnitQuotient, stored
/// as exponents a_i with chi(f_i) = e(a_i / d_i).
class MultChar {
 public:
  using Vec = UnitQuotient::Vec;

  MultChar() = default;
  MultChar(QuotientPtr Q, Vec exps);
  static MultChar trivial(QuotientPtr Q);
  /// The character agreeing with f on the generators; UnresolvableClass
  /// when f is not a character of the quotient.
  static MultChar from_function(QuotientPtr Q, const std::function<RootOfUnity(const QuadExtElem&)>& f);

  const QuotientPtr& quotient() const { return Q_; }
  const CfgPtr& cfg() const { return Q_->cfg(); }
  const Vec& exponents() const { return exps_; }
  std::vector<RootOfUnity> values_on_generators() const;

  RootOfUnity operator()(const QuadExtElem& w) const;
  RootOfUnity on_coords(const Vec& y) const;
  /// Value on a base generator (uniformizer, Teichmueller generator, layers).
  RootOfUnity on_base(std::size_t i) const;

  /// Least n >= 0 with chi trivial on 1 + p_E^{n+1}.
  int level() const;

  MultChar operator*(const MultChar& o) const;
  MultChar inverse() const;
  /// chi o conj.
  MultChar galois_conj() const;

  bool operator==(const MultChar& o) const { return exps_ == o.exps_; }
  auto operator<=>(const MultChar& o) const { return exps_ <=> o.exps_; }

  json to_json() const;
  /// Reads {"generator_values": [[num, den], ...]} against Q.
  static MultChar from_json(QuotientPtr Q, const json& j);

 private:
  QuotientPtr Q_;
  Vec exps_;
};

/// The additive character of the given level for cfg's p.
inline AdditiveChar standard_psi(const FieldConfig& cfg, int level = 1) { return {cfg.p, level}; }

/// aleph_{E/F}(x) = (x, zeta).
RootOfUnity aleph(const FieldConfig& cfg, const PadicElem& x);

/// Elements of F^* whose classes generate the image of F^* in any unit
/// quotient: p, a primitive root, 1 + p.
std::vector<PadicElem> f_star_generators(const FieldConfig& cfg);

bool restricts_to_aleph(const MultChar& chi);

/// chi = chi o conj on E^* (no level) or on 1 + p_E^n (n >= 1; n = 0 means
/// o_E^*).
bool factors_through_norm(const MultChar& chi, std::optional<int> subgroup_level = std::nullopt);

bool is_admissible(const MultChar& chi);
bool is_minimal(const MultChar& chi);

/// eta o N for a character eta of F^*.
MultChar norm_lift(QuotientPtr Q, const std::function<RootOfUnity(const PadicElem&)>& eta);

/// Quadratic characters of F^*: unramified, (., p)-type on units, product.
enum class QuadraticF { Unramified, Residue, Product };
RootOfUnity quadratic_char_F(QuadraticF kind, const PadicElem& x);

/// alpha with chi(1 + x) = psi(Tr(alpha x)) for x in p_E^{ceil((n+1)/2)}.
QuadExtElem solve_alpha(const MultChar& chi, const AdditiveChar& psi);

/// Residue of the root of unity Gamma with beta varpi^{-v_E(beta)} = Gamma
/// mod (1 + p_E); E ramified.
std::int64_t gamma_root(const QuadExtElem& beta, const QuadExtElem& varpi);

struct AdmissiblePair {
  CfgPtr cfg;
  MultChar chi;
  int level = 0;
  bool minimal = false;
  std::optional<QuadExtElem> alpha;
  std::optional<PadicElem> x_pi;
  int galois_class = -1;

  json to_json() const;
};

/// Validates admissibility (NotRegular otherwise) and fills alpha / x_pi.
AdmissiblePair make_pair(const MultChar& chi, const AdditiveChar& psi);

/// The twisting character mu_chi.
MultChar build_mu(const AdmissiblePair& pair, const AdditiveChar& psi);

/// Extensions of aleph from F^* to E^* on the level-0 quotient, in a fixed
/// order; choice selects among them.
MultChar build_tau_tilde(const CfgPtr& cfg, int choice = 0);
std::vector<MultChar> aleph_extensions(const CfgPtr& cfg);

/// All characters of the level-n quotient (M = 4) that are admissible, with
/// chi|_{F^*} = aleph when pgl_only. Galois-conjugate characters share a
/// galois_class index.
std::vector<AdmissiblePair> enumerate_pairs(const CfgPtr& cfg, int max_level, bool pgl_only,
                                            int psi_level = 1);

/// Every character of Q in lexicographic exponent order.
void for_each_char(const QuotientPtr& Q, const std::function<void(const MultChar&)>& f);

}  // namespace llc
