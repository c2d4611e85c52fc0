#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "llc/padic.hpp"

namespace llc {

/// The finite abelian group E^* / (<varpi^M> (1 + p_E^{n+1})) in Smith
/// normal form.
///
/// Internally an element is first written in "base coordinates"
///   w = varpi^k * omega^t * prod_j g_j^{c_j},
/// with omega the Teichmueller lift of a generator of k_E^* and g_j the
/// layer generators of (1 + p_E)/(1 + p_E^{n+1}), each c_j in [0, p).
/// SNF of the relation matrix then gives invariant-factor coordinates.
class UnitQuotient {
 public:
  using Vec = std::vector<std::int64_t>;

  static std::shared_ptr<const UnitQuotient> make(CfgPtr cfg, int level, int M = 4);

  const CfgPtr& cfg() const { return cfg_; }
  int level() const { return level_; }
  int uniformizer_order() const { return M_; }

  /// Invariant factors d_i > 1.
  const Vec& orders() const { return orders_; }
  std::int64_t group_order() const;
  std::size_t rank() const { return orders_.size(); }
  /// Generators f_i with dlog(f_i) = e_i.
  const std::vector<QuadExtElem>& generators() const { return gens_; }

  /// Coordinates of w, reduced modulo the invariant factors.
  Vec dlog(const QuadExtElem& w) const;
  /// Base coordinates (k, t, c_1, ...) before SNF; k = v_E(w) unreduced.
  Vec base_coords(const QuadExtElem& w) const;
  /// Number of base coordinates.
  std::size_t base_size() const { return base_names_.size(); }
  /// Base-coordinate vector converted to invariant-factor coordinates.
  Vec from_base(const Vec& x) const;

  /// Base-coordinate index of the first generator of layer j (1 <= j <= n),
  /// and how many generators that layer has.
  std::size_t layer_begin(int j) const;
  std::size_t layer_size() const { return cfg_->ramified ? 1 : 2; }
  /// Base generator as an element of E (index into base coordinates).
  QuadExtElem base_generator(std::size_t i) const;

  /// Ring modulus exponent used for the unit reductions.
  int ring_digits() const { return K_; }
  /// Discrete log in k_E^* of a residue (a, b) (b ignored when ramified),
  /// relative to the fixed generator.
  std::int64_t residue_log(std::int64_t a, std::int64_t b) const;

 private:
  UnitQuotient() = default;
  struct R {
    std::int64_t a = 0, b = 0;
  };
  R rmul(R x, R y) const;
  R rinv(R x) const;
  R rpow(R x, std::int64_t k) const;
  R to_ring(const QuadExtElem& u) const;
  Vec unit_coords(R u) const;

  CfgPtr cfg_;
  int level_ = 0;
  int M_ = 4;
  int K_ = 1;
  std::int64_t pK_ = 1;
  std::int64_t zeta_mod_ = 0;
  R omega_;
  std::vector<std::int64_t> log_table_;  // residue index -> log
  std::vector<std::string> base_names_;
  std::vector<R> layer_gens_;
  Vec orders_;
  std::vector<Vec> V_;                  // base -> SNF columns (kept rows)
  std::vector<std::size_t> kept_;       // SNF indices with d_i > 1
  std::vector<QuadExtElem> gens_;
};

using QuotientPtr = std::shared_ptr<const UnitQuotient>;

/// Smith normal form of an integer matrix A (rows x cols): returns D's
/// diagonal and unimodular U, V with U A V = D.
struct SNFResult {
  std::vector<std::int64_t> diag;
  std::vector<std::vector<std::int64_t>> U, V, Vinv;
};
SNFResult smith_normal_form(std::vector<std::vector<std::int64_t>> A);

}  // namespace llc
