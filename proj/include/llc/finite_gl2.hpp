#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include "llc/characters.hpp"
#include "llc/exact_values.hpp"

namespace llc {

/// x = a + b dbar in F_{q^2} = F_q(dbar), dbar^2 = zbar.
struct Fq2 {
  std::int64_t a = 0, b = 0;
  auto operator<=>(const Fq2&) const = default;
};

/// Arithmetic in F_q(dbar) for prime q.
struct Fq2Field {
  std::int64_t q = 3, zbar = 2;
  Fq2 mul(Fq2 x, Fq2 y) const;
  Fq2 pow(Fq2 x, std::int64_t k) const;
  /// x^q.
  Fq2 frob(Fq2 x) const;
  bool in_Fq(Fq2 x) const { return x.b == 0; }
  /// A generator of F_{q^2}^*.
  Fq2 generator() const;
};

/// Character of F_{q^2}^* with theta(gen) = e(k / (q^2 - 1)).
class FiniteTorusChar {
 public:
  FiniteTorusChar(Fq2Field F, Fq2 gen, std::int64_t k);
  const Fq2Field& field() const { return F_; }
  std::int64_t exponent() const { return k_; }
  Fq2 generator() const { return gen_; }
  RootOfUnity operator()(Fq2 x) const;
  /// theta o Frobenius.
  FiniteTorusChar frob() const;
  bool regular() const;

 private:
  Fq2Field F_;
  Fq2 gen_;
  std::int64_t k_ = 0;
  std::shared_ptr<const std::vector<std::int64_t>> log_;
};

/// GL(2, F_q) for an odd prime q, by brute force.
class FiniteGL2 {
 public:
  struct Mat {
    std::int64_t a = 1, b = 0, c = 0, d = 1;
  };
  enum class ClassType { Central, NonSemisimple, Split, Elliptic };
  struct ConjClass {
    Mat rep;
    std::int64_t size = 0;
    std::int64_t centralizer = 0;
    ClassType type = ClassType::Central;
    std::int64_t z = 0;     // central / non-semisimple eigenvalue
    std::int64_t x = 0, y = 0;  // split eigenvalues
    Fq2 lambda;              // elliptic eigenvalue
  };
  using ClassFunction = std::vector<CycloValue>;

  /// Classes by orbit enumeration; zbar a nonsquare mod q.
  static std::shared_ptr<const FiniteGL2> make(std::int64_t q, std::int64_t zbar);

  std::int64_t q() const { return F_.q; }
  const Fq2Field& field() const { return F_; }
  std::int64_t order() const { return static_cast<std::int64_t>(elements_.size()); }
  const std::vector<ConjClass>& classes() const { return classes_; }
  std::size_t class_of(const Mat& g) const;
  /// The elliptic class with eigenvalue lambda (or its conjugate).
  std::size_t elliptic_class(Fq2 lambda) const;

  /// (1/|G|) sum_g f(g) conj(h(g)).
  CycloValue inner(const ClassFunction& f, const ClassFunction& h) const;

  /// x -> e(k log_g(x) / (q - 1)) composed with det.
  ClassFunction det_char(std::int64_t k) const;
  /// Ind_B^G (mu_{k1} x mu_{k2}) by the induced-character sum over G.
  ClassFunction induce_borel(std::int64_t k1, std::int64_t k2) const;
  /// Ind_B(mu_k, mu_k) - mu_k o det.
  ClassFunction steinberg(std::int64_t k) const;
  /// The cuspidal character attached to a regular theta.
  ClassFunction cuspidal_oracle(const FiniteTorusChar& theta) const;
  /// R_{T, theta}(s) = theta(lambda) + theta(lambda^q) on an elliptic class.
  CycloValue dl_restriction(const FiniteTorusChar& theta, std::size_t cls) const;

  /// All irreducible characters: det characters, Steinberg twists,
  /// principal series, cuspidals (one per Frobenius orbit).
  std::vector<std::pair<std::string, ClassFunction>> character_table() const;

  /// Character of F_q^* as e(k log / (q - 1)).
  RootOfUnity fq_char(std::int64_t k, std::int64_t x) const;

 private:
  FiniteGL2() = default;
  Fq2Field F_;
  std::int64_t g_ = 2;  // primitive root
  std::vector<std::int64_t> log_;
  std::vector<Mat> elements_;
  std::vector<ConjClass> classes_;
  std::map<std::tuple<std::int64_t, std::int64_t, bool>, std::size_t> index_;
};

/// Reduced depth-zero character of pi_phi, phi = pair.chi * twist, at w in
/// F^* A: phi(c) chi_sigma(wbar0) with scale deg(pi)/deg(sigma).
/// WrongRange when w lies in F^*(1 + p_E); ConfigError for ramified E.
ReducedKernel depth_zero_theta(const AdmissiblePair& pair, const MultChar& twist, const QuadExtElem& w);

/// theta on F_{q^2}^* induced by phi on o_E^* (phi of level 0).
FiniteTorusChar residual_theta(const MultChar& phi);

}  // namespace llc
