#pragma once

#include <climits>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include <json.hpp>

namespace llc {

using json = nlohmann::json;

/// Element of Q_p known to finite precision: p^val * unit with the unit
/// known modulo p^prec. A zero element is only known to lie in p^val Z_p;
/// val == kExactZero marks an exact zero.
class PadicElem {
 public:
  static constexpr int kExactZero = INT_MAX / 4;

  PadicElem() = default;
  /// The integer n, with relative precision prec.
  static PadicElem from_int(std::int64_t p, std::int64_t n, int prec);
  /// num/den, den != 0.
  static PadicElem from_rational(std::int64_t p, std::int64_t num, std::int64_t den, int prec);
  static PadicElem zero(std::int64_t p, int abs_prec = kExactZero);
  /// p^v * u with u a unit given modulo p^prec.
  static PadicElem make(std::int64_t p, int v, std::int64_t u, int prec);

  std::int64_t p() const { return p_; }
  bool is_zero() const { return zero_; }
  /// Valuation; for a zero element, the absolute bound.
  int val() const { return val_; }
  std::int64_t unit() const { return unit_; }
  int prec() const { return prec_; }
  /// Absolute precision val + prec (known modulo p^abs).
  int abs_prec() const;

  /// Residue of the unit part in F_p.
  std::int64_t unit_residue() const;
  /// Value modulo p^k as an integer in [0, p^k); requires val >= 0 and
  /// abs_prec >= k.
  std::int64_t mod_pk(int k) const;
  /// Same precision, reduced to at most `prec` relative digits.
  PadicElem truncated(int prec) const;

  PadicElem operator-() const;
  PadicElem operator+(const PadicElem& o) const;
  PadicElem operator-(const PadicElem& o) const { return *this + (-o); }
  PadicElem operator*(const PadicElem& o) const;
  PadicElem operator/(const PadicElem& o) const;
  PadicElem inverse() const;
  PadicElem pow(std::int64_t k) const;
  PadicElem mul_int(std::int64_t n) const;

  /// True when the difference is zero at the common precision.
  bool equals(const PadicElem& o) const { return (*this - o).is_zero(); }
  std::string to_string() const;
  json to_json() const;
  static PadicElem from_json(std::int64_t p, const json& j);

 private:
  std::int64_t p_ = 3;
  int val_ = kExactZero;
  std::int64_t unit_ = 0;
  int prec_ = 0;
  bool zero_ = true;
};

/// r with r^2 = x, or nullopt when x is not a square in Q_p.
std::optional<PadicElem> sqrt_hensel(const PadicElem& x);

/// F = Q_p, E = F(sqrt(zeta)).
struct FieldConfig {
  std::int64_t p = 3;
  int precision = 10;
  std::int64_t zeta = 2;

  int v_zeta = 0;
  std::int64_t zeta_unit = 2;  // zeta / p^v_zeta
  bool ramified = false;

  /// Validates and derives the ramification data; throws ConfigError.
  static std::shared_ptr<const FieldConfig> make(std::int64_t p, std::int64_t zeta, int precision);

  std::int64_t q() const { return p; }
  std::int64_t q_E() const { return ramified ? p : p * p; }
  int e() const { return ramified ? 2 : 1; }
  PadicElem F(std::int64_t n) const { return PadicElem::from_int(p, n, precision); }
  PadicElem zeta_elem() const { return F(zeta); }
  std::string label() const;
};

using CfgPtr = std::shared_ptr<const FieldConfig>;

/// a + b*delta in E, delta^2 = zeta.
class QuadExtElem {
 public:
  QuadExtElem() = default;
  QuadExtElem(CfgPtr cfg, PadicElem a, PadicElem b);
  static QuadExtElem from_ints(CfgPtr cfg, std::int64_t a, std::int64_t b);
  static QuadExtElem from_F(CfgPtr cfg, const PadicElem& a);
  static QuadExtElem delta(CfgPtr cfg);
  /// Uniformizer of E: p when unramified, delta when ramified.
  static QuadExtElem uniformizer(CfgPtr cfg);

  const CfgPtr& cfg() const { return cfg_; }
  const PadicElem& a() const { return a_; }
  const PadicElem& b() const { return b_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool in_F() const { return b_.is_zero(); }
  /// Normalized valuation of E (v_E(uniformizer) = 1); throws
  /// PrecisionExhausted for zero.
  int v_E() const;

  QuadExtElem operator-() const { return {cfg_, -a_, -b_}; }
  QuadExtElem operator+(const QuadExtElem& o) const { return {cfg_, a_ + o.a_, b_ + o.b_}; }
  QuadExtElem operator-(const QuadExtElem& o) const { return {cfg_, a_ - o.a_, b_ - o.b_}; }
  QuadExtElem operator*(const QuadExtElem& o) const;
  QuadExtElem operator/(const QuadExtElem& o) const;
  QuadExtElem scale(const PadicElem& c) const { return {cfg_, a_ * c, b_ * c}; }
  QuadExtElem inverse() const;
  QuadExtElem pow(std::int64_t k) const;

  QuadExtElem conj() const { return {cfg_, a_, -b_}; }
  PadicElem norm() const;
  PadicElem trace() const { return a_.mul_int(2); }

  bool equals(const QuadExtElem& o) const { return (*this - o).is_zero(); }
  std::string to_string() const;
  json to_json() const;
  static QuadExtElem from_json(CfgPtr cfg, const json& j);

 private:
  CfgPtr cfg_;
  PadicElem a_, b_;
};

enum class ExtOp { Add, Mul, Div, Conj, Norm, Trace };

/// Dispatch form of the field operations; conj/norm/trace ignore w2 and
/// return elements of F embedded as b = 0.
QuadExtElem ext_arith(const QuadExtElem& w1, const QuadExtElem& w2, ExtOp op);

/// x in N(E^*), by brute-force search over a, b mod p^2 for a norm in the
/// square class of x.
bool is_norm(const PadicElem& x, const FieldConfig& cfg);

/// Square class of x in F^*/(F^*)^2 as (v mod 2, legendre of unit residue).
std::pair<int, int> square_class(const PadicElem& x);

/// Absolute values as exponents of q^{1/2}, q = p.
/// Extending: the absolute value of E restricting to |.|_F, |w| = |N(w)|_F^{1/2}.
/// Normalized: |w|_E = q_E^{-v_E(w)} = |N(w)|_F.
enum class AbsNorm { Extending, Normalized };
int abs_F_sqrtq_power(const PadicElem& x);
int abs_E_sqrtq_power(const QuadExtElem& w, AbsNorm n);

}  // namespace llc
