#pragma once

#include <boost/rational.hpp>

#include <complex>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include <json.hpp>

namespace llc {

using Rational = boost::rational<std::int64_t>;
using json = nlohmann::json;

/// e^{2 pi i num/den}, stored with 0 <= num < den and gcd(num, den) = 1.
class RootOfUnity {
 public:
  RootOfUnity() = default;
  RootOfUnity(std::int64_t num, std::int64_t den);

  static RootOfUnity one() { return {}; }
  static RootOfUnity minus_one() { return {1, 2}; }
  static RootOfUnity i() { return {1, 4}; }
  /// +1 or -1 from an integer sign.
  static RootOfUnity from_sign(int s);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  std::int64_t order() const { return den_; }

  RootOfUnity operator*(const RootOfUnity& o) const;
  RootOfUnity& operator*=(const RootOfUnity& o) { return *this = *this * o; }
  RootOfUnity inverse() const { return {-num_, den_}; }
  RootOfUnity pow(std::int64_t k) const;

  bool is_one() const { return num_ == 0; }
  bool is_real() const { return den_ <= 2; }
  /// +1 or -1; throws std::logic_error when the root is not real.
  int sign() const;

  std::complex<double> to_complex() const;
  std::string to_string() const;

  auto operator<=>(const RootOfUnity&) const = default;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Finite Q-linear combination of roots of unity times q^{sqrtq_power/2},
/// with q^{1/2} a formal symbol.
class CycloValue {
 public:
  using Terms = std::map<RootOfUnity, Rational>;

  CycloValue() = default;
  explicit CycloValue(Rational c);
  explicit CycloValue(std::int64_t c) : CycloValue(Rational(c)) {}
  CycloValue(RootOfUnity r, Rational c = 1, int sqrtq_power = 0);

  /// The formal q^{k/2}.
  static CycloValue sqrt_q(int k);

  const Terms& terms() const { return terms_; }
  int sqrtq_power() const { return sqrtq_power_; }
  CycloValue with_sqrtq_power(int k) const;

  /// Exact zero test via reduction in the cyclotomic basis.
  bool is_zero() const;
  /// Representation reduced to the cyclotomic basis at its own level.
  /// Idempotent.
  CycloValue canonical() const;
  /// Complex conjugate (q^{1/2} is real).
  CycloValue conj() const;

  CycloValue operator-() const;
  CycloValue& operator+=(const CycloValue& o);
  CycloValue& operator-=(const CycloValue& o) { return *this += -o; }
  CycloValue& operator*=(const CycloValue& o);

  /// When the value is a single root of unity with coefficient 1 and no
  /// q-power, that root.
  std::optional<RootOfUnity> as_root_of_unity() const;
  /// When the value is rational with no q-power, that rational.
  std::optional<Rational> as_rational() const;

  /// Floating approximation for debugging; q is the value of the symbol.
  std::complex<double> approx(double q) const;
  std::string to_string() const;

  json to_json() const;
  static CycloValue from_json(const json& j);

 private:
  void drop_zeros();
  Terms terms_;
  int sqrtq_power_ = 0;
};

CycloValue operator+(CycloValue a, const CycloValue& b);
CycloValue operator-(CycloValue a, const CycloValue& b);
CycloValue operator*(CycloValue a, const CycloValue& b);
CycloValue operator*(const CycloValue& a, const RootOfUnity& r);
/// Exact equality: a - b reduces to zero. Values carrying different
/// q-powers are equal only when both are zero.
bool operator==(const CycloValue& a, const CycloValue& b);

CycloValue cyclo_add(const CycloValue& a, const CycloValue& b);
CycloValue cyclo_mul(const CycloValue& a, const CycloValue& b);
bool cyclo_eq(const CycloValue& a, const CycloValue& b);

/// Positive-real normalisation symbols that are tracked but never evaluated.
enum class ScaleTag { DegPi, DegSigma, CPsiG, CPsiGPrime, EtaInvSqrt };

const char* scale_tag_name(ScaleTag t);

class OpaqueScale {
 public:
  OpaqueScale() = default;
  OpaqueScale& add(ScaleTag t, int mult);
  int multiplicity(ScaleTag t) const;
  OpaqueScale operator*(const OpaqueScale& o) const;
  bool operator==(const OpaqueScale& o) const { return tags_ == o.tags_; }
  std::string to_string() const;
  json to_json() const;

 private:
  std::map<ScaleTag, int> tags_;
};

/// A character-formula value modulo an opaque positive-real scale.
struct ReducedKernel {
  CycloValue value;
  OpaqueScale scale;

  bool operator==(const ReducedKernel& o) const {
    return scale == o.scale && value == o.value;
  }
  std::string to_string() const;
  json to_json() const;
};

}  // namespace llc
