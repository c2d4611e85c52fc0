#include "llc/exact_values.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "llc/errors.hpp"
#include "llc/numtheory.hpp"

namespace llc {

namespace nt {

i64 invmod(i64 a, i64 m) {
  i64 g = m, x = 0, x1 = 1, a1 = mod(a, m);
  while (a1 != 0) {
    i64 q = g / a1;
    std::tie(g, a1) = std::make_pair(a1, g - q * a1);
    std::tie(x, x1) = std::make_pair(x1, x - q * x1);
  }
  if (g != 1) throw std::invalid_argument("invmod: not invertible");
  return mod(x, m);
}

std::vector<std::pair<i64, int>> factor(i64 n) {
  std::vector<std::pair<i64, int>> out;
  for (i64 d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

int valuation(i64 n, i64 p) {
  if (n == 0) throw std::invalid_argument("valuation of 0");
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

int legendre(i64 u, i64 p) {
  u = mod(u, p);
  if (u == 0) throw ZeroInput("legendre symbol of a residue divisible by p");
  return powmod(u, (p - 1) / 2, p) == 1 ? 1 : -1;
}

i64 least_nonresidue(i64 p) {
  for (i64 u = 2; u < p; ++u)
    if (legendre(u, p) == -1) return u;
  throw std::invalid_argument("no nonresidue");
}

i64 primitive_root(i64 p) {
  auto fs = factor(p - 1);
  for (i64 g = 2; g < p; ++g) {
    bool ok = true;
    for (auto [q, e] : fs)
      if (powmod(g, (p - 1) / q, p) == 1) ok = false;
    if (ok) return g;
  }
  return 1;
}

}  // namespace nt

// ---------------------------------------------------------------- RootOfUnity

RootOfUnity::RootOfUnity(std::int64_t num, std::int64_t den) {
  if (den <= 0) throw std::invalid_argument("RootOfUnity: denominator must be positive");
  num = nt::mod(num, den);
  std::int64_t g = std::gcd(num, den);
  if (g == 0) g = den;
  num_ = num / g;
  den_ = den / g;
  if (num_ == 0) den_ = 1;
}

RootOfUnity RootOfUnity::from_sign(int s) {
  if (s == 1) return one();
  if (s == -1) return minus_one();
  throw std::invalid_argument("from_sign expects +1 or -1");
}

RootOfUnity RootOfUnity::operator*(const RootOfUnity& o) const {
  std::int64_t d = nt::lcm(den_, o.den_);
  return {num_ * (d / den_) + o.num_ * (d / o.den_), d};
}

RootOfUnity RootOfUnity::pow(std::int64_t k) const {
  return {static_cast<std::int64_t>(
              (static_cast<__int128>(num_) * nt::mod(k, den_)) % den_),
          den_};
}

int RootOfUnity::sign() const {
  if (den_ == 1) return 1;
  if (den_ == 2) return -1;
  throw std::logic_error("sign() of a non-real root of unity " + to_string());
}

std::complex<double> RootOfUnity::to_complex() const {
  double t = 2.0 * std::numbers::pi * static_cast<double>(num_) / static_cast<double>(den_);
  return {std::cos(t), std::sin(t)};
}

std::string RootOfUnity::to_string() const {
  if (den_ == 1) return "1";
  if (den_ == 2) return "-1";
  if (den_ == 4) return num_ == 1 ? "i" : "-i";
  std::ostringstream os;
  os << "z" << den_ << "^" << num_;
  return os.str();
}

// ----------------------------------------------------------------- CycloValue

CycloValue::CycloValue(Rational c) {
  if (c.numerator() != 0) terms_[RootOfUnity::one()] = c;
}

CycloValue::CycloValue(RootOfUnity r, Rational c, int sqrtq_power) : sqrtq_power_(sqrtq_power) {
  if (c.numerator() != 0) terms_[r] = c;
}

CycloValue CycloValue::sqrt_q(int k) { return CycloValue(RootOfUnity::one(), 1, k); }

CycloValue CycloValue::with_sqrtq_power(int k) const {
  CycloValue r = *this;
  r.sqrtq_power_ = k;
  return r;
}

void CycloValue::drop_zeros() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second.numerator() == 0)
      it = terms_.erase(it);
    else
      ++it;
  }
}

namespace {

// One reduction pass at level N: every exponent is rewritten into the basis
// whose p-components avoid the top digit p-1, for each p^k || N.
std::map<std::int64_t, Rational> reduce_at_level(std::map<std::int64_t, Rational> t, std::int64_t N) {
  for (auto [p, k] : nt::factor(N)) {
    std::int64_t pk = nt::ipow(p, k);
    std::int64_t pk1 = pk / p;
    std::int64_t m = N / pk;
    // u = 1 mod p^k, 0 mod m
    std::int64_t u = nt::mod(m * nt::invmod(m % pk, pk), N);
    std::map<std::int64_t, Rational> out;
    for (auto& [e, c] : t) {
      std::int64_t a = e % pk;
      if (a / pk1 != p - 1) {
        out[e] += c;
        continue;
      }
      std::int64_t base = a - (p - 1) * pk1;
      for (std::int64_t i = 0; i + 1 < p; ++i) {
        std::int64_t delta = base + i * pk1 - a;
        std::int64_t e2 = nt::mod(e + static_cast<std::int64_t>(
                                          (static_cast<__int128>(delta) * u) % N),
                                  N);
        out[e2] -= c;
      }
    }
    t.clear();
    for (auto& [e, c] : out)
      if (c.numerator() != 0) t[e] = c;
  }
  return t;
}

}  // namespace

CycloValue CycloValue::canonical() const {
  CycloValue cur = *this;
  cur.drop_zeros();
  for (;;) {
    std::int64_t N = 1;
    for (auto& [r, c] : cur.terms_) N = nt::lcm(N, r.den());
    std::map<std::int64_t, Rational> t;
    for (auto& [r, c] : cur.terms_) t[r.num() * (N / r.den())] += c;
    t = reduce_at_level(std::move(t), N);
    CycloValue next;
    next.sqrtq_power_ = sqrtq_power_;
    for (auto& [e, c] : t) next.terms_[RootOfUnity(e, N)] += c;
    next.drop_zeros();
    std::int64_t N2 = 1;
    for (auto& [r, c] : next.terms_) N2 = nt::lcm(N2, r.den());
    if (N2 == N) return next;
    cur = std::move(next);
  }
}

bool CycloValue::is_zero() const {
  if (terms_.empty()) return true;
  return canonical().terms_.empty();
}

CycloValue CycloValue::conj() const {
  CycloValue r;
  r.sqrtq_power_ = sqrtq_power_;
  for (auto& [z, c] : terms_) r.terms_[z.inverse()] += c;
  return r;
}

CycloValue CycloValue::operator-() const {
  CycloValue r = *this;
  for (auto& [z, c] : r.terms_) c = -c;
  return r;
}

CycloValue& CycloValue::operator+=(const CycloValue& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  if (sqrtq_power_ != o.sqrtq_power_) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    throw MixedScale("adding values with q-powers " + std::to_string(sqrtq_power_) + "/2 and " +
                     std::to_string(o.sqrtq_power_) + "/2");
  }
  for (auto& [z, c] : o.terms_) terms_[z] += c;
  drop_zeros();
  return *this;
}

CycloValue& CycloValue::operator*=(const CycloValue& o) {
  CycloValue r;
  r.sqrtq_power_ = sqrtq_power_ + o.sqrtq_power_;
  for (auto& [z1, c1] : terms_)
    for (auto& [z2, c2] : o.terms_) r.terms_[z1 * z2] += c1 * c2;
  r.drop_zeros();
  return *this = std::move(r);
}

std::optional<RootOfUnity> CycloValue::as_root_of_unity() const {
  if (sqrtq_power_ != 0) return std::nullopt;
  CycloValue c = canonical();
  if (c.terms_.size() == 1 && c.terms_.begin()->second == Rational(1)) return c.terms_.begin()->first;
  // -z is a root of unity too
  if (c.terms_.size() == 1 && c.terms_.begin()->second == Rational(-1))
    return c.terms_.begin()->first * RootOfUnity::minus_one();
  // The basis may express a root as a sum, e.g. z3^2 = -1 - z3; compare
  // against candidates of the same level.
  std::int64_t N = 1;
  for (auto& [r, co] : c.terms_) N = nt::lcm(N, r.den());
  std::int64_t N2 = nt::lcm(N, 2);
  for (std::int64_t k = 0; k < N2; ++k) {
    CycloValue cand(RootOfUnity(k, N2));
    if ((cand - c).is_zero()) return RootOfUnity(k, N2);
  }
  return std::nullopt;
}

std::optional<Rational> CycloValue::as_rational() const {
  if (sqrtq_power_ != 0) return std::nullopt;
  CycloValue c = canonical();
  if (c.terms_.empty()) return Rational(0);
  if (c.terms_.size() == 1 && c.terms_.begin()->first.is_one()) return c.terms_.begin()->second;
  return std::nullopt;
}

std::complex<double> CycloValue::approx(double q) const {
  std::complex<double> s = 0;
  for (auto& [z, c] : terms_)
    s += z.to_complex() * (static_cast<double>(c.numerator()) / static_cast<double>(c.denominator()));
  return s * std::pow(q, sqrtq_power_ / 2.0);
}

std::string CycloValue::to_string() const {
  CycloValue c = canonical();
  if (c.terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [z, co] : c.terms_) {
    if (!first) os << " + ";
    first = false;
    bool unit = co == Rational(1);
    if (!unit) {
      os << co.numerator();
      if (co.denominator() != 1) os << "/" << co.denominator();
    }
    if (!z.is_one()) os << (unit ? "" : "*") << z.to_string();
    else if (unit) os << "1";
  }
  if (c.sqrtq_power_ != 0) os << " [q^(" << c.sqrtq_power_ << "/2)]";
  return os.str();
}

json CycloValue::to_json() const {
  CycloValue c = canonical();
  json terms = json::array();
  for (auto& [z, co] : c.terms_)
    terms.push_back({{"num", co.numerator()},
                     {"den", co.denominator()},
                     {"exp_num", z.num()},
                     {"exp_den", z.den()}});
  return {{"terms", terms}, {"sqrtq_power", c.sqrtq_power_}};
}

CycloValue CycloValue::from_json(const json& j) {
  CycloValue v;
  v.sqrtq_power_ = j.at("sqrtq_power").get<int>();
  for (auto& t : j.at("terms")) {
    Rational c(t.at("num").get<std::int64_t>(), t.at("den").get<std::int64_t>());
    v.terms_[RootOfUnity(t.at("exp_num").get<std::int64_t>(), t.at("exp_den").get<std::int64_t>())] += c;
  }
  v.drop_zeros();
  return v;
}

CycloValue operator+(CycloValue a, const CycloValue& b) { return a += b; }
CycloValue operator-(CycloValue a, const CycloValue& b) { return a -= b; }
CycloValue operator*(CycloValue a, const CycloValue& b) { return a *= b; }
CycloValue operator*(const CycloValue& a, const RootOfUnity& r) { return a * CycloValue(r); }

bool operator==(const CycloValue& a, const CycloValue& b) {
  if (a.sqrtq_power() != b.sqrtq_power()) return a.is_zero() && b.is_zero();
  return (a - b).is_zero();
}

CycloValue cyclo_add(const CycloValue& a, const CycloValue& b) { return (a + b).canonical(); }
CycloValue cyclo_mul(const CycloValue& a, const CycloValue& b) { return (a * b).canonical(); }
bool cyclo_eq(const CycloValue& a, const CycloValue& b) { return a == b; }

// ---------------------------------------------------------------- OpaqueScale

const char* scale_tag_name(ScaleTag t) {
  switch (t) {
    case ScaleTag::DegPi: return "deg_pi";
    case ScaleTag::DegSigma: return "deg_sigma";
    case ScaleTag::CPsiG: return "c_psi_g";
    case ScaleTag::CPsiGPrime: return "c_psi_g_prime";
    case ScaleTag::EtaInvSqrt: return "abs_eta_alpha_inv_sqrt";
  }
  return "?";
}

OpaqueScale& OpaqueScale::add(ScaleTag t, int mult) {
  int& m = tags_[t];
  m += mult;
  if (m == 0) tags_.erase(t);
  return *this;
}

int OpaqueScale::multiplicity(ScaleTag t) const {
  auto it = tags_.find(t);
  return it == tags_.end() ? 0 : it->second;
}

OpaqueScale OpaqueScale::operator*(const OpaqueScale& o) const {
  OpaqueScale r = *this;
  for (auto [t, m] : o.tags_) r.add(t, m);
  return r;
}

std::string OpaqueScale::to_string() const {
  if (tags_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (auto [t, m] : tags_) {
    if (!first) os << "*";
    first = false;
    os << scale_tag_name(t);
    if (m != 1) os << "^" << m;
  }
  return os.str();
}

json OpaqueScale::to_json() const {
  json j = json::object();
  for (auto [t, m] : tags_) j[scale_tag_name(t)] = m;
  return j;
}

std::string ReducedKernel::to_string() const {
  return "(" + value.to_string() + ") * " + scale.to_string();
}

json ReducedKernel::to_json() const { return {{"value", value.to_json()}, {"scale", scale.to_json()}}; }

}  // namespace llc
