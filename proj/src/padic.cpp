#include "llc/padic.hpp"

#include <algorithm>
#include <sstream>

#include "llc/errors.hpp"
#include "llc/numtheory.hpp"

namespace llc {

using nt::i64;

namespace {

// Largest k with p^k < 2^62.
int max_digits(i64 p) {
  int k = 0;
  __int128 v = 1;
  while (v * p < (static_cast<__int128>(1) << 62)) {
    v *= p;
    ++k;
  }
  return k;
}

}  // namespace

// ------------------------------------------------------------------ PadicElem

PadicElem PadicElem::zero(i64 p, int abs_prec) {
  PadicElem z;
  z.p_ = p;
  z.val_ = std::min(abs_prec, kExactZero);
  return z;
}

PadicElem PadicElem::make(i64 p, int v, i64 u, int prec) {
  if (prec <= 0) return zero(p, v);
  if (prec > max_digits(p)) throw PrecisionExhausted("precision beyond 64-bit range");
  i64 m = nt::ipow(p, prec);
  u = nt::mod(u, m);
  if (u == 0) return zero(p, v + prec);
  int t = 0;
  while (u % p == 0) {
    u /= p;
    ++t;
  }
  PadicElem r;
  r.p_ = p;
  r.zero_ = false;
  r.val_ = v + t;
  r.prec_ = prec - t;
  r.unit_ = u % nt::ipow(p, r.prec_);
  return r;
}

PadicElem PadicElem::from_int(i64 p, i64 n, int prec) {
  if (n == 0) return zero(p);
  int v = nt::valuation(n, p);
  return make(p, v, n / nt::ipow(p, v), prec);
}

PadicElem PadicElem::from_rational(i64 p, i64 num, i64 den, int prec) {
  if (den == 0) throw ZeroInput("rational with zero denominator");
  if (num == 0) return zero(p);
  int vn = nt::valuation(num, p), vd = nt::valuation(den, p);
  i64 m = nt::ipow(p, prec);
  i64 un = num / nt::ipow(p, vn), ud = den / nt::ipow(p, vd);
  return make(p, vn - vd, nt::mulmod(un, nt::invmod(nt::mod(ud, m), m), m), prec);
}

int PadicElem::abs_prec() const {
  if (zero_) return val_;
  return val_ + prec_;
}

i64 PadicElem::unit_residue() const {
  if (zero_) throw PrecisionExhausted("residue of an element indistinguishable from zero");
  return unit_ % p_;
}

i64 PadicElem::mod_pk(int k) const {
  if (k <= 0) return 0;
  if (zero_) {
    if (val_ >= k) return 0;
    throw PrecisionExhausted("element known only modulo p^" + std::to_string(val_));
  }
  if (val_ < 0) throw OutOfRange("mod_pk of a non-integral element");
  if (val_ >= k) return 0;
  if (abs_prec() < k)
    throw PrecisionExhausted("need p^" + std::to_string(k) + ", have p^" + std::to_string(abs_prec()));
  i64 m = nt::ipow(p_, k);
  return nt::mulmod(unit_, nt::ipow(p_, val_), m);
}

PadicElem PadicElem::truncated(int prec) const {
  if (zero_ || prec >= prec_) return *this;
  return make(p_, val_, unit_, prec);
}

PadicElem PadicElem::operator-() const {
  if (zero_) return *this;
  PadicElem r = *this;
  r.unit_ = nt::mod(-unit_, nt::ipow(p_, prec_));
  return r;
}

PadicElem PadicElem::operator+(const PadicElem& o) const {
  if (zero_ && o.zero_) return zero(p_, std::min(val_, o.val_));
  int abs = std::min(abs_prec(), o.abs_prec());
  if (zero_ || o.zero_) {
    const PadicElem& x = zero_ ? o : *this;
    if (abs <= x.val_) return zero(p_, abs);
    return x.truncated(abs - x.val_);
  }
  int v = std::min(val_, o.val_);
  if (abs <= v) return zero(p_, abs);
  int k = abs - v;
  i64 m = nt::ipow(p_, k);
  auto term = [&](const PadicElem& x) -> i64 {
    int s = x.val_ - v;
    if (s >= k) return 0;
    return nt::mulmod(x.unit_, nt::ipow(p_, s), m);
  };
  return make(p_, v, nt::mod(term(*this) + term(o), m), k);
}

PadicElem PadicElem::operator*(const PadicElem& o) const {
  if (zero_ || o.zero_) {
    if (val_ == kExactZero && zero_) return *this;
    if (o.val_ == kExactZero && o.zero_) return o;
    return zero(p_, std::min<long long>(kExactZero, static_cast<long long>(val_) + o.val_));
  }
  int prec = std::min(prec_, o.prec_);
  i64 m = nt::ipow(p_, prec);
  PadicElem r;
  r.p_ = p_;
  r.zero_ = false;
  r.val_ = val_ + o.val_;
  r.prec_ = prec;
  r.unit_ = nt::mulmod(unit_, o.unit_, m);
  return r;
}

PadicElem PadicElem::inverse() const {
  if (zero_) throw ZeroInput("inverse of zero");
  PadicElem r = *this;
  r.val_ = -val_;
  r.unit_ = nt::invmod(unit_, nt::ipow(p_, prec_));
  return r;
}

PadicElem PadicElem::operator/(const PadicElem& o) const { return *this * o.inverse(); }

PadicElem PadicElem::pow(i64 k) const {
  if (k < 0) return inverse().pow(-k);
  PadicElem r = from_int(p_, 1, zero_ ? max_digits(p_) : prec_);
  PadicElem b = *this;
  while (k > 0) {
    if (k & 1) r = r * b;
    b = b * b;
    k >>= 1;
  }
  return r;
}

PadicElem PadicElem::mul_int(i64 n) const { return *this * from_int(p_, n, max_digits(p_)); }

std::string PadicElem::to_string() const {
  std::ostringstream os;
  if (zero_) {
    if (val_ == kExactZero) return "0";
    os << "O(" << p_ << "^" << val_ << ")";
    return os.str();
  }
  os << unit_;
  if (val_ != 0) os << "*" << p_ << "^" << val_;
  os << " + O(" << p_ << "^" << abs_prec() << ")";
  return os.str();
}

json PadicElem::to_json() const {
  if (zero_) {
    if (val_ == kExactZero) return {{"val", nullptr}, {"unit_digits", json::array()}};
    return {{"val", nullptr}, {"abs_prec", val_}, {"unit_digits", json::array()}};
  }
  json digits = json::array();
  i64 u = unit_;
  for (int i = 0; i < prec_; ++i) {
    digits.push_back(u % p_);
    u /= p_;
  }
  return {{"val", val_}, {"unit_digits", digits}};
}

PadicElem PadicElem::from_json(i64 p, const json& j) {
  if (j.at("val").is_null()) return zero(p, j.value("abs_prec", kExactZero));
  const auto& d = j.at("unit_digits");
  i64 u = 0;
  for (std::size_t i = d.size(); i-- > 0;) u = u * p + d[i].get<i64>();
  return make(p, j.at("val").get<int>(), u, static_cast<int>(d.size()));
}

std::optional<PadicElem> sqrt_hensel(const PadicElem& x) {
  if (x.is_zero()) throw ZeroInput("square root of zero");
  if (x.val() % 2 != 0) return std::nullopt;
  i64 p = x.p();
  if (nt::legendre(x.unit(), p) != 1) return std::nullopt;
  i64 r = 1;
  while (nt::mod(r * r - x.unit(), p) != 0) ++r;
  int prec = x.prec();
  i64 m = nt::ipow(p, prec);
  // Newton iteration doubles the number of correct digits each step.
  for (int done = 1; done < prec; done *= 2) {
    i64 f = nt::mod(nt::mulmod(r, r, m) - x.unit(), m);
    r = nt::mod(r - nt::mulmod(f, nt::invmod(2 * r, m), m), m);
  }
  return PadicElem::make(p, x.val() / 2, r, prec);
}

int abs_F_sqrtq_power(const PadicElem& x) {
  if (x.is_zero()) throw ZeroInput("absolute value of zero");
  return -2 * x.val();
}

int abs_E_sqrtq_power(const QuadExtElem& w, AbsNorm n) {
  int k = abs_F_sqrtq_power(w.norm());
  return n == AbsNorm::Extending ? k / 2 : k;
}

std::pair<int, int> square_class(const PadicElem& x) {
  if (x.is_zero()) throw ZeroInput("square class of zero");
  return {((x.val() % 2) + 2) % 2, nt::legendre(x.unit(), x.p())};
}

bool is_norm(const PadicElem& x, const FieldConfig& cfg) {
  if (x.is_zero()) throw ZeroInput("is_norm of zero");
  if (x.prec() < 1) throw PrecisionExhausted("is_norm needs the leading digit");
  auto target = square_class(x);
  i64 p = cfg.p, m = p * p;
  for (i64 a = 0; a < m; ++a)
    for (i64 b = 0; b < m; ++b) {
      i64 n = a * a - cfg.zeta * b * b;
      if (n == 0) continue;
      if (square_class(PadicElem::from_int(p, n, 2)) == target) return true;
    }
  return false;
}

// ---------------------------------------------------------------- FieldConfig

std::shared_ptr<const FieldConfig> FieldConfig::make(i64 p, i64 zeta, int precision) {
  if (p < 3 || !nt::is_prime(p)) throw ConfigError("p must be an odd prime, got " + std::to_string(p));
  if (precision < 2) throw ConfigError("precision must be at least 2");
  if (precision > max_digits(p)) throw ConfigError("precision too large for 64-bit residues");
  if (zeta == 0) throw ConfigError("zeta must be nonzero");
  auto c = std::make_shared<FieldConfig>();
  c->p = p;
  c->precision = precision;
  c->zeta = zeta;
  c->v_zeta = nt::valuation(zeta, p);
  c->zeta_unit = zeta / nt::ipow(p, c->v_zeta);
  if (c->v_zeta > 1) throw ConfigError("zeta must have valuation 0 or 1");
  c->ramified = c->v_zeta == 1;
  if (!c->ramified && nt::legendre(c->zeta_unit, p) != -1)
    throw ConfigError("zeta = " + std::to_string(zeta) + " is a square in Q_" + std::to_string(p));
  return c;
}

std::string FieldConfig::label() const {
  std::ostringstream os;
  os << "p=" << p << ",zeta=" << zeta << (ramified ? " (ramified)" : " (unramified)");
  return os.str();
}

// ---------------------------------------------------------------- QuadExtElem

QuadExtElem::QuadExtElem(CfgPtr cfg, PadicElem a, PadicElem b)
    : cfg_(std::move(cfg)), a_(std::move(a)), b_(std::move(b)) {}

QuadExtElem QuadExtElem::from_ints(CfgPtr cfg, i64 a, i64 b) {
  auto A = cfg->F(a), B = cfg->F(b);
  return {std::move(cfg), A, B};
}

QuadExtElem QuadExtElem::from_F(CfgPtr cfg, const PadicElem& a) {
  auto p = cfg->p;
  return {std::move(cfg), a, PadicElem::zero(p)};
}

QuadExtElem QuadExtElem::delta(CfgPtr cfg) { return from_ints(std::move(cfg), 0, 1); }

QuadExtElem QuadExtElem::uniformizer(CfgPtr cfg) {
  if (cfg->ramified) return delta(std::move(cfg));
  auto p = cfg->p;
  return from_ints(std::move(cfg), p, 0);
}

int QuadExtElem::v_E() const {
  const int big = PadicElem::kExactZero;
  if (is_zero()) {
    if (a_.val() == big && b_.val() == big) throw ZeroInput("valuation of zero");
    throw PrecisionExhausted("element indistinguishable from zero");
  }
  int e = cfg_->e();
  int va = e * a_.val();
  int vb = e * b_.val() + (cfg_->ramified ? 1 : 0);
  if (a_.is_zero() && a_.val() != big && va <= vb)
    throw PrecisionExhausted("valuation of E element not certified");
  if (b_.is_zero() && b_.val() != big && vb <= va)
    throw PrecisionExhausted("valuation of E element not certified");
  return std::min(a_.is_zero() ? INT_MAX : va, b_.is_zero() ? INT_MAX : vb);
}

QuadExtElem QuadExtElem::operator*(const QuadExtElem& o) const {
  PadicElem z = cfg_->zeta_elem();
  return {cfg_, a_ * o.a_ + z * b_ * o.b_, a_ * o.b_ + b_ * o.a_};
}

PadicElem QuadExtElem::norm() const { return a_ * a_ - cfg_->zeta_elem() * b_ * b_; }

QuadExtElem QuadExtElem::inverse() const {
  PadicElem ni = norm().inverse();
  return {cfg_, a_ * ni, -(b_ * ni)};
}

QuadExtElem QuadExtElem::operator/(const QuadExtElem& o) const { return *this * o.inverse(); }

QuadExtElem QuadExtElem::pow(i64 k) const {
  if (k < 0) return inverse().pow(-k);
  QuadExtElem r = from_ints(cfg_, 1, 0), b = *this;
  while (k > 0) {
    if (k & 1) r = r * b;
    b = b * b;
    k >>= 1;
  }
  return r;
}

std::string QuadExtElem::to_string() const {
  return "(" + a_.to_string() + ") + (" + b_.to_string() + ")d";
}

json QuadExtElem::to_json() const { return {{"a", a_.to_json()}, {"b", b_.to_json()}}; }

QuadExtElem QuadExtElem::from_json(CfgPtr cfg, const json& j) {
  auto p = cfg->p;
  return {std::move(cfg), PadicElem::from_json(p, j.at("a")), PadicElem::from_json(p, j.at("b"))};
}

QuadExtElem ext_arith(const QuadExtElem& w1, const QuadExtElem& w2, ExtOp op) {
  switch (op) {
    case ExtOp::Add: return w1 + w2;
    case ExtOp::Mul: return w1 * w2;
    case ExtOp::Div: return w1 / w2;
    case ExtOp::Conj: return w1.conj();
    case ExtOp::Norm: return QuadExtElem::from_F(w1.cfg(), w1.norm());
    case ExtOp::Trace: return QuadExtElem::from_F(w1.cfg(), w1.trace());
  }
  return w1;
}

}  // namespace llc
