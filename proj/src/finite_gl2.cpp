#include "llc/finite_gl2.hpp"

#include <set>

#include "llc/errors.hpp"
#include "llc/numtheory.hpp"
#include "llc/torus_cover.hpp"

namespace llc {

using i64 = std::int64_t;

// ------------------------------------------------------------------ F_q^2

Fq2 Fq2Field::mul(Fq2 x, Fq2 y) const {
  return {nt::mod(x.a * y.a + x.b * y.b % q * zbar, q), nt::mod(x.a * y.b + x.b * y.a, q)};
}

Fq2 Fq2Field::pow(Fq2 x, i64 k) const {
  Fq2 r{1, 0};
  while (k > 0) {
    if (k & 1) r = mul(r, x);
    x = mul(x, x);
    k >>= 1;
  }
  return r;
}

Fq2 Fq2Field::frob(Fq2 x) const { return {x.a, nt::mod(-x.b, q)}; }

Fq2 Fq2Field::generator() const {
  const i64 n = q * q - 1;
  auto fac = nt::factor(n);
  for (i64 b = 1; b < q; ++b)
    for (i64 a = 0; a < q; ++a) {
      Fq2 x{a, b};
      bool ok = true;
      for (auto [l, e] : fac)
        if (pow(x, n / l) == Fq2{1, 0}) ok = false;
      if (ok) return x;
    }
  throw InternalMismatch("no generator of F_{q^2}^*");
}

FiniteTorusChar::FiniteTorusChar(Fq2Field F, Fq2 gen, i64 k) : F_(F), gen_(gen) {
  const i64 n = F_.q * F_.q - 1;
  k_ = nt::mod(k, n);
  auto log = std::make_shared<std::vector<i64>>(static_cast<std::size_t>(F_.q * F_.q), -1);
  Fq2 x{1, 0};
  for (i64 j = 0; j < n; ++j) {
    (*log)[static_cast<std::size_t>(x.a + F_.q * x.b)] = j;
    x = F_.mul(x, gen_);
  }
  if (!(x == Fq2{1, 0})) throw InternalMismatch("torus character generator has the wrong order");
  for (i64 i = 1; i < F_.q * F_.q; ++i)
    if ((*log)[static_cast<std::size_t>(i)] < 0) throw ConfigError("torus character needs a generator of F_{q^2}^*");
  log_ = std::move(log);
}

RootOfUnity FiniteTorusChar::operator()(Fq2 x) const {
  i64 l = (*log_)[static_cast<std::size_t>(nt::mod(x.a, F_.q) + F_.q * nt::mod(x.b, F_.q))];
  if (l < 0) throw ZeroInput("torus character at zero");
  const i64 n = F_.q * F_.q - 1;
  return RootOfUnity(nt::mulmod(k_, l, n), n);
}

FiniteTorusChar FiniteTorusChar::frob() const { return {F_, gen_, k_ * F_.q}; }

bool FiniteTorusChar::regular() const { return nt::mod(k_ * F_.q - k_, F_.q * F_.q - 1) != 0; }

// ------------------------------------------------------------------ GL(2)

namespace {

using Mat = FiniteGL2::Mat;

Mat mmul(const Mat& x, const Mat& y, i64 q) {
  return {nt::mod(x.a * y.a + x.b * y.c, q), nt::mod(x.a * y.b + x.b * y.d, q), nt::mod(x.c * y.a + x.d * y.c, q),
          nt::mod(x.c * y.b + x.d * y.d, q)};
}

i64 mdet(const Mat& x, i64 q) { return nt::mod(x.a * x.d - x.b * x.c, q); }

Mat minv(const Mat& x, i64 q) {
  i64 di = nt::invmod(mdet(x, q), q);
  return {nt::mod(x.d * di, q), nt::mod(-x.b * di, q), nt::mod(-x.c * di, q), nt::mod(x.a * di, q)};
}

i64 mkey(const Mat& x, i64 q) { return ((x.a * q + x.b) * q + x.c) * q + x.d; }

i64 sqrt_mod(i64 x, i64 q) {
  for (i64 s = 0; s < q; ++s)
    if (s * s % q == nt::mod(x, q)) return s;
  return -1;
}

}  // namespace

std::shared_ptr<const FiniteGL2> FiniteGL2::make(i64 q, i64 zbar) {
  if (q < 3 || q % 2 == 0 || !nt::is_prime(q)) throw ConfigError("finite GL(2) needs an odd prime q");
  if (q > 49) throw ConfigError("q beyond desk scale");
  if (nt::legendre(zbar, q) != -1) throw ConfigError("zbar must be a nonsquare mod q");
  std::shared_ptr<FiniteGL2> G(new FiniteGL2());
  G->F_ = {q, nt::mod(zbar, q)};
  G->g_ = nt::primitive_root(q);
  G->log_.assign(static_cast<std::size_t>(q), -1);
  for (i64 j = 0, x = 1; j < q - 1; ++j, x = x * G->g_ % q) G->log_[static_cast<std::size_t>(x)] = j;

  for (i64 a = 0; a < q; ++a)
    for (i64 b = 0; b < q; ++b)
      for (i64 c = 0; c < q; ++c)
        for (i64 d = 0; d < q; ++d) {
          Mat m{a, b, c, d};
          if (mdet(m, q) != 0) G->elements_.push_back(m);
        }

  // Orbits under conjugation.
  std::vector<char> seen(static_cast<std::size_t>(q * q * q * q), 0);
  const i64 inv2 = nt::invmod(2, q);
  for (const auto& g : G->elements_) {
    if (seen[static_cast<std::size_t>(mkey(g, q))]) continue;
    std::set<i64> orbit;
    for (const auto& x : G->elements_) orbit.insert(mkey(mmul(mmul(x, g, q), minv(x, q), q), q));
    for (i64 k : orbit) seen[static_cast<std::size_t>(k)] = 1;

    ConjClass C;
    C.rep = g;
    C.size = static_cast<i64>(orbit.size());
    C.centralizer = G->order() / C.size;
    i64 tr = nt::mod(g.a + g.d, q), det = mdet(g, q);
    bool scalar = g.b == 0 && g.c == 0 && g.a == g.d;
    i64 disc = nt::mod(tr * tr - 4 * det, q);
    if (scalar) {
      C.type = ClassType::Central;
      C.z = g.a;
    } else if (disc == 0) {
      C.type = ClassType::NonSemisimple;
      C.z = nt::mulmod(tr, inv2, q);
    } else if (nt::legendre(disc, q) == 1) {
      C.type = ClassType::Split;
      i64 s = sqrt_mod(disc, q);
      C.x = nt::mulmod(tr + s, inv2, q);
      C.y = nt::mulmod(tr - s, inv2, q);
    } else {
      C.type = ClassType::Elliptic;
      i64 s = sqrt_mod(nt::mulmod(disc, nt::invmod(G->F_.zbar, q), q), q);
      C.lambda = {nt::mulmod(tr, inv2, q), nt::mulmod(s, inv2, q)};
    }
    auto key = std::make_tuple(tr, det, scalar);
    if (G->index_.count(key)) throw InternalMismatch("two classes share trace, determinant and scalarity");
    G->index_[key] = G->classes_.size();
    G->classes_.push_back(C);
  }

  i64 total = 0;
  for (const auto& C : G->classes_) total += C.size;
  if (total != (q * q - 1) * (q * q - q)) throw InternalMismatch("class sizes do not sum to |G|");
  if (static_cast<i64>(G->classes_.size()) != q * q - 1) throw InternalMismatch("class count is not q^2 - 1");
  return G;
}

std::size_t FiniteGL2::class_of(const Mat& g) const {
  const i64 q = F_.q;
  Mat m{nt::mod(g.a, q), nt::mod(g.b, q), nt::mod(g.c, q), nt::mod(g.d, q)};
  bool scalar = m.b == 0 && m.c == 0 && m.a == m.d;
  auto it = index_.find(std::make_tuple(nt::mod(m.a + m.d, q), mdet(m, q), scalar));
  if (it == index_.end()) throw ZeroInput("singular matrix");
  return it->second;
}

std::size_t FiniteGL2::elliptic_class(Fq2 lambda) const {
  if (lambda.b % F_.q == 0) throw NotElliptic("eigenvalue lies in F_q");
  std::size_t c = class_of({lambda.a, lambda.b, nt::mulmod(lambda.b, F_.zbar, F_.q), lambda.a});
  if (classes_[c].type != ClassType::Elliptic) throw InternalMismatch("embedded torus element is not elliptic");
  return c;
}

CycloValue FiniteGL2::inner(const ClassFunction& f, const ClassFunction& h) const {
  CycloValue s;
  for (std::size_t i = 0; i < classes_.size(); ++i)
    s += f[i] * h[i].conj() * CycloValue(Rational(classes_[i].size));
  return s * CycloValue(Rational(1, order()));
}

RootOfUnity FiniteGL2::fq_char(i64 k, i64 x) const {
  i64 l = log_[static_cast<std::size_t>(nt::mod(x, F_.q))];
  if (l < 0) throw ZeroInput("character of F_q^* at zero");
  return RootOfUnity(nt::mulmod(k, l, F_.q - 1), F_.q - 1);
}

FiniteGL2::ClassFunction FiniteGL2::det_char(i64 k) const {
  ClassFunction f;
  for (const auto& C : classes_) f.emplace_back(fq_char(k, mdet(C.rep, F_.q)));
  return f;
}

FiniteGL2::ClassFunction FiniteGL2::induce_borel(i64 k1, i64 k2) const {
  const i64 q = F_.q;
  ClassFunction f;
  for (const auto& C : classes_) {
    std::map<RootOfUnity, i64> counts;
    for (const auto& x : elements_) {
      Mat h = mmul(mmul(x, C.rep, q), minv(x, q), q);
      if (h.c == 0) ++counts[fq_char(k1, h.a) * fq_char(k2, h.d)];
    }
    CycloValue s;
    for (const auto& [r, n] : counts) s += CycloValue(r, Rational(n));
    f.push_back(s * CycloValue(Rational(1, q * (q - 1) * (q - 1))));
  }
  return f;
}

FiniteGL2::ClassFunction FiniteGL2::steinberg(i64 k) const {
  ClassFunction ind = induce_borel(k, k), d = det_char(k);
  for (std::size_t i = 0; i < ind.size(); ++i) ind[i] -= d[i];
  return ind;
}

FiniteGL2::ClassFunction FiniteGL2::cuspidal_oracle(const FiniteTorusChar& theta) const {
  if (!theta.regular()) throw NotRegular("cuspidal character needs a regular theta");
  const i64 q = F_.q;
  ClassFunction f;
  for (const auto& C : classes_) {
    switch (C.type) {
      case ClassType::Central: f.push_back(CycloValue(theta({C.z, 0}), Rational(q - 1))); break;
      case ClassType::NonSemisimple: f.push_back(CycloValue(theta({C.z, 0}), Rational(-1))); break;
      case ClassType::Split: f.emplace_back(); break;
      case ClassType::Elliptic:
        f.push_back(-(CycloValue(theta(C.lambda)) + CycloValue(theta(F_.frob(C.lambda)))));
        break;
    }
  }
  return f;
}

CycloValue FiniteGL2::dl_restriction(const FiniteTorusChar& theta, std::size_t cls) const {
  const auto& C = classes_.at(cls);
  if (C.type != ClassType::Elliptic) throw NotElliptic("Deligne-Lusztig restriction needs an elliptic class");
  if (!theta.regular()) throw NotRegular("theta is not regular");
  return CycloValue(theta(C.lambda)) + CycloValue(theta(F_.frob(C.lambda)));
}

std::vector<std::pair<std::string, FiniteGL2::ClassFunction>> FiniteGL2::character_table() const {
  const i64 q = F_.q;
  std::vector<std::pair<std::string, ClassFunction>> t;
  for (i64 k = 0; k < q - 1; ++k) t.emplace_back("det^" + std::to_string(k), det_char(k));
  for (i64 k = 0; k < q - 1; ++k) t.emplace_back("St*det^" + std::to_string(k), steinberg(k));
  for (i64 k1 = 0; k1 < q - 1; ++k1)
    for (i64 k2 = k1 + 1; k2 < q - 1; ++k2)
      t.emplace_back("Ind(" + std::to_string(k1) + "," + std::to_string(k2) + ")", induce_borel(k1, k2));
  Fq2 gen = F_.generator();
  const i64 n = q * q - 1;
  for (i64 k = 0; k < n; ++k) {
    FiniteTorusChar th(F_, gen, k);
    if (!th.regular() || nt::mod(k * q, n) < k) continue;
    t.emplace_back("cusp(" + std::to_string(k) + ")", cuspidal_oracle(th));
  }
  return t;
}

// ------------------------------------------------------------ depth zero

namespace {

std::shared_ptr<const FiniteGL2> cached_group(i64 q, i64 zbar) {
  static std::map<std::pair<i64, i64>, std::shared_ptr<const FiniteGL2>> cache;
  auto key = std::make_pair(q, zbar);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto G = FiniteGL2::make(q, zbar);
  cache[key] = G;
  return G;
}

}  // namespace

FiniteTorusChar residual_theta(const MultChar& phi) {
  const auto& cfg = phi.cfg();
  if (cfg->ramified) throw ConfigError("residual theta needs an unramified extension");
  const auto& Q = phi.quotient();
  QuadExtElem omega = Q->base_generator(1);
  Fq2Field F{cfg->p, nt::mod(cfg->zeta_unit, cfg->p)};
  Fq2 gen{omega.a().mod_pk(1), omega.b().mod_pk(1)};
  const i64 n = cfg->p * cfg->p - 1;
  RootOfUnity v = phi.on_base(1);
  if (n % v.den() != 0) throw InternalMismatch("phi on the Teichmueller generator has the wrong order");
  return {F, gen, v.num() * (n / v.den())};
}

ReducedKernel depth_zero_theta(const AdmissiblePair& pair, const MultChar& twist, const QuadExtElem& w) {
  const auto& cfg = pair.cfg;
  if (cfg->ramified) throw ConfigError("depth-zero kernel needs an unramified extension");
  MultChar phi = pair.chi * twist;
  if (phi.level() != 0) throw ConfigError("depth-zero kernel needs a level-0 character");
  if (depth_n(w).numerator() != 0) throw WrongRange("w lies in F^*(1 + p_E)");
  const i64 p = cfg->p;
  PadicElem c = PadicElem::make(p, w.b().val(), 1, cfg->precision);
  QuadExtElem w0 = w.scale(c.inverse());
  Fq2 lambda{w0.a().mod_pk(1), w0.b().mod_pk(1)};

  auto G = cached_group(p, nt::mod(cfg->zeta_unit, p));
  auto chi_sigma = G->cuspidal_oracle(residual_theta(phi))[G->elliptic_class(lambda)];
  ReducedKernel k;
  k.value = chi_sigma * phi(QuadExtElem::from_F(cfg, c));
  k.scale.add(ScaleTag::DegPi, 1).add(ScaleTag::DegSigma, -1);
  return k;
}

}  // namespace llc
