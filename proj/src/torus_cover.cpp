#include "llc/torus_cover.hpp"

#include <random>

#include "llc/errors.hpp"
#include "llc/finite_gl2.hpp"
#include "llc/numtheory.hpp"

namespace llc {

using i64 = std::int64_t;

Rational depth_n(const QuadExtElem& w) {
  if (w.b().is_zero()) throw NotRegular("n(w) needs w outside F");
  if (w.a().is_zero()) return Rational(0);
  int n = w.a().val(), m = w.b().val();
  if (!w.cfg()->ramified) return n < m ? Rational(m - n) : Rational(0);
  return n <= m ? Rational(2 * (m - n) + 1, 2) : Rational(0);
}

std::pair<PadicElem, QuadExtElem> decompose(const QuadExtElem& w) {
  if (depth_n(w).numerator() == 0) throw NotPositiveDepth("decompose needs n(w) > 0");
  const auto& cfg = w.cfg();
  return {w.a(), QuadExtElem(cfg, PadicElem::zero(cfg->p), w.b() / w.a())};
}

// ---------------------------------------------------------------- cover

bool same_class_mod_F(const QuadExtElem& w1, const QuadExtElem& w2) { return (w1 / w2).b().is_zero(); }

bool same_class_mod_norms(const QuadExtElem& w1, const QuadExtElem& w2) {
  QuadExtElem r = w1 / w2;
  if (!r.b().is_zero()) return false;
  return hilbert(r.a(), w1.cfg()->zeta_elem()) == 1;
}

TorusCover::TorusCover(CfgPtr cfg, MultChar tau) : cfg_(std::move(cfg)), tau_(std::move(tau)) {
  const i64 p = cfg_->p, g = nt::primitive_root(p);
  for (i64 c : {p, g, p * g, i64{-1}}) {
    PadicElem x = cfg_->F(c);
    if (hilbert(x, cfg_->zeta_elem()) == -1) {
      x0_ = x;
      return;
    }
  }
  throw InternalMismatch("no non-norm found in F^*");
}

CoverElem TorusCover::kappa(const QuadExtElem& w) const { return {w, tau_(w)}; }

QuadExtElem TorusCover::kappa_inv(const CoverElem& x) const {
  RootOfUnity t = tau_(x.z);
  if (t == x.lambda) return x.z;
  if (t == x.lambda * RootOfUnity::minus_one()) return x.z.scale(x0_);
  throw InternalMismatch("element is not in the cover");
}

CoverElem TorusCover::mul(const CoverElem& x, const CoverElem& y) const { return {x.z * y.z, x.lambda * y.lambda}; }

CoverElem TorusCover::weyl_act(bool s, const CoverElem& x) const {
  if (!s) return x;
  QuadExtElem zb = x.z.conj();
  return {zb, x.lambda * tau_(zb / x.z)};
}

bool TorusCover::in_cover(const CoverElem& x) const { return x.lambda.pow(2) == tau_(x.z / x.z.conj()); }

bool TorusCover::equal(const CoverElem& x, const CoverElem& y) const {
  return x.lambda == y.lambda && same_class_mod_F(x.z, y.z);
}

GenuineChar GenuineChar::make(const AdmissiblePair& pair) {
  if (!restricts_to_aleph(pair.chi)) throw NotGenuine("chi restricted to F^* is not aleph");
  if (factors_through_norm(pair.chi)) throw NotRegular("chi is Galois-invariant");
  GenuineChar g;
  g.pair_ = pair;
  return g;
}

// ---------------------------------------------------------------- kernels

int discriminant_sqrtq_power(const QuadExtElem& w) {
  return 2 * w.b().val() + w.cfg()->v_zeta - w.norm().val();
}

namespace {

OpaqueScale positive_depth_scale() {
  OpaqueScale s;
  s.add(ScaleTag::DegPi, 1).add(ScaleTag::CPsiGPrime, 1).add(ScaleTag::CPsiG, -1).add(ScaleTag::EtaInvSqrt, 1);
  return s;
}

OpaqueScale depth_zero_scale() {
  OpaqueScale s;
  s.add(ScaleTag::DegPi, 1).add(ScaleTag::DegSigma, -1);
  return s;
}

void check_range(const QuadExtElem& w, int r) {
  if (depth_n(w) * 2 > Rational(r)) throw OutOfRange("n(w) exceeds r/2");
}

RootOfUnity minus_one_zeta(const FieldConfig& cfg) { return aleph(cfg, cfg.F(-1)); }

// (chi(w) + (-1, zeta) chi(wbar)) tau(2 delta) eps(Delta+) / tau(+-(w - wbar)).
CycloValue reduced_numerator(const GenuineChar& chi, const QuadExtElem& w, const MultChar& tau, bool flip) {
  const auto& cfg = w.cfg();
  QuadExtElem wb = w.conj();
  CycloValue num = CycloValue(chi(w)) + CycloValue(chi(wb) * minus_one_zeta(*cfg));
  QuadExtElem diff = flip ? wb - w : w - wb;
  RootOfUnity eps = flip ? tau(QuadExtElem::from_ints(cfg, -1, 0)) : RootOfUnity::one();
  RootOfUnity r = tau(QuadExtElem::from_ints(cfg, 0, 2)) * eps * tau(diff).inverse();
  return num * r;
}

}  // namespace

ReducedKernel formula_F(const GenuineChar& chi, const QuadExtElem& w, const MultChar& tau, const FormulaOptions& opt) {
  const auto& P = chi.pair();
  const auto& cfg = P.cfg;
  check_range(w, P.level);
  CycloValue v = reduced_numerator(chi, w, tau, opt.flip_positive_root);
  ReducedKernel k;
  if (P.level >= 1) {
    RootOfUnity c = aleph(*cfg, *P.x_pi) * weil_index(cfg->zeta_elem(), opt.psi);
    k.value = (v * c).with_sqrtq_power(discriminant_sqrtq_power(w));
    k.scale = positive_depth_scale();
  } else {
    k.value = (-v).with_sqrtq_power(discriminant_sqrtq_power(w));
    k.scale = depth_zero_scale();
  }
  return k;
}

ReducedKernel formula_F_depth_zero_unsigned(const GenuineChar& chi, const QuadExtElem& w, const MultChar& tau,
                                            const AdditiveChar& psi) {
  FormulaOptions opt{false, psi};
  ReducedKernel k = formula_F(chi, w, tau, opt);
  if (chi.pair().level != 0) throw ConfigError("unsigned depth-zero formula needs a level-0 pair");
  k.value = -k.value;
  return k;
}

ReducedKernel debacker_kernel(const MultChar& phi, const QuadExtElem& w, const AdditiveChar& psi) {
  int r = phi.level();
  if (r < 1) throw NotPositiveDepth("debacker_kernel needs a positive-level character");
  check_range(w, r);
  const auto& cfg = w.cfg();
  QuadExtElem wb = w.conj();
  CycloValue v;
  if (depth_n(w).numerator() > 0) {
    QuadExtElem alpha = solve_alpha(phi, psi);
    auto [c, Y] = decompose(w);
    v = CycloValue(phi(w) * gamma_alpha_Y(alpha, Y, psi)) + CycloValue(phi(wb) * gamma_alpha_Y(alpha, -Y, psi));
  } else {
    int lam = cfg->ramified ? 1 : (r % 2 == 1 ? 1 : -1);
    v = (CycloValue(phi(w)) + CycloValue(phi(wb))) * CycloValue(Rational(lam));
  }
  return {v.with_sqrtq_power(discriminant_sqrtq_power(w)), positive_depth_scale()};
}

ReducedKernel debacker_kernel_nu_route(const MultChar& phi, const MultChar& nu, const QuadExtElem& w,
                                       const AdditiveChar& psi) {
  int r = phi.level();
  if (r < 1) throw NotPositiveDepth("debacker_kernel needs a positive-level character");
  check_range(w, r);
  if (depth_n(w).numerator() == 0) throw NotPositiveDepth("the nu-route needs n(w) > 0");
  const auto& cfg = w.cfg();
  QuadExtElem alpha = solve_alpha(phi, psi);
  QuadExtElem wb = w.conj();
  QuadExtElem t = (w - wb) / QuadExtElem::from_ints(cfg, 0, 2);
  RootOfUnity c = aleph(*cfg, alpha.b()) * weil_index(cfg->zeta_elem(), psi) * nu(t).inverse();
  CycloValue v = CycloValue(phi(w) * nu(w)) + CycloValue(phi(wb) * nu(wb) * minus_one_zeta(*cfg));
  return {(v * c).with_sqrtq_power(discriminant_sqrtq_power(w)), positive_depth_scale()};
}

// ------------------------------------------------------------- comparison

json CompareReport::to_json(bool include_values) const {
  json arr = json::array();
  for (const auto& s : samples) {
    json j{{"w", s.w.to_json()},
           {"depth", {s.depth.numerator(), s.depth.denominator()}},
           {"equal", s.equal}};
    if (include_values) {
      j["formula_F"] = s.lhs.to_json();
      j["supercuspidal"] = s.rhs.to_json();
    }
    arr.push_back(std::move(j));
  }
  return {{"all_equal", all_equal}, {"mismatches", mismatches}, {"count", samples.size()}, {"samples", arr}};
}

CompareReport compare_kernels(const AdmissiblePair& pair, const MultChar& twist, const std::vector<QuadExtElem>& sample,
                              const MultChar& tau, const AdditiveChar& psi) {
  GenuineChar chi = GenuineChar::make(pair);
  MultChar phi = pair.chi * twist;
  CompareReport rep;
  for (const auto& w : sample) {
    SampleVerdict s;
    s.w = w;
    s.depth = depth_n(w);
    s.lhs = formula_F(chi, w, tau, {false, psi});
    if (phi.level() >= 1)
      s.rhs = debacker_kernel(phi, w, psi);
    else
      s.rhs = depth_zero_theta(pair, twist, w);
    s.equal = s.lhs == s.rhs;
    if (!s.equal) {
      rep.all_equal = false;
      ++rep.mismatches;
    }
    rep.samples.push_back(std::move(s));
  }
  return rep;
}

std::vector<QuadExtElem> sample_points(const CfgPtr& cfg, int r, std::uint64_t seed, std::size_t per_stratum,
                                       bool include_positive) {
  const i64 p = cfg->p;
  std::mt19937_64 rng(seed);
  auto pick = [&](i64 n) { return static_cast<i64>(rng() % static_cast<std::uint64_t>(n)); };
  const i64 p3 = p * p * p;
  std::vector<i64> units;
  for (i64 v = 1; v < p3; ++v)
    if (v % p != 0) units.push_back(v);
  auto random_scalar = [&]() {
    i64 u = units[static_cast<std::size_t>(pick(static_cast<i64>(units.size())))];
    return PadicElem::make(p, static_cast<int>(pick(4)) - 1, u, cfg->precision);
  };

  std::vector<int> ks;
  if (!cfg->ramified) {
    ks = {-2, -1, 0};
    if (include_positive)
      for (int k = 1; 2 * k <= r; ++k) ks.push_back(k);
  } else {
    ks = {-3, -2, -1};
    if (include_positive)
      for (int k = 0; 2 * k + 1 <= r; ++k) ks.push_back(k);
  }

  std::vector<QuadExtElem> out;
  out.push_back(QuadExtElem::delta(cfg).scale(random_scalar()));
  for (int k : ks) {
    std::vector<i64> vs = units;
    for (std::size_t i = vs.size(); i > 1; --i) std::swap(vs[i - 1], vs[static_cast<std::size_t>(pick(static_cast<i64>(i)))]);
    if (vs.size() > per_stratum) vs.resize(per_stratum);
    for (i64 v : vs) {
      QuadExtElem w0(cfg, cfg->F(1), PadicElem::make(p, k, v, cfg->precision));
      out.push_back(w0.scale(random_scalar()));
    }
  }
  return out;
}

}  // namespace llc
