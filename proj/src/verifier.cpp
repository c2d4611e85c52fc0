#include "llc/verifier.hpp"

#include <chrono>
#include <map>
#include <random>
#include <set>

#include "llc/errors.hpp"
#include "llc/numtheory.hpp"

namespace llc {

using i64 = std::int64_t;

// ------------------------------------------------------------ parameters

bool WeilParamSpec::is_pgl() const {
  for (const auto& r : determinant)
    if (!r.is_one()) return false;
  return true;
}

WeilParamSpec WeilParamSpec::from_pair(const AdmissiblePair& pair) {
  WeilParamSpec s;
  s.pair = pair;
  for (const auto& x : f_star_generators(*pair.cfg))
    s.determinant.push_back(pair.chi(QuadExtElem::from_F(pair.cfg, x)) * aleph(*pair.cfg, x));
  return s;
}

GenuineChar param_to_genuine(const WeilParamSpec& param) {
  if (!param.is_pgl()) throw NotGenuine("parameter has nontrivial determinant");
  return GenuineChar::make(param.pair);
}

json CorrespondenceRecord::to_json() const {
  json det = json::array();
  for (const auto& r : param.determinant) det.push_back({r.num(), r.den()});
  return {{"pair", param.pair.to_json()},
          {"determinant_on_F_generators", det},
          {"twist", twist.to_json()},
          {"verdicts", verdicts}};
}

CfgPtr VerifyConfig::field() const {
  if (p < 3 || !nt::is_prime(p)) throw ConfigError("p must be an odd prime");
  i64 z = zeta == 0 ? nt::least_nonresidue(p) : zeta;
  return FieldConfig::make(p, z, precision);
}

void Checks::add(const std::string& name, bool pass, std::size_t checked, json witnesses) {
  assertions_.push_back({{"name", name}, {"pass", pass}, {"checked", checked}, {"witnesses", std::move(witnesses)}});
  if (!pass) pass_ = false;
}

void Checks::note(const std::string& name, json value) { notes_[name] = std::move(value); }

json Checks::to_json() const { return {{"assertions", assertions_}, {"notes", notes_}, {"pass", pass_}}; }

namespace {

// Counts checks and keeps the first few failures.
struct Tally {
  std::size_t checked = 0;
  bool ok = true;
  json fails = json::array();
  void check(bool cond, const json& witness) {
    ++checked;
    if (!cond) {
      ok = false;
      if (fails.size() < 5) fails.push_back(witness);
    }
  }
  void into(Checks& C, const std::string& name) const { C.add(name, ok && checked > 0, checked, fails); }
};

json root_json(const RootOfUnity& r) { return json::array({r.num(), r.den()}); }

PadicElem random_F(std::mt19937_64& rng, const FieldConfig& cfg, int vmin, int vmax) {
  i64 m = nt::ipow(cfg.p, 4);
  i64 u;
  do u = static_cast<i64>(rng() % static_cast<std::uint64_t>(m));
  while (u % cfg.p == 0);
  int v = vmin + static_cast<int>(rng() % static_cast<std::uint64_t>(vmax - vmin + 1));
  return PadicElem::make(cfg.p, v, u, cfg.precision);
}

std::vector<PadicElem> square_class_reps(const FieldConfig& cfg) {
  i64 n = nt::least_nonresidue(cfg.p);
  return {cfg.F(1), cfg.F(n), cfg.F(cfg.p), cfg.F(n * cfg.p)};
}

std::string kernel_key(const ReducedKernel& k) {
  return k.value.canonical().to_json().dump() + "|" + k.scale.to_json().dump();
}

// ------------------------------------------------------------ weil-index

void suite_weil_index(const VerifyConfig& vc, Checks& C) {
  const i64 p = vc.p;
  auto cfg = FieldConfig::make(p, nt::least_nonresidue(p), vc.precision);
  std::mt19937_64 rng(vc.seed);
  auto reps = square_class_reps(*cfg);
  std::vector<PadicElem> elems = reps;
  for (int i = 0; i < 12; ++i) elems.push_back(random_F(rng, *cfg, -2, 3));

  Tally rao1_1, rao1_2, rao1_3, squares, sponge, hasse, finite, hsym, hbimult, hneg, hnorm;
  int verbatim_agree = 0, verbatim_total = 0;
  json verbatim_diff = json::array();
  for (int level = 0; level <= 2; ++level) {
    AdditiveChar psi{p, level};
    for (const auto& a : elems)
      for (const auto& b : elems) {
        RootOfUnity lhs = weil_index(a * b, psi) * weil_index(a, psi).inverse() * weil_index(b, psi).inverse();
        rao1_1.check(lhs == RootOfUnity::from_sign(hilbert(a, b)),
                     {{"a", a.to_json()}, {"b", b.to_json()}, {"level", level}});
        DiagQuadForm Q{{a, b}};
        RootOfUnity direct = gamma_F(a, psi) * gamma_F(b, psi);
        RootOfUnity via = RootOfUnity::from_sign(hasse_invariant(Q)) * gamma_F(psi).pow(2) * weil_index(a * b, psi);
        hasse.check(direct == via && form_weil_index(Q, psi) == direct, {{"a", a.to_json()}, {"b", b.to_json()}});
      }
    rao1_2.check(weil_index(cfg->F(-1), psi) == gamma_F(psi).pow(-2), {{"level", level}});
    for (const auto& a : elems) {
      rao1_3.check(weil_index(a, psi).pow(2) == RootOfUnity::from_sign(hilbert(cfg->F(-1), a)),
                   {{"a", a.to_json()}, {"level", level}});
      PadicElem c = random_F(rng, *cfg, -2, 2);
      squares.check(weil_index(a * c * c, psi) == weil_index(a, psi), {{"a", a.to_json()}, {"c", c.to_json()}});
      RootOfUnity vb = weil_index_chain_verbatim(a, psi);
      ++verbatim_total;
      if (vb == weil_index(a, psi))
        ++verbatim_agree;
      else if (verbatim_diff.size() < 3)
        verbatim_diff.push_back({{"a", a.to_json()}, {"level", level}, {"verbatim", root_json(vb)},
                                 {"parity", root_json(weil_index(a, psi))}});
    }
    RootOfUnity sp = weil_index(cfg->zeta_elem(), psi);
    sponge.check(sp == RootOfUnity::from_sign(level % 2 ? -1 : 1), {{"level", level}, {"value", root_json(sp)}});
  }
  for (i64 c = 1; c < p; ++c) {
    RootOfUnity g = finite_weil_index(c, p);
    finite.check(g.pow(4).is_one() && g.pow(2) == RootOfUnity::from_sign(legendre(-1, p)), {{"c", c}});
  }
  for (const auto& a : reps)
    for (const auto& b : reps) {
      hsym.check(hilbert(a, b) == hilbert(b, a), {{"a", a.to_json()}, {"b", b.to_json()}});
      hneg.check(hilbert(a, -a) == 1, {{"a", a.to_json()}});
      for (const auto& c : reps)
        hbimult.check(hilbert(a * b, c) == hilbert(a, c) * hilbert(b, c), {{"a", a.to_json()}, {"b", b.to_json()}});
    }
  for (const auto& E : quadratic_extensions(p, vc.precision))
    for (int i = 0; i < 60; ++i) {
      PadicElem x = random_F(rng, *E, -3, 3);
      hnorm.check((hilbert(x, E->zeta_elem()) == 1) == is_norm(x, *E), {{"x", x.to_json()}, {"zeta", E->zeta}});
    }
  rao1_1.into(C, "gamma(ab) = (a,b) gamma(a) gamma(b)");
  rao1_2.into(C, "gamma(-1, psi) = gamma(psi)^-2");
  rao1_3.into(C, "gamma(a, psi)^2 = (-1, a)");
  squares.into(C, "gamma(a c^2, psi) = gamma(a, psi)");
  sponge.into(C, "gamma(zeta, psi) = (-1)^level for a nonsquare unit zeta");
  hasse.into(C, "binary form index = (a1,a2) gamma(psi)^2 gamma(a1 a2, psi)");
  finite.into(C, "residual Weil index is a fourth root with square legendre(-1)");
  hsym.into(C, "Hilbert symbol symmetric");
  hbimult.into(C, "Hilbert symbol bimultiplicative");
  hneg.into(C, "(a, -a) = 1");
  hnorm.into(C, "(x, zeta) = 1 iff x is a norm");
  C.note("verbatim_level_chain", {{"agree", verbatim_agree}, {"total", verbatim_total}, {"examples", verbatim_diff}});
}

// ------------------------------------------------------------ constants

// a + b delta with b nonzero.
QuadExtElem random_E(std::mt19937_64& rng, const CfgPtr& cfg) {
  PadicElem a = (rng() % 4 == 0) ? PadicElem::zero(cfg->p) : random_F(rng, *cfg, -2, 2);
  return {cfg, a, random_F(rng, *cfg, -2, 2)};
}

void suite_constants(const VerifyConfig& vc, Checks& C) {
  std::mt19937_64 rng(vc.seed + 1);
  Tally lam, lam_sq, lam_unr, gay, gram;
  json table = json::array();
  for (const auto& E : quadratic_extensions(vc.p, vc.precision)) {
    for (int level = 0; level <= 2; ++level) {
      AdditiveChar psi{E->p, level};
      RootOfUnity l;
      bool ok = true;
      try {
        l = langlands_constant(*E, psi);
      } catch (const InternalMismatch&) {
        ok = false;
      }
      lam.check(ok, {{"zeta", E->zeta}, {"level", level}});
      if (!ok) continue;
      table.push_back({{"zeta", E->zeta}, {"psi_level", level}, {"lambda", root_json(l)}});
      if (E->ramified && level == 0)
        lam_sq.check(l.pow(2) == aleph(*E, E->F(-1)), {{"zeta", E->zeta}});
      if (!E->ramified && level == 1) lam_unr.check(l == RootOfUnity::minus_one(), {{"zeta", E->zeta}});
    }
    AdditiveChar psi = standard_psi(*E);
    for (int i = 0; i < 100; ++i) {
      QuadExtElem al = random_E(rng, E), Y = random_E(rng, E);
      bool ok = true;
      try {
        gamma_alpha_Y(al, Y, psi);
      } catch (const InternalMismatch&) {
        ok = false;
      }
      gay.check(ok, {{"alpha", al.to_json()}, {"Y", Y.to_json()}, {"zeta", E->zeta}});
    }
    auto d = QuadExtElem::delta(E);
    auto G = gram_alpha_Y(d, d);
    PadicElem z = E->zeta_elem();
    gram.check(G[0][0].equals(z.mul_int(4)) && G[1][1].equals(-(z * z).mul_int(4)) && G[0][1].is_zero() &&
                   G[1][0].is_zero(),
               {{"zeta", E->zeta}});
  }
  lam.into(C, "Langlands constant: norm-form index = gamma(zeta, psi)(-1, zeta)");
  lam_sq.into(C, "ramified: lambda^2 = (-1, zeta) at psi level 0");
  lam_unr.into(C, "unramified: lambda = -1 at psi level 1");
  gay.into(C, "gamma(alpha, Y): Gram-matrix route = closed form");
  gram.into(C, "Gram matrix for alpha = Y = delta is diag(4 zeta, -4 zeta^2)");
  C.note("lambda_table", table);
}

// ------------------------------------------------------------ cover

QuadExtElem random_regular(std::mt19937_64& rng, const CfgPtr& cfg) {
  for (;;) {
    PadicElem a = (rng() % 5 == 0) ? PadicElem::zero(cfg->p) : random_F(rng, *cfg, 0, 3);
    PadicElem b = random_F(rng, *cfg, 0, 3);
    if (!a.is_zero() && b.val() - a.val() > 3) continue;
    return {cfg, a, b};
  }
}

void suite_cover(const VerifyConfig& vc, Checks& C) {
  auto cfg = vc.field();
  std::mt19937_64 rng(vc.seed + 2);
  AdditiveChar psi = standard_psi(*cfg);
  const int L = std::min(vc.max_level, 1);
  auto taus = aleph_extensions(cfg);
  TorusCover T(cfg, taus.at(0));

  Tally inv, inv2, incov, weyl, invol, hom, deck, gen, welldef, tau_swap, flip, rescale, omega, search;

  auto Q = UnitQuotient::make(cfg, L, 4);
  std::vector<QuadExtElem> elems;
  {
    const auto& d = Q->orders();
    std::vector<i64> e(d.size(), 0);
    for (;;) {
      QuadExtElem w = QuadExtElem::from_ints(cfg, 1, 0);
      for (std::size_t i = 0; i < d.size(); ++i) w = w * Q->generators()[i].pow(e[i]);
      elems.push_back(w);
      std::size_t i = d.size();
      bool done = true;
      while (i > 0) {
        --i;
        if (++e[i] < d[i]) {
          done = false;
          break;
        }
        e[i] = 0;
      }
      if (done) break;
    }
  }
  for (const auto& w : elems) {
    CoverElem k = T.kappa(w);
    incov.check(T.in_cover(k), {{"w", w.to_json()}});
    QuadExtElem back = T.kappa_inv(k);
    inv.check(same_class_mod_norms(back, w), {{"w", w.to_json()}});
    CoverElem other{k.z, k.lambda * RootOfUnity::minus_one()};
    inv2.check(T.equal(T.kappa(T.kappa_inv(other)), other) && !same_class_mod_norms(T.kappa_inv(other), w),
               {{"w", w.to_json()}});
    if (!w.b().is_zero()) {
      weyl.check(T.equal(T.kappa(w.conj()), T.weyl_act(true, k)), {{"w", w.to_json()}});
      invol.check(T.equal(T.weyl_act(true, T.weyl_act(true, k)), k) && T.equal(T.weyl_act(false, k), k),
                  {{"w", w.to_json()}});
    }
  }
  for (int i = 0; i < 200; ++i) {
    const auto& w1 = elems[rng() % elems.size()];
    const auto& w2 = elems[rng() % elems.size()];
    hom.check(T.equal(T.kappa(w1 * w2), T.mul(T.kappa(w1), T.kappa(w2))), {{"w1", w1.to_json()}, {"w2", w2.to_json()}});
  }
  CoverElem x0 = T.kappa(QuadExtElem::from_F(cfg, T.non_norm()));
  deck.check(T.equal(x0, {QuadExtElem::from_ints(cfg, 1, 0), RootOfUnity::minus_one()}), {});

  auto pairs = enumerate_pairs(cfg, L, true);
  for (std::size_t pi = 0; pi < pairs.size(); ++pi) {
    const auto& P = pairs[pi];
    bool g_ok = P.chi(QuadExtElem::from_F(cfg, T.non_norm())) == RootOfUnity::minus_one();
    try {
      param_to_genuine(WeilParamSpec::from_pair(P));
    } catch (const Error&) {
      g_ok = false;
    }
    gen.check(g_ok, {{"pair", P.to_json()}});
    for (int i = 0; i < 5; ++i) {
      const auto& w = elems[rng() % elems.size()];
      const auto& x = elems[rng() % elems.size()];
      welldef.check(P.chi(w.scale(x.norm())) == P.chi(w), {{"w", w.to_json()}, {"x", x.to_json()}});
    }
    GenuineChar chi = GenuineChar::make(P);
    auto sample = sample_points(cfg, P.level, vc.seed + pi, 6);
    for (const auto& w : sample) {
      ReducedKernel base = formula_F(chi, w, taus[0], {false, psi});
      tau_swap.check(base == formula_F(chi, w, taus[1], {false, psi}), {{"w", w.to_json()}});
      flip.check(base == formula_F(chi, w, taus[0], {true, psi}), {{"w", w.to_json()}});
      PadicElem c = random_F(rng, *cfg, -2, 2);
      rescale.check(base == formula_F(chi, w.scale(c), taus[0], {false, psi}), {{"w", w.to_json()}, {"c", c.to_json()}});
    }
  }

  // Omega identity on n(w) = 0 points.
  std::vector<MultChar> omegas;
  for (const auto& t : taus) {
    if (cfg->ramified) {
      i64 o = 1;
      for (const auto& r : t.values_on_generators()) o = nt::lcm(o, r.den());
      if ((o & (o - 1)) == 0) omegas.push_back(t);
    } else if (t.on_base(1).is_one() && t.on_base(0) == RootOfUnity::minus_one()) {
      omegas.push_back(t);
    }
  }
  QuadExtElem two_delta = QuadExtElem::from_ints(cfg, 0, 2), delta = QuadExtElem::delta(cfg);
  for (const auto& w : sample_points(cfg, 0, vc.seed + 99, 10, false))
    for (const auto& Om : omegas)
      for (const auto& t : taus)
        omega.check(t((w - w.conj()) / two_delta) == Om(w / delta), {{"w", w.to_json()}});

  auto cfg6 = FieldConfig::make(cfg->p, cfg->zeta, 6);
  for (int i = 0; i < 200; ++i) {
    QuadExtElem w = random_regular(rng, cfg6);
    Rational a = depth_n(w), b = depth_by_search(w, 4);
    search.check(a == b, {{"w", w.to_json()},
                          {"formula", {a.numerator(), a.denominator()}},
                          {"search", {b.numerator(), b.denominator()}}});
  }

  incov.into(C, "kappa lands in the cover");
  inv.into(C, "kappa_inv o kappa = id on E^*/N(E^*)");
  inv2.into(C, "kappa o kappa_inv = id on both points of each fiber");
  weyl.into(C, "kappa(conj w) = s . kappa(w)");
  invol.into(C, "Weyl action: s^2 = 1, 1 acts trivially");
  hom.into(C, "kappa is a homomorphism");
  deck.into(C, "kappa(non-norm) = (1, -1)");
  gen.into(C, "every PGL pair is genuine and regular");
  welldef.into(C, "chi~ well defined on N(E^*)-cosets");
  tau_swap.into(C, "F(chi~) independent of the extension tau~");
  flip.into(C, "F(chi~) independent of the positive root");
  rescale.into(C, "F(chi~) well defined on E^*/F^*");
  omega.into(C, "tau~((w - wbar)/2 delta) = Omega(w / delta) for n(w) = 0");
  search.into(C, "n(w) agrees with brute-force coset search");
  C.note("quotient_order", Q->group_order());
  C.note("pgl_pairs", pairs.size());
}

// ------------------------------------------------------------ matching

std::vector<AdmissiblePair> positive_minimal_pgl(const CfgPtr& cfg, int L) {
  std::vector<AdmissiblePair> out;
  for (auto& P : enumerate_pairs(cfg, L, true))
    if (P.level >= 1 && P.minimal) out.push_back(std::move(P));
  return out;
}

void suite_matching(const VerifyConfig& vc, Checks& C) {
  auto cfg = vc.field();
  AdditiveChar psi = standard_psi(*cfg);
  auto tau = build_tau_tilde(cfg, 0);
  auto all = enumerate_pairs(cfg, vc.max_level, true);
  std::size_t nonminimal = 0;
  for (const auto& P : all)
    if (!P.minimal) ++nonminimal;
  auto pairs = positive_minimal_pgl(cfg, vc.max_level);

  std::vector<MultChar> nus;
  for (const auto& t : aleph_extensions(cfg)) {
    i64 o = 1;
    for (const auto& r : t.values_on_generators()) o = nt::lcm(o, r.den());
    if ((o & (o - 1)) == 0) nus.push_back(t);
  }

  Tally match, count, cross, selfinv, nu_route, sym, ramified_odd, alpha_val;
  json records = json::array();
  std::size_t total_samples = 0;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& P = pairs[i];
    MultChar mu = build_mu(P, psi);
    auto sample = sample_points(cfg, P.level, vc.seed + 1000 + i);
    auto rep = compare_kernels(P, mu, sample, tau, psi);
    total_samples += sample.size();
    json bad = json::array();
    for (const auto& s : rep.samples)
      if (!s.equal && bad.size() < 3)
        bad.push_back({{"w", s.w.to_json()}, {"formula_F", s.lhs.to_json()}, {"supercuspidal", s.rhs.to_json()}});
    match.check(rep.all_equal, {{"pair", P.to_json()}, {"mismatches", bad}});
    count.check(sample.size() >= 50, {{"pair", P.to_json()}, {"samples", sample.size()}});
    ramified_odd.check(!cfg->ramified || P.level % 2 == 1, {{"pair", P.to_json()}});
    alpha_val.check(P.alpha->v_E() == -P.level, {{"pair", P.to_json()}});
    if (cfg->ramified) {
      RootOfUnity lhs = mu(QuadExtElem::delta(cfg));
      RootOfUnity rhs = aleph(*cfg, *P.x_pi) * weil_index(cfg->zeta_elem(), psi);
      cross.check(lhs == rhs, {{"pair", P.to_json()}, {"mu_delta", root_json(lhs)}, {"closed_form", root_json(rhs)}});
    } else {
      selfinv.check(mu == mu.inverse(), {{"pair", P.to_json()}});
    }
    MultChar phi = P.chi * mu;
    for (const auto& w : sample) {
      sym.check(debacker_kernel(phi, w, psi) == debacker_kernel(phi, w.conj(), psi), {{"w", w.to_json()}});
      if (depth_n(w).numerator() > 0)
        for (const auto& nu : nus)
          nu_route.check(debacker_kernel(phi, w, psi) == debacker_kernel_nu_route(phi, nu, w, psi),
                         {{"w", w.to_json()}, {"nu", nu.to_json()}});
    }
    CorrespondenceRecord rec{WeilParamSpec::from_pair(P), mu,
                             {{"matching", rep.all_equal}, {"samples", sample.size()}, {"mismatches", rep.mismatches}}};
    records.push_back(rec.to_json());
  }
  match.into(C, "F(chi~) = supercuspidal kernel of pi_{chi mu} on 0 <= n(w) <= r/2");
  count.into(C, "at least 50 sample points per pair");
  alpha_val.into(C, "v_E(alpha(chi)) = -level");
  if (cfg->ramified) {
    ramified_odd.into(C, "ramified pairs have odd level");
    cross.into(C, "mu(delta) = (x_pi, zeta) gamma(zeta, psi)");
  } else {
    selfinv.into(C, "mu is its own inverse");
  }
  sym.into(C, "supercuspidal kernel symmetric under w -> wbar");
  nu_route.into(C, "gamma(alpha, Y) route = nu route for 2-power extensions nu");
  C.note("pairs", pairs.size());
  C.note("non_minimal_pairs", nonminimal);
  C.note("total_samples", total_samples);
  C.note("records", records);
}

// ------------------------------------------------------------ naive-fails

void suite_naive(const VerifyConfig& vc, Checks& C) {
  auto cfg = vc.field();
  AdditiveChar psi = standard_psi(*cfg);
  auto tau = build_tau_tilde(cfg, 0);
  auto pairs = positive_minimal_pgl(cfg, vc.max_level);
  std::size_t with_mismatch = 0, total = 0;
  json witnesses = json::array();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& P = pairs[i];
    auto sample = sample_points(cfg, P.level, vc.seed + 1000 + i);
    auto rep = compare_kernels(P, MultChar::trivial(P.chi.quotient()), sample, tau, psi);
    total += rep.mismatches;
    if (rep.mismatches > 0) {
      ++with_mismatch;
      if (witnesses.size() < 10)
        for (const auto& s : rep.samples)
          if (!s.equal) {
            witnesses.push_back({{"pair", P.to_json()},
                                 {"w", s.w.to_json()},
                                 {"formula_F", s.lhs.to_json()},
                                 {"naive", s.rhs.to_json()}});
            break;
          }
    }
  }
  C.add("trivial twist mismatches somewhere", total > 0, pairs.size(), witnesses);
  C.note("pairs", pairs.size());
  C.note("pairs_with_mismatch", with_mismatch);
  C.note("mismatching_samples", total);
}

// ------------------------------------------------------------ depth-zero

void suite_depth_zero(const VerifyConfig& vc, Checks& C) {
  const i64 q = vc.p;
  auto cfg = vc.field();
  if (cfg->ramified) cfg = FieldConfig::make(q, nt::least_nonresidue(q), vc.precision);
  auto G = FiniteGL2::make(q, nt::mod(cfg->zeta_unit, q));
  Fq2 gen = G->field().generator();
  const i64 n = q * q - 1;
  auto one = G->det_char(0);

  Tally norm1, orth1, deg, intg, dl, galois, distinct, colorth;
  std::vector<FiniteGL2::ClassFunction> cusp;
  std::size_t elliptic_checked = 0;
  for (i64 k = 0; k < n; ++k) {
    FiniteTorusChar th(G->field(), gen, k);
    if (!th.regular()) continue;
    auto chi = G->cuspidal_oracle(th);
    norm1.check(G->inner(chi, chi) == CycloValue(Rational(1)), {{"k", k}});
    orth1.check(G->inner(chi, one).is_zero(), {{"k", k}});
    std::size_t id = G->class_of({1, 0, 0, 1});
    deg.check(chi[id] == CycloValue(Rational(q - 1)), {{"k", k}});
    for (i64 k1 = 0; k1 < q - 1; ++k1)
      for (i64 k2 = k1; k2 < q - 1; ++k2) {
        auto ip = G->inner(chi, G->induce_borel(k1, k2)).as_rational();
        intg.check(ip && ip->denominator() == 1, {{"k", k}, {"k1", k1}, {"k2", k2}});
      }
    for (std::size_t c = 0; c < G->classes().size(); ++c) {
      if (G->classes()[c].type != FiniteGL2::ClassType::Elliptic) continue;
      ++elliptic_checked;
      dl.check(G->dl_restriction(th, c) == -chi[c], {{"k", k}, {"class", c}});
      galois.check(G->dl_restriction(th, c) == G->dl_restriction(th.frob(), c), {{"k", k}, {"class", c}});
    }
    if (nt::mod(k * q, n) >= k) cusp.push_back(chi);
  }
  for (std::size_t i = 0; i < cusp.size(); ++i)
    for (std::size_t j = i + 1; j < cusp.size(); ++j)
      distinct.check(G->inner(cusp[i], cusp[j]).is_zero(), {{"i", i}, {"j", j}});
  auto table = G->character_table();
  for (std::size_t c = 0; c < G->classes().size(); ++c) {
    CycloValue s;
    for (const auto& [name, f] : table) s += f[c] * f[c].conj();
    colorth.check(s == CycloValue(Rational(G->classes()[c].centralizer)), {{"class", c}});
  }
  norm1.into(C, "cuspidal oracle: <chi, chi> = 1");
  orth1.into(C, "cuspidal oracle: <chi, 1> = 0");
  deg.into(C, "cuspidal oracle: chi(1) = q - 1");
  intg.into(C, "cuspidal oracle: <chi, Ind_B> integral");
  distinct.into(C, "distinct Frobenius orbits give orthogonal cuspidals");
  dl.into(C, "R_{T,theta}(s) = theta(s) + theta(sbar) = -chi_sigma(s) on elliptic classes");
  galois.into(C, "R_{T,theta} invariant under theta -> theta^q");
  colorth.into(C, "column orthogonality of the assembled table");
  C.note("classes", G->classes().size());
  C.note("cuspidal_orbits", cusp.size());
  C.note("sign_relation", "R_{T,theta} = -chi_sigma on regular elliptic classes");

  // Matching on F^* A.
  AdditiveChar psi = standard_psi(*cfg);
  auto tau = build_tau_tilde(cfg, 0);
  Tally match, unsigned_neg, d1, tau1, mu1;
  std::vector<QuadExtElem> A;
  std::vector<PadicElem> scalars{cfg->F(1), cfg->F(q), PadicElem::make(q, -1, 1, cfg->precision),
                                 cfg->F(nt::primitive_root(q)), PadicElem::make(q, 2, nt::primitive_root(q), cfg->precision)};
  for (i64 u = 0; u < q; ++u)
    for (i64 v = 1; v < q; ++v)
      for (int t = 0; t < 2; ++t) {
        // p^n u + v delta with n in {0, 1}.
        PadicElem a = u == 0 ? PadicElem::zero(q) : PadicElem::make(q, t, u, cfg->precision);
        A.push_back(QuadExtElem(cfg, a, cfg->F(v)));
      }
  auto pairs = enumerate_pairs(cfg, 0, true);
  QuadExtElem two_delta = QuadExtElem::from_ints(cfg, 0, 2);
  for (const auto& P : pairs) {
    MultChar mu = build_mu(P, psi);
    GenuineChar chi = GenuineChar::make(P);
    for (const auto& a : A) {
      d1.check(discriminant_sqrtq_power(a) == 0, {{"w", a.to_json()}});
      tau1.check(tau((a - a.conj()) / two_delta).is_one(), {{"w", a.to_json()}});
      mu1.check(mu(a).is_one(), {{"w", a.to_json()}});
      for (const auto& c : scalars) {
        QuadExtElem w = a.scale(c);
        ReducedKernel f = formula_F(chi, w, tau, {false, psi});
        ReducedKernel k = depth_zero_theta(P, mu, w);
        match.check(f == k, {{"pair", P.to_json()}, {"w", w.to_json()}, {"formula_F", f.to_json()},
                             {"depth_zero", k.to_json()}});
        ReducedKernel fu = formula_F_depth_zero_unsigned(chi, w, tau, psi);
        unsigned_neg.check(fu.value == -k.value, {{"w", w.to_json()}});
      }
    }
  }
  match.into(C, "F(chi~) = depth-zero kernel on F^* A");
  unsigned_neg.into(C, "epsilon without the leading minus gives the negative");
  d1.into(C, "|D(w)| = 1 on A");
  tau1.into(C, "tau~((w - wbar)/2 delta) = 1 on A");
  mu1.into(C, "mu = 1 on A");
  C.note("level0_pgl_pairs", pairs.size());
  std::set<int> classes;
  for (const auto& P : pairs) classes.insert(P.galois_class);
  C.note("level0_pgl_galois_classes", classes.size());
}

// ------------------------------------------------------------ uniqueness

struct KernelTable {
  std::vector<AdmissiblePair> pairs;
  std::vector<QuadExtElem> sample;
  std::vector<std::vector<ReducedKernel>> values;
};

KernelTable kernel_table(const CfgPtr& cfg, int L, std::uint64_t seed) {
  KernelTable T;
  T.pairs = enumerate_pairs(cfg, L, true);
  T.sample = sample_points(cfg, 0, seed, 8, false);
  auto tau = build_tau_tilde(cfg, 0);
  AdditiveChar psi = standard_psi(*cfg);
  for (const auto& P : T.pairs) {
    GenuineChar chi = GenuineChar::make(P);
    std::vector<ReducedKernel> row;
    for (const auto& w : T.sample) row.push_back(formula_F(chi, w, tau, {false, psi}));
    T.values.push_back(std::move(row));
  }
  return T;
}

void suite_uniqueness(const VerifyConfig& vc, Checks& C) {
  const int L = std::min(vc.max_level, 1);
  auto exts = quadratic_extensions(vc.p, vc.precision);
  std::vector<KernelTable> tables;
  for (std::size_t e = 0; e < exts.size(); ++e) tables.push_back(kernel_table(exts[e], L, vc.seed + 7 * e));

  // Same Cartan.
  Tally same, guard;
  json counts = json::array();
  for (std::size_t e = 0; e < exts.size(); ++e) {
    const auto& T = tables[e];
    std::map<std::string, std::set<int>> by_sig;
    for (std::size_t i = 0; i < T.pairs.size(); ++i) {
      std::string sig;
      bool nonzero = false;
      for (const auto& k : T.values[i]) {
        sig += kernel_key(k) + ";";
        if (!k.value.is_zero()) nonzero = true;
      }
      by_sig[sig].insert(T.pairs[i].galois_class);
      guard.check(nonzero, {{"pair", T.pairs[i].to_json()}});
    }
    for (const auto& [sig, cls] : by_sig)
      same.check(cls.size() == 1, {{"zeta", exts[e]->zeta}, {"galois_classes", std::vector<int>(cls.begin(), cls.end())}});
    counts.push_back({{"zeta", exts[e]->zeta}, {"pairs", T.pairs.size()}, {"distinct_kernels", by_sig.size()}});
  }
  same.into(C, "same Cartan: equal kernels only for Galois-conjugate pairs");
  guard.into(C, "every pair has a nonvanishing n(w) = 0 sample");
  C.note("same_cartan", counts);

  // Cross Cartan.
  Tally cross, det_case;
  json cross_notes = json::array();
  for (std::size_t e = 0; e < exts.size(); ++e)
    for (std::size_t f = 0; f < exts.size(); ++f) {
      if (e == f) continue;
      const auto& T = tables[e];
      const auto& E1 = exts[f];
      std::size_t det_w = 0, cited_w = 0;
      bool all_det = true;
      for (const auto& w : T.sample)
        if (hilbert(w.norm(), E1->zeta_elem()) != -1) all_det = false;
      for (std::size_t i = 0; i < T.pairs.size(); ++i) {
        json witness;
        std::string cert;
        for (std::size_t s = 0; s < T.sample.size(); ++s) {
          if (T.values[i][s].value.is_zero()) continue;
          bool det = hilbert(T.sample[s].norm(), E1->zeta_elem()) == -1;
          if (det || witness.is_null()) {
            witness = {{"w", T.sample[s].to_json()}, {"native", T.values[i][s].to_json()}};
            cert = det ? "det-not-a-norm" : "cited-vanishing";
          }
          if (det) break;
        }
        cross.check(!witness.is_null(), {{"pair", T.pairs[i].to_json()}, {"foreign_zeta", E1->zeta}});
        if (cert == "det-not-a-norm")
          ++det_w;
        else if (!cert.empty())
          ++cited_w;
      }
      bool both_ramified = exts[e]->ramified && E1->ramified;
      bool native_ramified_foreign_unramified = exts[e]->ramified && !E1->ramified;
      if (both_ramified || native_ramified_foreign_unramified)
        det_case.check(all_det, {{"native_zeta", exts[e]->zeta}, {"foreign_zeta", E1->zeta}});
      cross_notes.push_back({{"native_zeta", exts[e]->zeta},
                             {"foreign_zeta", E1->zeta},
                             {"minus_one_symbol", hilbert(exts[e]->F(-1), exts[e]->F(vc.p))},
                             {"det_certified", det_w},
                             {"cited", cited_w},
                             {"det_obstruction_on_all_samples", all_det}});
    }
  cross.into(C, "cross Cartan: each pair has a separating witness");
  det_case.into(C, "determinant obstruction on every n(w) = 0 sample where it is claimed");
  C.note("cross_cartan", cross_notes);

  // Cross depth on the unramified extension.
  Tally depth_sep, conjugate;
  const auto& U = tables[0];
  auto separated = [&](std::size_t i, std::size_t j) {
    for (std::size_t s = 0; s < U.sample.size(); ++s)
      if (!(U.values[i][s].value == U.values[j][s].value)) return true;
    return false;
  };
  for (std::size_t i = 0; i < U.pairs.size(); ++i) {
    for (std::size_t j = i + 1; j < U.pairs.size(); ++j)
      if (U.pairs[i].galois_class == U.pairs[j].galois_class)
        conjugate.check(!separated(i, j), {{"a", U.pairs[i].to_json()}, {"b", U.pairs[j].to_json()}});
    if (U.pairs[i].level != 0) continue;
    for (std::size_t j = 0; j < U.pairs.size(); ++j) {
      if (U.pairs[j].level == 0) continue;
      depth_sep.check(separated(i, j), {{"level0", U.pairs[i].to_json()}, {"positive", U.pairs[j].to_json()},
                            {"levels", {U.pairs[i].level, U.pairs[j].level}}});
    }
  }
  depth_sep.into(C, "cross depth: level-0 and positive-level kernels separate");
  conjugate.into(C, "Galois-conjugate pairs are not separated");
}

using SuiteFn = void (*)(const VerifyConfig&, Checks&);

const std::vector<std::pair<std::string, SuiteFn>>& suites() {
  static const std::vector<std::pair<std::string, SuiteFn>> s{
      {"weil-index", suite_weil_index}, {"constants", suite_constants},   {"cover", suite_cover},
      {"matching", suite_matching},     {"depth-zero", suite_depth_zero}, {"uniqueness", suite_uniqueness},
      {"naive-fails", suite_naive}};
  return s;
}

json config_json(const VerifyConfig& vc) {
  auto cfg = vc.field();
  return {{"p", vc.p},          {"zeta", cfg->zeta}, {"precision", vc.precision},
          {"max_level", vc.max_level}, {"seed", vc.seed}, {"ramified", cfg->ramified}};
}

}  // namespace

Rational depth_by_search(const QuadExtElem& w, int digits) {
  const auto& cfg = w.cfg();
  const i64 p = cfg->p, m = nt::ipow(p, digits);
  int best = 0;
  if (!w.a().is_zero())
    for (int s = -3; s <= 8; ++s)
      for (i64 u = 1; u < m; ++u) {
        if (u % p == 0) continue;
        PadicElem c = PadicElem::make(p, s, u, cfg->precision);
        QuadExtElem z = w.scale(c.inverse()) - QuadExtElem::from_ints(cfg, 1, 0);
        if (z.is_zero()) continue;
        best = std::max(best, z.v_E());
      }
  return best >= 1 ? Rational(best, cfg->e()) : Rational(0);
}

std::vector<CfgPtr> quadratic_extensions(i64 p, int precision) {
  i64 n = nt::least_nonresidue(p);
  return {FieldConfig::make(p, n, precision), FieldConfig::make(p, p, precision), FieldConfig::make(p, n * p, precision)};
}

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [n, f] : suites()) out.push_back(n);
  out.push_back("all");
  return out;
}

SuiteResult run_suite(const std::string& name, const VerifyConfig& vc) {
  json cj = config_json(vc);
  auto run_one = [&](const std::string& n, SuiteFn f) {
    Checks C;
    auto t0 = std::chrono::steady_clock::now();
    f(vc, C);
    json r = C.to_json();
    r["suite"] = n;
    if (vc.timings)
      r["elapsed_ms"] =
          std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    return r;
  };
  SuiteResult res;
  if (name == "all") {
    json all = json::object();
    bool pass = true;
    for (const auto& [n, f] : suites()) {
      json r = run_one(n, f);
      pass = pass && r["pass"].get<bool>();
      all[n] = std::move(r);
    }
    res.report = {{"suite", "all"}, {"config", cj}, {"suites", all}, {"pass", pass}};
    res.pass = pass;
    return res;
  }
  for (const auto& [n, f] : suites())
    if (n == name) {
      res.report = run_one(n, f);
      res.report["config"] = cj;
      res.pass = res.report["pass"].get<bool>();
      return res;
    }
  throw ConfigError("unknown suite '" + name + "'");
}

}  // namespace llc
