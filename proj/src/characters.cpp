#include "llc/characters.hpp"

#include <map>

#include "llc/errors.hpp"
#include "llc/numtheory.hpp"

namespace llc {

using i64 = std::int64_t;

namespace {

// Exponent e with r = e(e / m); NoSolution when r^m != 1.
i64 exponent_in(const RootOfUnity& r, i64 m) {
  if (m % r.den() != 0) throw NoSolution("root of unity of order " + std::to_string(r.den()) +
                                         " does not divide " + std::to_string(m));
  return r.num() * (m / r.den());
}

QuadExtElem one_plus(const CfgPtr& cfg, int v, bool on_delta) {
  PadicElem x = PadicElem::make(cfg->p, v, 1, cfg->precision);
  PadicElem one = cfg->F(1), zero = PadicElem::zero(cfg->p);
  return on_delta ? QuadExtElem(cfg, one, x) : QuadExtElem(cfg, one + x, zero);
}

}  // namespace

// ------------------------------------------------------------------ MultChar

MultChar::MultChar(QuotientPtr Q, Vec exps) : Q_(std::move(Q)), exps_(std::move(exps)) {
  const auto& d = Q_->orders();
  if (exps_.size() != d.size()) throw ConfigError("character exponent vector has the wrong length");
  for (std::size_t i = 0; i < d.size(); ++i) exps_[i] = nt::mod(exps_[i], d[i]);
}

MultChar MultChar::trivial(QuotientPtr Q) {
  Vec z(Q->rank(), 0);
  return {std::move(Q), z};
}

MultChar MultChar::from_function(QuotientPtr Q, const std::function<RootOfUnity(const QuadExtElem&)>& f) {
  Vec e(Q->rank());
  const auto& d = Q->orders();
  for (std::size_t i = 0; i < e.size(); ++i) {
    try {
      e[i] = exponent_in(f(Q->generators()[i]), d[i]);
    } catch (const NoSolution&) {
      throw UnresolvableClass("function is not a character of the quotient (generator order)");
    }
  }
  MultChar chi(Q, e);
  for (std::size_t i = 0; i < Q->base_size(); ++i) {
    QuadExtElem g = Q->base_generator(i);
    if (chi(g) != f(g)) throw UnresolvableClass("function is not a character of the quotient");
  }
  return chi;
}

std::vector<RootOfUnity> MultChar::values_on_generators() const {
  std::vector<RootOfUnity> out;
  for (std::size_t i = 0; i < exps_.size(); ++i) out.emplace_back(exps_[i], Q_->orders()[i]);
  return out;
}

RootOfUnity MultChar::on_coords(const Vec& y) const {
  RootOfUnity r;
  const auto& d = Q_->orders();
  for (std::size_t i = 0; i < exps_.size(); ++i) r *= RootOfUnity(nt::mulmod(exps_[i], y[i], d[i]), d[i]);
  return r;
}

RootOfUnity MultChar::operator()(const QuadExtElem& w) const {
  if (w.is_zero()) throw ZeroInput("character evaluated at zero");
  return on_coords(Q_->dlog(w));
}

RootOfUnity MultChar::on_base(std::size_t i) const {
  Vec x(Q_->base_size(), 0);
  x[i] = 1;
  return on_coords(Q_->from_base(x));
}

int MultChar::level() const {
  int L = Q_->level();
  for (int n = L; n >= 1; --n) {
    std::size_t b = Q_->layer_begin(n);
    for (std::size_t i = b; i < b + Q_->layer_size(); ++i)
      if (!on_base(i).is_one()) return n;
  }
  return 0;
}

MultChar MultChar::operator*(const MultChar& o) const {
  if (Q_ != o.Q_) throw MixedScale("characters on different quotients");
  Vec e(exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = exps_[i] + o.exps_[i];
  return {Q_, e};
}

MultChar MultChar::inverse() const {
  Vec e(exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = -exps_[i];
  return {Q_, e};
}

MultChar MultChar::galois_conj() const {
  Vec e(exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i)
    e[i] = exponent_in((*this)(Q_->generators()[i].conj()), Q_->orders()[i]);
  return {Q_, e};
}

json MultChar::to_json() const {
  json vals = json::array();
  for (const auto& r : values_on_generators()) vals.push_back({r.num(), r.den()});
  return {{"level", level()}, {"quotient_level", Q_->level()}, {"orders", Q_->orders()}, {"generator_values", vals}};
}

MultChar MultChar::from_json(QuotientPtr Q, const json& j) {
  const auto& vals = j.at("generator_values");
  if (vals.size() != Q->rank()) throw ConfigError("generator_values has the wrong length");
  Vec e(Q->rank());
  for (std::size_t i = 0; i < e.size(); ++i) {
    RootOfUnity r(vals[i].at(0).get<i64>(), vals[i].at(1).get<i64>());
    try {
      e[i] = exponent_in(r, Q->orders()[i]);
    } catch (const NoSolution&) {
      throw ConfigError("generator value incompatible with the generator's order");
    }
  }
  return {std::move(Q), e};
}

// ------------------------------------------------------------ F^* helpers

RootOfUnity aleph(const FieldConfig& cfg, const PadicElem& x) {
  return RootOfUnity::from_sign(hilbert(x, cfg.zeta_elem()));
}

std::vector<PadicElem> f_star_generators(const FieldConfig& cfg) {
  return {cfg.F(cfg.p), cfg.F(nt::primitive_root(cfg.p)), cfg.F(1 + cfg.p)};
}

bool restricts_to_aleph(const MultChar& chi) {
  const auto& cfg = chi.cfg();
  for (const auto& x : f_star_generators(*cfg))
    if (chi(QuadExtElem::from_F(cfg, x)) != aleph(*cfg, x)) return false;
  return true;
}

bool factors_through_norm(const MultChar& chi, std::optional<int> n) {
  const auto& Q = chi.quotient();
  std::vector<QuadExtElem> gens;
  if (!n) {
    gens = Q->generators();
  } else {
    std::size_t b = *n == 0 ? 1 : (*n > Q->level() ? Q->base_size() : Q->layer_begin(*n));
    for (std::size_t i = b; i < Q->base_size(); ++i) gens.push_back(Q->base_generator(i));
  }
  for (const auto& g : gens)
    if (chi(g) != chi(g.conj())) return false;
  return true;
}

bool is_admissible(const MultChar& chi) {
  if (factors_through_norm(chi)) return false;
  if (factors_through_norm(chi, 1) && chi.cfg()->ramified) return false;
  return true;
}

bool is_minimal(const MultChar& chi) { return !factors_through_norm(chi, chi.level()); }

MultChar norm_lift(QuotientPtr Q, const std::function<RootOfUnity(const PadicElem&)>& eta) {
  return MultChar::from_function(std::move(Q), [&](const QuadExtElem& w) { return eta(w.norm()); });
}

RootOfUnity quadratic_char_F(QuadraticF kind, const PadicElem& x) {
  if (x.is_zero()) throw ZeroInput("quadratic character at zero");
  int unr = (x.val() % 2 == 0) ? 1 : -1;
  int res = legendre(x.unit_residue(), x.p());
  switch (kind) {
    case QuadraticF::Unramified: return RootOfUnity::from_sign(unr);
    case QuadraticF::Residue: return RootOfUnity::from_sign(res);
    case QuadraticF::Product: return RootOfUnity::from_sign(unr * res);
  }
  return RootOfUnity::one();
}

// ------------------------------------------------------------------- alpha

QuadExtElem solve_alpha(const MultChar& chi, const AdditiveChar& psi) {
  const auto& cfg = chi.cfg();
  const auto& Q = chi.quotient();
  const i64 p = cfg->p;
  const int n = chi.level();
  if (n < 1) throw NotPositiveDepth("solve_alpha needs level >= 1");
  if (cfg->precision < n + 3) throw AmbiguousBeyondPrecision("precision too small for level " + std::to_string(n));
  const int j = (n + 2) / 2;  // ceil((n+1)/2)
  const int d = psi.level;

  // Along F: x1 = p^{j1} s, trivial once x1 in p^{k1}. Along delta likewise.
  int j1, k1, j2, k2;
  if (!cfg->ramified) {
    j1 = j2 = j;
    k1 = k2 = n + 1;
  } else {
    j1 = (j + 1) / 2;
    k1 = (n + 2) / 2;
    j2 = j / 2;  // ceil((j-1)/2)
    k2 = (n + 1) / 2;
  }

  auto coeff = [&](int jj, int kk, bool on_delta, i64 unit_factor, int shift) -> PadicElem {
    int e = kk - jj;
    if (e <= 0) return PadicElem::zero(p);
    i64 m = nt::ipow(p, e);
    i64 r = exponent_in(chi(one_plus(cfg, jj, on_delta)), m);
    i64 num = nt::mulmod(r, nt::invmod(nt::mod(unit_factor, m), m), m);
    if (num == 0) return PadicElem::zero(p);
    return PadicElem::make(p, d - kk + shift, num, cfg->precision);
  };
  PadicElem A = coeff(j1, k1, false, 2, 0);
  PadicElem B = cfg->ramified ? coeff(j2, k2, true, 2 * cfg->zeta_unit, -1)
                              : coeff(j2, k2, true, 2 * cfg->zeta_unit, 0);
  QuadExtElem alpha(cfg, A, B);

  // The identity on the generators of (1 + p_E^j)/(1 + p_E^{n+1}).
  for (int l = j; l <= n; ++l) {
    std::size_t b = Q->layer_begin(l);
    for (std::size_t i = b; i < b + Q->layer_size(); ++i) {
      QuadExtElem g = Q->base_generator(i);
      QuadExtElem x = g - QuadExtElem::from_ints(cfg, 1, 0);
      if (chi(g) != psi((alpha * x).trace())) throw NoSolution("no alpha represents chi on layer " + std::to_string(l));
    }
  }
  return alpha;
}

i64 gamma_root(const QuadExtElem& beta, const QuadExtElem& varpi) {
  if (!beta.cfg()->ramified) throw ConfigError("gamma_root needs a ramified extension");
  if (beta.is_zero()) throw ZeroInput("gamma_root of zero");
  int k = beta.v_E();
  QuadExtElem u = beta * varpi.pow(-k);
  return u.a().mod_pk(1);
}

// ------------------------------------------------------------------ pairs

json AdmissiblePair::to_json() const {
  json j{{"p", cfg->p},
         {"zeta", cfg->zeta},
         {"precision", cfg->precision},
         {"level", level},
         {"minimal", minimal},
         {"pgl", restricts_to_aleph(chi)},
         {"galois_class", galois_class},
         {"chi", chi.to_json()}};
  if (alpha) j["alpha"] = alpha->to_json();
  if (x_pi) j["x_pi"] = x_pi->to_json();
  return j;
}

AdmissiblePair make_pair(const MultChar& chi, const AdditiveChar& psi) {
  if (!is_admissible(chi)) throw NotRegular("character does not give an admissible pair");
  AdmissiblePair P;
  P.cfg = chi.cfg();
  P.chi = chi;
  P.level = chi.level();
  P.minimal = is_minimal(chi);
  if (P.level >= 1) {
    P.alpha = solve_alpha(chi, psi);
    P.x_pi = P.alpha->b();
  }
  return P;
}

namespace {

// Characters eta of F^* with eta o N defined on Q, for the non-minimal
// reduction chi = chi' (eta o N).
std::vector<MultChar> norm_lifts(const QuotientPtr& Q) {
  const auto& cfg = Q->cfg();
  const i64 p = cfg->p;
  const int L = Q->level();
  const i64 g = nt::primitive_root(p);
  const i64 pl = nt::ipow(p, L);
  std::vector<MultChar> out;
  for (i64 s0 = 0; s0 < 4; ++s0)
    for (i64 s1 = 0; s1 < p - 1; ++s1)
      for (i64 s2 = 0; s2 < std::max<i64>(pl, 1); ++s2) {
        auto eta = [&](const PadicElem& x) {
          // x = p^v g^t (1+p)^s modulo 1 + p^{L+1}.
          i64 m = nt::ipow(p, L + 1);
          i64 u = x.unit() % m;
          i64 t = 0, gt = 1;
          while (gt % p != u % p) {
            gt = gt * g % p;
            ++t;
          }
          i64 teich = nt::powmod(nt::powmod(g, t, m), nt::ipow(p, L), m);
          i64 u1 = nt::mulmod(u, nt::invmod(teich, m), m);
          i64 s = 0, acc = 1;
          while (acc != u1 && s < pl) {
            acc = nt::mulmod(acc, 1 + p, m);
            ++s;
          }
          return RootOfUnity(s0 * x.val(), 4) * RootOfUnity(s1 * t, p - 1) * RootOfUnity(s2 * s, std::max<i64>(pl, 1));
        };
        try {
          out.push_back(norm_lift(Q, eta));
        } catch (const Error&) {
        }
      }
  return out;
}

}  // namespace

MultChar build_mu(const AdmissiblePair& pair, const AdditiveChar& psi) {
  const auto& cfg = pair.cfg;
  const auto& Q = pair.chi.quotient();
  if (!cfg->ramified)
    return MultChar::from_function(Q, [](const QuadExtElem& w) { return RootOfUnity::from_sign(w.v_E() % 2 ? -1 : 1); });
  if (!pair.minimal) {
    for (const auto& lift : norm_lifts(Q)) {
      MultChar c2 = pair.chi * lift.inverse();
      if (c2.level() >= 1 && is_admissible(c2) && is_minimal(c2)) return build_mu(make_pair(c2, psi), psi);
    }
    throw NoSolution("no minimal twist of a non-minimal pair");
  }
  QuadExtElem delta = QuadExtElem::delta(cfg);
  i64 G = gamma_root(*pair.alpha, delta);
  RootOfUnity mu_delta = RootOfUnity::from_sign(legendre(G, cfg->p)) * langlands_constant(*cfg, psi).pow(pair.level);
  return MultChar::from_function(Q, [&](const QuadExtElem& w) {
    int k = w.v_E();
    QuadExtElem u = w * delta.pow(-k);
    return RootOfUnity::from_sign(legendre(u.a().mod_pk(1), cfg->p)) * mu_delta.pow(k);
  });
}

std::vector<MultChar> aleph_extensions(const CfgPtr& cfg) {
  auto Q = UnitQuotient::make(cfg, 0, 4);
  std::vector<MultChar> out;
  for_each_char(Q, [&](const MultChar& c) {
    if (restricts_to_aleph(c)) out.push_back(c);
  });
  return out;
}

MultChar build_tau_tilde(const CfgPtr& cfg, int choice) {
  auto ext = aleph_extensions(cfg);
  if (choice < 0 || static_cast<std::size_t>(choice) >= ext.size()) throw OutOfRange("no such extension of aleph");
  return ext[static_cast<std::size_t>(choice)];
}

void for_each_char(const QuotientPtr& Q, const std::function<void(const MultChar&)>& f) {
  const auto& d = Q->orders();
  MultChar::Vec e(d.size(), 0);
  while (true) {
    f(MultChar(Q, e));
    std::size_t i = d.size();
    while (i > 0) {
      --i;
      if (++e[i] < d[i]) break;
      e[i] = 0;
      if (i == 0) return;
    }
    if (d.empty()) return;
  }
}

std::vector<AdmissiblePair> enumerate_pairs(const CfgPtr& cfg, int max_level, bool pgl_only, int psi_level) {
  if (max_level > cfg->precision - 2) throw PrecisionExhausted("max_level exceeds precision - 2");
  auto Q = UnitQuotient::make(cfg, max_level, 4);
  AdditiveChar psi = standard_psi(*cfg, psi_level);

  std::vector<std::pair<UnitQuotient::Vec, RootOfUnity>> fcons;
  for (const auto& x : f_star_generators(*cfg)) fcons.emplace_back(Q->dlog(QuadExtElem::from_F(cfg, x)), aleph(*cfg, x));

  std::vector<AdmissiblePair> out;
  std::map<MultChar::Vec, int> cls;
  int next = 0;
  for_each_char(Q, [&](const MultChar& chi) {
    if (pgl_only)
      for (const auto& [y, v] : fcons)
        if (chi.on_coords(y) != v) return;
    if (!is_admissible(chi)) return;
    AdmissiblePair P = make_pair(chi, psi);
    auto it = cls.find(chi.galois_conj().exponents());
    P.galois_class = it != cls.end() ? it->second : next++;
    cls[chi.exponents()] = P.galois_class;
    out.push_back(std::move(P));
  });
  return out;
}

}  // namespace llc
