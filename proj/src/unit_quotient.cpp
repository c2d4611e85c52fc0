#include "llc/unit_quotient.hpp"

#include <cstdlib>
#include <numeric>

#include "llc/errors.hpp"
#include "llc/numtheory.hpp"

namespace llc {

using nt::i64;
using Mat = std::vector<std::vector<i64>>;

// ---------------------------------------------------------------------- SNF

namespace {

Mat identity(std::size_t n) {
  Mat I(n, std::vector<i64>(n, 0));
  for (std::size_t i = 0; i < n; ++i) I[i][i] = 1;
  return I;
}

i64 checked(__int128 v) {
  if (v > INT64_MAX / 4 || v < -(INT64_MAX / 4)) throw std::overflow_error("SNF entry overflow");
  return static_cast<i64>(v);
}

}  // namespace

SNFResult smith_normal_form(Mat A) {
  const std::size_t r = A.size(), c = r ? A[0].size() : 0;
  Mat U = identity(r), V = identity(c), Vi = identity(c);

  auto row_add = [&](std::size_t dst, std::size_t src, i64 k) {  // row_dst += k row_src
    for (std::size_t j = 0; j < c; ++j) A[dst][j] = checked(A[dst][j] + static_cast<__int128>(k) * A[src][j]);
    for (std::size_t j = 0; j < r; ++j) U[dst][j] = checked(U[dst][j] + static_cast<__int128>(k) * U[src][j]);
  };
  auto col_add = [&](std::size_t dst, std::size_t src, i64 k) {  // col_dst += k col_src
    for (std::size_t i = 0; i < r; ++i) A[i][dst] = checked(A[i][dst] + static_cast<__int128>(k) * A[i][src]);
    for (std::size_t i = 0; i < c; ++i) V[i][dst] = checked(V[i][dst] + static_cast<__int128>(k) * V[i][src]);
    for (std::size_t j = 0; j < c; ++j) Vi[src][j] = checked(Vi[src][j] - static_cast<__int128>(k) * Vi[dst][j]);
  };
  auto row_swap = [&](std::size_t i, std::size_t j) {
    std::swap(A[i], A[j]);
    std::swap(U[i], U[j]);
  };
  auto col_swap = [&](std::size_t i, std::size_t j) {
    for (auto& row : A) std::swap(row[i], row[j]);
    for (auto& row : V) std::swap(row[i], row[j]);
    std::swap(Vi[i], Vi[j]);
  };

  const std::size_t n = std::min(r, c);
  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      // pivot: smallest nonzero |entry| in the trailing block
      std::size_t pi = r, pj = c;
      for (std::size_t i = t; i < r; ++i)
        for (std::size_t j = t; j < c; ++j)
          if (A[i][j] != 0 && (pi == r || std::llabs(A[i][j]) < std::llabs(A[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi == r) break;
      row_swap(t, pi);
      col_swap(t, pj);
      bool clean = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (A[i][t] == 0) continue;
        row_add(i, t, -(A[i][t] / A[t][t]));
        if (A[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (A[t][j] == 0) continue;
        col_add(j, t, -(A[t][j] / A[t][t]));
        if (A[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      bool divides = true;
      for (std::size_t i = t + 1; i < r && divides; ++i)
        for (std::size_t j = t + 1; j < c; ++j)
          if (A[i][j] % A[t][t] != 0) {
            row_add(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (A[t][t] < 0) {
      for (std::size_t j = 0; j < c; ++j) A[t][j] = -A[t][j];
      for (std::size_t j = 0; j < r; ++j) U[t][j] = -U[t][j];
    }
  }
  SNFResult res;
  for (std::size_t t = 0; t < n; ++t) res.diag.push_back(A[t][t]);
  res.U = std::move(U);
  res.V = std::move(V);
  res.Vinv = std::move(Vi);
  return res;
}

// ------------------------------------------------------------- UnitQuotient

UnitQuotient::R UnitQuotient::rmul(R x, R y) const {
  i64 m = pK_;
  return {nt::mod(nt::mulmod(x.a, y.a, m) + nt::mulmod(nt::mulmod(x.b, y.b, m), zeta_mod_, m), m),
          nt::mod(nt::mulmod(x.a, y.b, m) + nt::mulmod(x.b, y.a, m), m)};
}

UnitQuotient::R UnitQuotient::rinv(R x) const {
  i64 m = pK_;
  i64 n = nt::mod(nt::mulmod(x.a, x.a, m) - nt::mulmod(nt::mulmod(x.b, x.b, m), zeta_mod_, m), m);
  i64 ni = nt::invmod(n, m);
  return {nt::mulmod(x.a, ni, m), nt::mod(-nt::mulmod(x.b, ni, m), m)};
}

UnitQuotient::R UnitQuotient::rpow(R x, i64 k) const {
  if (k < 0) {
    x = rinv(x);
    k = -k;
  }
  R r{1 % pK_, 0};
  while (k > 0) {
    if (k & 1) r = rmul(r, x);
    x = rmul(x, x);
    k >>= 1;
  }
  return r;
}

UnitQuotient::R UnitQuotient::to_ring(const QuadExtElem& u) const {
  return {u.a().mod_pk(K_), u.b().mod_pk(K_)};
}

i64 UnitQuotient::residue_log(i64 a, i64 b) const {
  i64 p = cfg_->p;
  i64 idx = nt::mod(a, p) + (cfg_->ramified ? 0 : p * nt::mod(b, p));
  i64 l = log_table_.at(static_cast<std::size_t>(idx));
  if (l < 0) throw ZeroInput("residue is zero");
  return l;
}

std::size_t UnitQuotient::layer_begin(int j) const { return 2 + (j - 1) * layer_size(); }

UnitQuotient::Vec UnitQuotient::unit_coords(R u) const {
  const i64 p = cfg_->p;
  Vec out(base_size(), 0);
  i64 t = residue_log(u.a, u.b);
  out[1] = t;
  R u1 = rmul(u, rpow(omega_, -t));
  for (int j = 1; j <= level_; ++j) {
    std::size_t base = layer_begin(j);
    if (!cfg_->ramified) {
      i64 pj = nt::ipow(p, j);
      i64 x = nt::mod(u1.a - 1, pK_) / pj % p;
      i64 y = u1.b / pj % p;
      out[base] = x;
      out[base + 1] = y;
      u1 = rmul(u1, rpow(layer_gens_[base - 2], -x));
      u1 = rmul(u1, rpow(layer_gens_[base - 1], -y));
    } else {
      i64 pi = nt::ipow(p, j / 2);
      i64 x = (j % 2 == 0) ? nt::mod(u1.a - 1, pK_) / pi % p : u1.b / pi % p;
      out[base] = x;
      u1 = rmul(u1, rpow(layer_gens_[base - 2], -x));
    }
  }
  return out;
}

UnitQuotient::Vec UnitQuotient::base_coords(const QuadExtElem& w) const {
  int k = w.v_E();
  QuadExtElem u = w * QuadExtElem::uniformizer(cfg_).pow(-k);
  Vec out = unit_coords(to_ring(u));
  out[0] = k;
  return out;
}

UnitQuotient::Vec UnitQuotient::from_base(const Vec& x) const {
  Vec y(kept_.size(), 0);
  for (std::size_t s = 0; s < kept_.size(); ++s) {
    std::size_t i = kept_[s];
    __int128 acc = 0;
    for (std::size_t j = 0; j < x.size(); ++j) acc += static_cast<__int128>(x[j]) * V_[j][i];
    y[s] = nt::mod(static_cast<i64>(acc % orders_[s]), orders_[s]);
  }
  return y;
}

UnitQuotient::Vec UnitQuotient::dlog(const QuadExtElem& w) const { return from_base(base_coords(w)); }

i64 UnitQuotient::group_order() const {
  i64 n = 1;
  for (auto d : orders_) n *= d;
  return n;
}

QuadExtElem UnitQuotient::base_generator(std::size_t i) const {
  if (i == 0) return QuadExtElem::uniformizer(cfg_);
  R g = i == 1 ? omega_ : layer_gens_[i - 2];
  i64 p = cfg_->p;
  return {cfg_, PadicElem::make(p, 0, g.a, K_), PadicElem::make(p, 0, g.b, K_)};
}

std::shared_ptr<const UnitQuotient> UnitQuotient::make(CfgPtr cfg, int level, int M) {
  if (level < 0 || M < 1) throw ConfigError("unit quotient needs level >= 0 and M >= 1");
  if (cfg->precision < level + 2)
    throw PrecisionExhausted("precision " + std::to_string(cfg->precision) + " < level + 2");
  std::shared_ptr<UnitQuotient> Q(new UnitQuotient());
  Q->cfg_ = cfg;
  Q->level_ = level;
  Q->M_ = M;
  const i64 p = cfg->p;
  Q->K_ = cfg->ramified ? (level + 2) / 2 : level + 1;
  Q->pK_ = nt::ipow(p, Q->K_);
  Q->zeta_mod_ = nt::mod(cfg->zeta, Q->pK_);

  // residue field generator and log table
  const i64 qE = cfg->q_E();
  Q->log_table_.assign(static_cast<std::size_t>(cfg->ramified ? p : p * p), -1);
  auto res_mul = [&](std::pair<i64, i64> x, std::pair<i64, i64> y) {
    return std::pair<i64, i64>{nt::mod(x.first * y.first + cfg->zeta * x.second * y.second, p),
                               nt::mod(x.first * y.second + x.second * y.first, p)};
  };
  std::pair<i64, i64> gen{0, 0};
  for (i64 idx = 1; idx < static_cast<i64>(Q->log_table_.size()); ++idx) {
    std::pair<i64, i64> g{idx % p, idx / p};
    auto x = g;
    i64 ord = 1;
    while (!(x.first == 1 && x.second == 0)) {
      x = res_mul(x, g);
      ++ord;
      if (ord > qE) break;
    }
    if (ord == qE - 1) {
      gen = g;
      break;
    }
  }
  {
    std::pair<i64, i64> x{1, 0};
    for (i64 l = 0; l < qE - 1; ++l) {
      Q->log_table_[static_cast<std::size_t>(x.first + (cfg->ramified ? 0 : p * x.second))] = l;
      x = res_mul(x, gen);
    }
  }
  Q->omega_ = Q->rpow(R{gen.first, gen.second}, nt::ipow(p, 2 * Q->K_));

  Q->base_names_ = {"varpi", "omega"};
  for (int j = 1; j <= level; ++j) {
    if (!cfg->ramified) {
      i64 pj = nt::ipow(p, j);
      Q->layer_gens_.push_back(R{nt::mod(1 + pj, Q->pK_), 0});
      Q->layer_gens_.push_back(R{1 % Q->pK_, nt::mod(pj, Q->pK_)});
      Q->base_names_.push_back("1+p^" + std::to_string(j));
      Q->base_names_.push_back("1+p^" + std::to_string(j) + "d");
    } else {
      i64 pi = nt::ipow(p, j / 2);
      if (j % 2 == 0) {
        Q->layer_gens_.push_back(R{nt::mod(1 + pi, Q->pK_), 0});
        Q->base_names_.push_back("1+p^" + std::to_string(j / 2));
      } else {
        Q->layer_gens_.push_back(R{1 % Q->pK_, nt::mod(pi, Q->pK_)});
        Q->base_names_.push_back("1+p^" + std::to_string(j / 2) + "d");
      }
    }
  }

  const std::size_t m = Q->base_size();
  Mat rel(m, std::vector<i64>(m, 0));
  rel[0][0] = M;
  rel[1][1] = qE - 1;
  for (std::size_t g = 2; g < m; ++g) {
    Vec c = Q->unit_coords(Q->rpow(Q->layer_gens_[g - 2], p));
    for (std::size_t j = 0; j < m; ++j) rel[g][j] = -c[j];
    rel[g][g] += p;
  }
  SNFResult snf = smith_normal_form(rel);
  Q->V_ = snf.V;
  for (std::size_t i = 0; i < snf.diag.size(); ++i) {
    if (snf.diag[i] == 1) continue;
    Q->kept_.push_back(i);
    Q->orders_.push_back(snf.diag[i]);
  }

  i64 expected = M * (qE - 1);
  for (int j = 0; j < level; ++j) expected *= qE;
  if (Q->group_order() != expected)
    throw InternalMismatch("unit quotient order " + std::to_string(Q->group_order()) + " != " +
                           std::to_string(expected));

  // generators f_i = prod_j g_j^{Vinv[i][j]}
  i64 unit_exp = (qE - 1) * nt::ipow(p, 2 * Q->K_);
  for (std::size_t i : Q->kept_) {
    const auto& row = snf.Vinv[i];
    R u{1 % Q->pK_, 0};
    u = Q->rmul(u, Q->rpow(Q->omega_, nt::mod(row[1], unit_exp)));
    for (std::size_t j = 2; j < m; ++j) u = Q->rmul(u, Q->rpow(Q->layer_gens_[j - 2], nt::mod(row[j], unit_exp)));
    QuadExtElem f(cfg, PadicElem::make(p, 0, u.a, Q->K_), PadicElem::make(p, 0, u.b, Q->K_));
    f = f * QuadExtElem::uniformizer(cfg).pow(nt::mod(row[0], M));
    Q->gens_.push_back(f);
  }
  return Q;
}

}  // namespace llc
