// Acceptance run: one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "llc/numtheory.hpp"
#include "llc/verifier.hpp"

using namespace llc;
using i64 = std::int64_t;

namespace {

struct Timed {
  json report;
  double seconds = 0;
};

Timed run(const std::string& suite, i64 p, i64 zeta, int max_level = 2) {
  VerifyConfig vc;
  vc.p = p;
  vc.zeta = zeta;
  vc.max_level = max_level;
  auto t0 = std::chrono::steady_clock::now();
  auto r = run_suite(suite, vc);
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return {r.report, s};
}

const json* find_assertion(const json& report, const std::string& name) {
  for (const auto& a : report.at("assertions"))
    if (a.at("name") == name) return &a;
  return nullptr;
}

bool assertion_ok(const json& report, const std::string& name, std::size_t min_checked = 1) {
  const json* a = find_assertion(report, name);
  return a && a->at("pass").get<bool>() && a->at("checked").get<std::size_t>() >= min_checked;
}

std::vector<i64> zetas(i64 p) {
  i64 n = nt::least_nonresidue(p);
  return {n, p, n * p};
}

int failures = 0;

void line(int n, const std::string& what, bool pass, double seconds, double limit, const std::string& detail = "") {
  bool ok = pass && seconds < limit;
  if (!ok) ++failures;
  std::printf("%s criterion %d: %s (%.2fs, limit %.0fs)%s%s\n", ok ? "PASS" : "FAIL", n, what.c_str(), seconds, limit,
              detail.empty() ? "" : " ", detail.c_str());
  std::fflush(stdout);
}

}  // namespace

int main() {
  // 1. Weil index identities.
  {
    bool ok = true;
    double t = 0;
    for (i64 p : {3, 5, 7}) {
      auto r = run("weil-index", p, 0);
      ok = ok && r.report.at("pass").get<bool>();
      t += r.seconds;
    }
    line(1, "Weil index identities, p in {3,5,7}", ok, t, 10);
  }

  // 2, 3. Langlands constant and gamma(alpha, Y).
  {
    bool lam = true, gay = true;
    double t = 0;
    for (i64 p : {3, 5}) {
      auto r = run("constants", p, 0);
      lam = lam && assertion_ok(r.report, "Langlands constant: norm-form index = gamma(zeta, psi)(-1, zeta)", 9);
      gay = gay && assertion_ok(r.report, "gamma(alpha, Y): Gram-matrix route = closed form", 300);
      t += r.seconds;
    }
    line(2, "Langlands constant, two routes, six (p, zeta) classes", lam, t, 5);
    line(3, "gamma(alpha, Y) dual route, 100 random per (p, E)", gay, t, 30);
  }

  // 4, 5. Filtration oracle and cover.
  {
    bool filt = true, cover = true;
    double t = 0;
    for (i64 p : {3, 5})
      for (i64 z : zetas(p)) {
        auto r = run("cover", p, z);
        filt = filt && assertion_ok(r.report, "n(w) agrees with brute-force coset search", 200);
        cover = cover && r.report.at("pass").get<bool>();
        t += r.seconds;
      }
    line(4, "n(w) against coset search, 200 per configuration", filt, t, 60);
    line(5, "cover suite on exhaustive quotients", cover, t, 60);
  }

  // 6, 7. Positive-depth matching and twist necessity.
  {
    bool match = true, naive = true;
    double tm = 0, tn = 0;
    std::size_t pairs = 0;
    for (i64 p : {3, 5})
      for (i64 z : zetas(p)) {
        auto m = run("matching", p, z);
        match = match && m.report.at("pass").get<bool>() &&
                assertion_ok(m.report, "at least 50 sample points per pair") &&
                m.report.at("notes").at("pairs").get<std::size_t>() > 0;
        pairs += m.report.at("notes").at("pairs").get<std::size_t>();
        tm += m.seconds;
        auto n = run("naive-fails", p, z);
        naive = naive && n.report.at("pass").get<bool>();
        tn += n.seconds;
      }
    line(6, "F(chi~) = twisted supercuspidal kernel, level <= 2", match, tm, 600,
         "[" + std::to_string(pairs) + " pairs]");
    line(7, "trivial twist mismatches in every configuration", naive, tn, 60);
  }

  // 8. Depth zero.
  {
    bool ok = true;
    double t = 0;
    for (i64 q : {3, 5}) {
      auto r = run("depth-zero", q, 0);
      ok = ok && r.report.at("pass").get<bool>();
      t += r.seconds;
    }
    line(8, "depth-zero oracle and F*A matching, q in {3,5}", ok, t, 300);
  }

  // 9. Uniqueness.
  {
    bool ok = true;
    double t = 0;
    std::set<int> signs;
    for (i64 p : {3, 5}) {
      auto r = run("uniqueness", p, 0, 1);
      ok = ok && r.report.at("pass").get<bool>();
      for (const auto& c : r.report.at("notes").at("cross_cartan")) signs.insert(c.at("minus_one_symbol").get<int>());
      t += r.seconds;
    }
    line(9, "same-Cartan, cross-Cartan, cross-depth separation", ok && signs.size() == 2, t, 600);
  }

  // 10. Determinism and full run.
  {
    auto a = run("all", 3, 0), b = run("all", 3, 0);
    bool same = a.report.dump() == b.report.dump();
    line(10, "byte-identical repeated full runs", same && a.report.at("pass").get<bool>(), a.seconds + b.seconds,
         1800);
  }

  return failures == 0 ? 0 : 1;
}
