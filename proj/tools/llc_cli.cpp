// Command-line front end: verification suites, constant tables, pair
// enumeration, kernel comparison and finite GL(2) character tables.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "llc/errors.hpp"
#include "llc/numtheory.hpp"
#include "llc/verifier.hpp"

using namespace llc;
using i64 = std::int64_t;

namespace {

void emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << text << "\n";
    return;
  }
  std::ofstream f(out);
  if (!f) throw ConfigError("cannot write " + out);
  f << text << "\n";
}

json read_json(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot read " + path);
  try {
    return json::parse(f);
  } catch (const json::exception& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

std::string class_label(const FiniteGL2::ConjClass& c) {
  using T = FiniteGL2::ClassType;
  switch (c.type) {
    case T::Central: return "central(" + std::to_string(c.z) + ")";
    case T::NonSemisimple: return "unipotent(" + std::to_string(c.z) + ")";
    case T::Split: return "split(" + std::to_string(c.x) + "," + std::to_string(c.y) + ")";
    case T::Elliptic: return "elliptic(" + std::to_string(c.lambda.a) + "+" + std::to_string(c.lambda.b) + "d)";
  }
  return "?";
}

int run_verify(const VerifyConfig& vc, const std::string& suite, const std::string& out) {
  SuiteResult r = run_suite(suite, vc);
  emit(r.report.dump(2), out);
  std::cerr << suite << ": " << (r.pass ? "PASS" : "FAIL") << "\n";
  return r.pass ? 0 : 1;
}

int run_constants(const VerifyConfig& vc, bool zeta_given, const std::string& format, const std::string& out) {
  std::vector<CfgPtr> fields;
  if (zeta_given)
    fields.push_back(vc.field());
  else
    fields = quadratic_extensions(vc.p, vc.precision);
  json rows = json::array();
  std::string csv = "p,zeta,ramified,psi_level,gamma_psi,gamma_zeta_psi,hilbert_minus1_zeta,lambda\n";
  auto rs = [](const RootOfUnity& r) { return std::to_string(r.num()) + "/" + std::to_string(r.den()); };
  for (const auto& E : fields)
    for (int level = 0; level <= 2; ++level) {
      AdditiveChar psi{E->p, level};
      RootOfUnity g = gamma_F(psi), gz = weil_index(E->zeta_elem(), psi), lam = langlands_constant(*E, psi);
      int h = hilbert(E->F(-1), E->zeta_elem());
      rows.push_back({{"p", E->p},
                      {"zeta", E->zeta},
                      {"ramified", E->ramified},
                      {"psi_level", level},
                      {"gamma_psi", {g.num(), g.den()}},
                      {"gamma_zeta_psi", {gz.num(), gz.den()}},
                      {"hilbert_minus1_zeta", h},
                      {"lambda", {lam.num(), lam.den()}}});
      csv += std::to_string(E->p) + "," + std::to_string(E->zeta) + "," + (E->ramified ? "1" : "0") + "," +
             std::to_string(level) + "," + rs(g) + "," + rs(gz) + "," + std::to_string(h) + "," + rs(lam) + "\n";
    }
  if (format == "csv") {
    csv.pop_back();
    emit(csv, out);
  } else {
    emit(rows.dump(2), out);
  }
  return 0;
}

int run_enumerate(const VerifyConfig& vc, bool pgl_only, const std::string& out) {
  auto cfg = vc.field();
  json arr = json::array();
  for (const auto& P : enumerate_pairs(cfg, vc.max_level, pgl_only)) arr.push_back(P.to_json());
  emit(arr.dump(2), out);
  return 0;
}

int run_compare(const std::string& pair_path, const std::string& twist, const std::string& range, std::uint64_t seed,
                bool values, const std::string& out) {
  json pj = read_json(pair_path);
  if (pj.is_array()) {
    if (pj.empty()) throw ConfigError("empty pair list");
    pj = pj[0];
  }
  auto cfg = FieldConfig::make(pj.at("p").get<i64>(), pj.at("zeta").get<i64>(), pj.value("precision", 8));
  const json& cj = pj.at("chi");
  auto Q = UnitQuotient::make(cfg, cj.value("quotient_level", cj.at("level").get<int>()), 4);
  MultChar chi = MultChar::from_json(Q, cj);
  AdditiveChar psi = standard_psi(*cfg);
  AdmissiblePair P = make_pair(chi, psi);
  MultChar tw = MultChar::trivial(Q);
  if (twist == "mu")
    tw = build_mu(P, psi);
  else if (twist != "trivial")
    tw = MultChar::from_json(Q, read_json(twist));
  int r = P.level;
  if (range != "auto") {
    try {
      r = std::stoi(range);
    } catch (const std::exception&) {
      throw ConfigError("--range must be 'auto' or an integer");
    }
  }
  auto sample = sample_points(cfg, r, seed);
  auto rep = compare_kernels(P, tw, sample, build_tau_tilde(cfg, 0), psi);
  json j = rep.to_json(values);
  j["pair"] = P.to_json();
  j["twist"] = tw.to_json();
  emit(j.dump(2), out);
  return rep.all_equal ? 0 : 1;
}

int run_table(i64 q, const std::string& format, const std::string& out) {
  if (q < 3 || !nt::is_prime(q)) throw ConfigError("q must be an odd prime");
  auto G = FiniteGL2::make(q, nt::least_nonresidue(q));
  auto table = G->character_table();
  const auto& cls = G->classes();
  if (format == "csv") {
    std::string s = "character";
    for (const auto& c : cls) s += "," + class_label(c);
    s += "\nclass_size";
    for (const auto& c : cls) s += "," + std::to_string(c.size);
    for (const auto& [name, f] : table) {
      s += "\n" + name;
      for (const auto& v : f) s += ",\"" + v.to_string() + "\"";
    }
    emit(s, out);
  } else {
    json j = json::object();
    json cj = json::array();
    for (const auto& c : cls) cj.push_back(json{{"label", class_label(c)}, {"size", c.size}});
    j["classes"] = cj;
    json rows = json::object();
    for (const auto& [name, f] : table) {
      json row = json::array();
      for (const auto& v : f) row.push_back(v.to_json());
      rows[name] = row;
    }
    j["characters"] = rows;
    emit(j.dump(2), out);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for the tame local Langlands correspondence for GL(2) and PGL(2)"};
  app.require_subcommand(1);

  VerifyConfig vc;
  std::string suite = "all", out, format = "json", pair_path, twist = "mu", range = "auto";
  bool pgl_only = false, values = false;
  i64 q = 3;

  auto add_field = [&](CLI::App* sub) {
    sub->add_option("--p", vc.p, "odd prime")->capture_default_str();
    sub->add_option("--zeta", vc.zeta, "E = F(sqrt zeta); 0 for the unramified extension")->capture_default_str();
    sub->add_option("--precision", vc.precision, "p-adic digits")->capture_default_str();
  };

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  add_field(verify);
  verify->add_option("--suite", suite)->check(CLI::IsMember(suite_names()))->capture_default_str();
  verify->add_option("--max-level", vc.max_level)->capture_default_str();
  verify->add_option("--seed", vc.seed)->capture_default_str();
  verify->add_option("--out", out, "report path (default stdout)");
  verify->add_flag("--timings", vc.timings, "include wall-clock times in the report");

  auto* constants = app.add_subcommand("constants", "Weil indices and Langlands constants");
  add_field(constants);
  constants->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  constants->add_option("--out", out);

  auto* enumerate = app.add_subcommand("enumerate-pairs", "admissible pairs up to a level");
  add_field(enumerate);
  enumerate->add_option("--max-level", vc.max_level)->capture_default_str();
  enumerate->add_flag("--pgl-only", pgl_only, "only pairs with chi|F^* = aleph");
  enumerate->add_option("--out", out);

  auto* compare = app.add_subcommand("compare", "compare F(chi~) with the kernel of pi_{chi twist}");
  compare->add_option("--pair", pair_path, "pair JSON (from enumerate-pairs)")->required();
  compare->add_option("--twist", twist, "mu, trivial, or a character JSON file")->capture_default_str();
  compare->add_option("--range", range, "auto or an integer r")->capture_default_str();
  compare->add_option("--seed", vc.seed)->capture_default_str();
  compare->add_flag("--values", values, "include kernel values per sample");
  compare->add_option("--out", out);

  auto* table = app.add_subcommand("character-table", "character table of GL(2, F_q)");
  table->add_option("--q", q)->capture_default_str();
  table->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  table->add_option("--out", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*verify) return run_verify(vc, suite, out);
    if (*constants) return run_constants(vc, constants->count("--zeta") > 0, format, out);
    if (*enumerate) return run_enumerate(vc, pgl_only, out);
    if (*compare) return run_compare(pair_path, twist, range, vc.seed, values, out);
    if (*table) return run_table(q, format, out);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
