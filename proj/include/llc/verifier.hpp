#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "llc/characters.hpp"
#include "llc/finite_gl2.hpp"
#include "llc/torus_cover.hpp"

namespace llc {

/// A Langlands parameter Ind_{W_E}^{W_F} chi, carried by its pair.
struct WeilParamSpec {
  AdmissiblePair pair;
  /// det = chi|_{F^*} aleph on the generators of F^*.
  std::vector<RootOfUnity> determinant;
  bool is_pgl() const;
  static WeilParamSpec from_pair(const AdmissiblePair& pair);
};

GenuineChar param_to_genuine(const WeilParamSpec& param);

struct CorrespondenceRecord {
  WeilParamSpec param;
  MultChar twist;
  json verdicts;
  json to_json() const;
};

struct VerifyConfig {
  std::int64_t p = 3;
  std::int64_t zeta = 0;  // 0: least quadratic nonresidue mod p
  int precision = 8;
  int max_level = 2;
  std::uint64_t seed = 20240611;
  bool timings = false;

  /// Validated field configuration; ConfigError on bad input.
  CfgPtr field() const;
};

/// Per-assertion bookkeeping for a suite report.
class Checks {
 public:
  void add(const std::string& name, bool pass, std::size_t checked, json witnesses = json::array());
  void note(const std::string& name, json value);
  bool pass() const { return pass_; }
  json to_json() const;

 private:
  json assertions_ = json::array();
  json notes_ = json::object();
  bool pass_ = true;
};

/// n(w) by brute-force search over c = p^s u (s in [-3, 8], u a unit mod
/// p^digits) for the largest k with w/c in 1 + p_E^k.
Rational depth_by_search(const QuadExtElem& w, int digits);

/// The three quadratic extensions of Q_p: unramified, F(sqrt p),
/// F(sqrt(n p)) with n the least nonresidue.
std::vector<CfgPtr> quadratic_extensions(std::int64_t p, int precision);

struct SuiteResult {
  json report;
  bool pass = false;
};

/// Suites: weil-index, constants, cover, matching, depth-zero, uniqueness,
/// naive-fails, all. ConfigError for an unknown name.
SuiteResult run_suite(const std::string& name, const VerifyConfig& cfg);

std::vector<std::string> suite_names();

}  // namespace llc
