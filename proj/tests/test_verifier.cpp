#include "doctest.h"
#include "llc/errors.hpp"
#include "llc/verifier.hpp"

using namespace llc;

TEST_CASE("reports are deterministic") {
  VerifyConfig vc;
  vc.max_level = 1;
  auto a = run_suite("constants", vc), b = run_suite("constants", vc);
  CHECK(a.report.dump() == b.report.dump());
  CHECK(a.pass);
}

TEST_CASE("timings appear only on request") {
  VerifyConfig vc;
  CHECK(!run_suite("weil-index", vc).report.contains("elapsed_ms"));
  vc.timings = true;
  CHECK(run_suite("weil-index", vc).report.contains("elapsed_ms"));
}

TEST_CASE("configuration errors") {
  VerifyConfig vc;
  CHECK_THROWS_AS(run_suite("nope", vc), ConfigError);
  vc.p = 9;
  CHECK_THROWS_AS(vc.field(), ConfigError);
}

TEST_CASE("PGL parameters map to genuine characters") {
  VerifyConfig vc;
  auto cfg = vc.field();
  for (const auto& P : enumerate_pairs(cfg, 1, false)) {
    auto param = WeilParamSpec::from_pair(P);
    CHECK(param.is_pgl() == restricts_to_aleph(P.chi));
    if (param.is_pgl())
      CHECK_NOTHROW(param_to_genuine(param));
    else
      CHECK_THROWS_AS(param_to_genuine(param), NotGenuine);
  }
}

TEST_CASE("three quadratic extensions") {
  auto e = quadratic_extensions(7, 6);
  REQUIRE(e.size() == 3);
  CHECK(!e[0]->ramified);
  CHECK(e[1]->ramified);
  CHECK(e[2]->ramified);
}
