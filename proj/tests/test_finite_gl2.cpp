#include "doctest.h"
#include "llc/finite_gl2.hpp"
#include "llc/numtheory.hpp"

using namespace llc;
using i64 = std::int64_t;

TEST_CASE("GL(2, F_q) classes") {
  for (i64 q : {3, 5, 7}) {
    auto G = FiniteGL2::make(q, nt::least_nonresidue(q));
    CHECK(G->order() == (q * q - 1) * (q * q - q));
    CHECK(static_cast<i64>(G->classes().size()) == q * q - 1);
    i64 total = 0;
    for (const auto& c : G->classes()) {
      total += c.size;
      CHECK(c.size * c.centralizer == G->order());
    }
    CHECK(total == G->order());
  }
}

TEST_CASE("finite field F_q(dbar)") {
  Fq2Field F{5, 2};
  Fq2 g = F.generator();
  CHECK(F.pow(g, 24) == Fq2{1, 0});
  CHECK(!(F.pow(g, 12) == Fq2{1, 0}));
  CHECK(!(F.pow(g, 8) == Fq2{1, 0}));
  Fq2 x{2, 3};
  CHECK(F.frob(x) == F.pow(x, 5));
  CHECK(F.in_Fq(F.mul(x, F.frob(x))));
}

TEST_CASE("character table of GL(2, F_3) is orthonormal") {
  auto G = FiniteGL2::make(3, 2);
  auto table = G->character_table();
  CHECK(table.size() == G->classes().size());
  for (std::size_t i = 0; i < table.size(); ++i)
    for (std::size_t j = 0; j < table.size(); ++j)
      CHECK(G->inner(table[i].second, table[j].second) == CycloValue(std::int64_t{i == j ? 1 : 0}));
}

TEST_CASE("cuspidal counts") {
  for (i64 q : {3, 5}) {
    auto G = FiniteGL2::make(q, nt::least_nonresidue(q));
    int regular = 0, cuspidal = 0;
    for (i64 k = 0; k < q * q - 1; ++k) {
      FiniteTorusChar th(G->field(), G->field().generator(), k);
      if (!th.regular()) continue;
      ++regular;
      if (nt::mod(k * q, q * q - 1) > k) ++cuspidal;
    }
    CHECK(regular == q * (q - 1));
    CHECK(cuspidal == q * (q - 1) / 2);
  }
}

TEST_CASE("Deligne-Lusztig restriction is minus the cuspidal character") {
  auto G = FiniteGL2::make(5, 2);
  for (i64 k = 0; k < 24; ++k) {
    FiniteTorusChar th(G->field(), G->field().generator(), k);
    if (!th.regular()) continue;
    auto chi = G->cuspidal_oracle(th);
    for (std::size_t c = 0; c < G->classes().size(); ++c)
      if (G->classes()[c].type == FiniteGL2::ClassType::Elliptic) CHECK(G->dl_restriction(th, c) == -chi[c]);
  }
}

TEST_CASE("Steinberg character values") {
  auto G = FiniteGL2::make(3, 2);
  auto st = G->steinberg(0);
  for (std::size_t c = 0; c < G->classes().size(); ++c) {
    const auto& cl = G->classes()[c];
    i64 expect = cl.type == FiniteGL2::ClassType::Central ? 3
                 : cl.type == FiniteGL2::ClassType::Split ? 1
                 : cl.type == FiniteGL2::ClassType::Elliptic ? -1
                                                              : 0;
    CHECK(st[c] == CycloValue(expect));
  }
}
