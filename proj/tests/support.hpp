#pragma once

#include <vector>

#include "llc/unit_quotient.hpp"

namespace llc::test {

// Every element of the quotient as a product of its generators.
inline std::vector<QuadExtElem> all_elements(const QuotientPtr& Q) {
  const auto& d = Q->orders();
  std::vector<std::int64_t> e(d.size(), 0);
  std::vector<QuadExtElem> out;
  for (;;) {
    QuadExtElem w = QuadExtElem::from_ints(Q->cfg(), 1, 0);
    for (std::size_t i = 0; i < d.size(); ++i) w = w * Q->generators()[i].pow(e[i]);
    out.push_back(w);
    std::size_t i = 0;
    while (i < d.size() && ++e[i] == d[i]) e[i++] = 0;
    if (i == d.size()) return out;
  }
}

}  // namespace llc::test
