#ifndef FLAGORIENT_TESTS_ORACLE_HPP
#define FLAGORIENT_TESTS_ORACLE_HPP

// Test-only oracle: generates positive roots by closing the simple roots
// under *reflections* (orbit closure), independently of the root-string
// algorithm used by the library.  Kept deliberately separate so the two
// enumeration strategies check each other.

#include <set>
#include <vector>

#include "flagorient/rootsys.hpp"

namespace flagorient::oracle {

inline std::set<std::vector<int>> positive_roots(Family fam, int rank) {
  // Reuse only the Gram matrix of the built system; the closure itself is
  // plain reflection arithmetic on coefficient vectors.
  RootSystemSpec spec;
  spec.family = fam;
  spec.rank = rank;
  RootSystem rs = build_root_system(spec);

  auto ip = [&](std::vector<int> const &u, std::vector<int> const &v) {
    return rs.inner(u, v);
  };

  std::set<std::vector<int>> roots;
  std::vector<std::vector<int>> frontier;
  for (int i = 0; i < rank; ++i) {
    std::vector<int> e(rank, 0);
    e[i] = 1;
    roots.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (auto const &c : frontier) {
      for (int i = 0; i < rank; ++i) {
        std::vector<int> ei(rank, 0);
        ei[i] = 1;
        Rat k = 2 * ip(ei, c) / ip(ei, ei);
        std::vector<int> img(c);
        img[i] -= static_cast<int>(k.numerator());  // k integral for roots
        if (roots.insert(img).second) next.push_back(img);
      }
    }
    frontier = std::move(next);
  }

  std::set<std::vector<int>> pos;
  for (auto const &c : roots) {
    bool nonneg = true;
    for (int x : c) nonneg = nonneg && x >= 0;
    if (nonneg) pos.insert(c);
  }
  if (fam == Family::BC) {
    for (int i = 0; i < rank; ++i) {
      std::vector<int> c(rank, 0);
      for (int j = i; j < rank; ++j) c[j] = 2;
      pos.insert(c);
    }
  }
  return pos;
}

}  // namespace flagorient::oracle

#endif
