#pragma once

// Shared hand-built instances for tests. The five-vertex counterexample is
// the one worked instance whose numbers are frozen throughout the suite:
// nine subsets over K5, total rank 12, greedy (lowest-index ties) returns 7
// edges including {4,5}, the unique optimum is the 6 spoke edges.

#include <string>
#include <vector>

#include "sths/graph.hpp"
#include "sths/instance.hpp"

namespace fixtures {

/// K5 on names "1".."5" with the nine subsets {1,4,5}, {2,4,5}, {3,4,5},
/// {1,4}, {1,5}, {2,4}, {2,5}, {3,4}, {3,5} (0-based vertex indices below).
inline sths::SthsInstance counterexample() {
  std::vector<std::string> names{"1", "2", "3", "4", "5"};
  std::vector<sths::Edge> edges;
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v) edges.push_back({u, v, 1.0});
  std::vector<std::vector<int>> subsets{
      {0, 3, 4}, {1, 3, 4}, {2, 3, 4}, {0, 3}, {0, 4}, {1, 3}, {1, 4}, {2, 3}, {2, 4},
  };
  return sths::SthsInstance{sths::Graph(std::move(names), std::move(edges)), std::move(subsets)};
}

/// Triangle graph on a, b, c with a single subset covering all vertices.
inline sths::SthsInstance triangle() {
  std::vector<std::string> names{"a", "b", "c"};
  std::vector<sths::Edge> edges{{0, 1, 1.0}, {0, 2, 1.0}, {1, 2, 1.0}};
  return sths::SthsInstance{sths::Graph(std::move(names), std::move(edges)), {{0, 1, 2}}};
}

inline std::vector<std::string> toy_corpus_lines() { return {"a b", "b c", "a b c"}; }

inline std::vector<std::string> woof_corpus_lines() { return {"Is that a woof?"}; }

}  // namespace fixtures
