#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "sths/graph.hpp"
#include "sths/instance.hpp"
#include "sths/union_find.hpp"

namespace sths {

/// Unbiased draw from [0, n) by rejection. Used instead of the standard
/// distributions, whose outputs differ across library implementations;
/// mt19937_64 itself is pinned by the standard, so this keeps generated
/// instances byte-identical everywhere.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("uniform_below: empty range");
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - max % n;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % n;
}

struct RandomInstanceParams {
  int n_vertices = 6;
  int n_subsets = 4;
  int subset_size_min = 2;
  int subset_size_max = 4;
  double edge_density = 0.8;
  int weight_min = 1;  // weight_max > weight_min draws integer edge weights
  int weight_max = 1;
};

/// Seeded random instance: vertices v0..v{n-1}, each candidate edge kept with
/// probability edge_density, random vertex subsets, then a repair pass that
/// adds the canonically first missing edges until every induced subgraph is
/// connected. Deterministic for a fixed (seed, params) pair.
inline SthsInstance generate_random_instance(std::uint64_t seed, const RandomInstanceParams& params) {
  if (params.n_vertices < 1) throw std::invalid_argument("generate_random_instance: need at least one vertex");
  if (params.n_subsets < 0) throw std::invalid_argument("generate_random_instance: negative subset count");
  if (params.subset_size_min < 1 || params.subset_size_min > params.subset_size_max)
    throw std::invalid_argument("generate_random_instance: bad subset size range");
  if (params.subset_size_max > params.n_vertices)
    throw std::invalid_argument("generate_random_instance: subset size exceeds vertex count");
  if (!(params.edge_density >= 0.0 && params.edge_density <= 1.0))
    throw std::invalid_argument("generate_random_instance: edge density must lie in [0, 1]");
  if (params.weight_min < 1 || params.weight_min > params.weight_max)
    throw std::invalid_argument("generate_random_instance: bad weight range");

  std::mt19937_64 rng(seed);
  const int n = params.n_vertices;
  const auto pair_slot = [n](int u, int v) {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(n) + static_cast<std::size_t>(v);
  };
  std::vector<char> present(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);

  const auto threshold = static_cast<std::uint64_t>(std::llround(params.edge_density * 1e6));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (uniform_below(rng, 1'000'000) < threshold) present[pair_slot(u, v)] = 1;

  std::vector<std::vector<int>> subsets;
  subsets.reserve(static_cast<std::size_t>(params.n_subsets));
  std::vector<int> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 0);
  for (int i = 0; i < params.n_subsets; ++i) {
    const int span = params.subset_size_max - params.subset_size_min + 1;
    const int size =
        params.subset_size_min + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(span)));
    for (int j = 0; j < size; ++j) {
      const auto k = j + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n - j)));
      std::swap(pool[static_cast<std::size_t>(j)], pool[static_cast<std::size_t>(k)]);
    }
    std::vector<int> subset(pool.begin(), pool.begin() + size);
    std::sort(subset.begin(), subset.end());
    subsets.push_back(std::move(subset));
  }

  // Repair pass: connect each induced subgraph by adding the canonically
  // first edge that merges two components, repeated to fixpoint.
  for (const auto& subset : subsets) {
    while (true) {
      DisjointSets ds(static_cast<int>(subset.size()));
      for (std::size_t a = 0; a < subset.size(); ++a)
        for (std::size_t b = a + 1; b < subset.size(); ++b)
          if (present[pair_slot(subset[a], subset[b])]) ds.unite(static_cast<int>(a), static_cast<int>(b));
      if (ds.components() <= 1) break;
      bool added = false;
      for (std::size_t a = 0; a < subset.size() && !added; ++a)
        for (std::size_t b = a + 1; b < subset.size() && !added; ++b)
          if (!ds.connected(static_cast<int>(a), static_cast<int>(b))) {
            present[pair_slot(subset[a], subset[b])] = 1;
            added = true;
          }
    }
  }

  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) names.push_back("v" + std::to_string(v));

  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (present[pair_slot(u, v)]) {
        double w = static_cast<double>(params.weight_min);
        if (params.weight_max > params.weight_min) {
          const auto span = static_cast<std::uint64_t>(params.weight_max - params.weight_min + 1);
          w = static_cast<double>(params.weight_min + static_cast<int>(uniform_below(rng, span)));
        }
        edges.push_back({u, v, w});
      }

  return SthsInstance{Graph(std::move(names), std::move(edges)), std::move(subsets)};
}

}  // namespace sths
