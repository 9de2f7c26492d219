#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sths/exact.hpp"
#include "sths/graph.hpp"
#include "sths/instance.hpp"
#include "sths/matroid.hpp"

namespace sths {

/// Min Hitting Set input: a label universe and a family of subsets, each of
/// which must be hit by a chosen element.
struct HittingSetInstance {
  std::vector<std::string> universe;
  std::vector<std::vector<int>> sets;  // indices into universe, each nonempty
};

/// Sorts and dedupes each set; rejects empty universes, duplicate labels,
/// out-of-range indices and empty sets (an empty set cannot be hit).
inline void validate_hitting_set(HittingSetInstance& hs) {
  if (hs.universe.empty()) throw std::invalid_argument("hitting set universe is empty");
  std::vector<std::string> sorted_labels = hs.universe;
  std::sort(sorted_labels.begin(), sorted_labels.end());
  if (std::adjacent_find(sorted_labels.begin(), sorted_labels.end()) != sorted_labels.end())
    throw std::invalid_argument("hitting set universe has duplicate labels");
  for (auto& label : hs.universe)
    if (label.empty()) throw std::invalid_argument("hitting set universe has an empty label");
  for (std::size_t i = 0; i < hs.sets.size(); ++i) {
    auto& set = hs.sets[i];
    for (int e : set)
      if (e < 0 || e >= static_cast<int>(hs.universe.size()))
        throw std::invalid_argument("hitting set #" + std::to_string(i) + " references unknown element " +
                                    std::to_string(e));
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    if (set.empty())
      throw std::invalid_argument("hitting set #" + std::to_string(i) + " is empty and cannot be hit");
  }
}

/// Smallest hitting set cardinality by exhaustive bitmask scan. Independent
/// of the matroid solvers on purpose: certificate checks compare two code
/// paths that share nothing.
inline int brute_force_min_hitting_set(const HittingSetInstance& hs) {
  const int n = static_cast<int>(hs.universe.size());
  if (n > 20) throw std::invalid_argument("brute_force_min_hitting_set: universe larger than 20");
  std::vector<std::uint32_t> set_masks;
  set_masks.reserve(hs.sets.size());
  for (const auto& set : hs.sets) {
    std::uint32_t m = 0;
    for (int e : set) m |= std::uint32_t{1} << e;
    if (m == 0) throw std::invalid_argument("brute_force_min_hitting_set: empty set");
    set_masks.push_back(m);
  }
  int best = n + 1;
  for (std::uint32_t pick = 0; pick < (std::uint32_t{1} << n); ++pick) {
    const int size = std::popcount(pick);
    if (size >= best) continue;
    bool hits_all = true;
    for (std::uint32_t m : set_masks) hits_all = hits_all && (m & pick) != 0;
    if (hits_all) best = size;
  }
  return best;
}

/// Minimum vertex cover cardinality by exhaustive bitmask scan (≤ 20 vertices).
inline int brute_force_min_vertex_cover(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 20) throw std::invalid_argument("brute_force_min_vertex_cover: graph larger than 20 vertices");
  int best = n;
  for (std::uint32_t pick = 0; pick < (std::uint32_t{1} << n); ++pick) {
    const int size = std::popcount(pick);
    if (size >= best) continue;
    bool covers = true;
    for (const Edge& e : g.edges())
      covers = covers && ((pick >> e.u) & 1 || (pick >> e.v) & 1);
    if (covers) best = size;
  }
  return best;
}

enum class ReductionKind { hitting_set_weighted, vertex_cover_unweighted };

/// A produced gadget instance together with the identity its optimum must
/// satisfy, phrased against the source problem's optimum:
///   hitting_set_weighted:   h = h' * n^3 + C(n, 2)   (n = |U|)
///   vertex_cover_unweighted: h = c + |E'|
/// The source instance rides along so the identity can be re-derived and
/// checked by two independent solvers.
struct ReductionCertificate {
  ReductionKind kind = ReductionKind::hitting_set_weighted;
  SthsInstance instance;
  std::string apex;     // label of the added hub vertex r
  int n = 0;            // |U| of the source (vertex count for vertex cover)
  int edge_count = 0;   // |E'| of the source graph; 0 for hitting set
  std::optional<HittingSetInstance> source_hitting_set;
  std::optional<Graph> source_graph;

  double predicted(double source_optimum) const {
    if (kind == ReductionKind::hitting_set_weighted) {
      const double cube = static_cast<double>(n) * n * n;
      return source_optimum * cube + static_cast<double>(n) * (n - 1) / 2.0;
    }
    return source_optimum + static_cast<double>(edge_count);
  }
};

namespace detail {

inline std::string fresh_apex_label(const std::vector<std::string>& taken) {
  std::string label = "r";
  int suffix = 0;
  while (std::find(taken.begin(), taken.end(), label) != taken.end())
    label = "r" + std::to_string(++suffix);
  return label;
}

}  // namespace detail

/// Min Hitting Set -> weighted instance: a weight-1 clique on U, hub spokes
/// at weight n^3, one pair subset per clique edge (forcing the whole clique)
/// and one subset T_i + hub per source set (forcing one spoke into T_i).
/// Cheap spokes are exactly the hit elements, giving h = h' * n^3 + C(n, 2).
inline ReductionCertificate reduce_hitting_set_weighted(HittingSetInstance hs) {
  validate_hitting_set(hs);
  const int n = static_cast<int>(hs.universe.size());
  const double spoke_weight = static_cast<double>(n) * n * n;

  ReductionCertificate cert;
  cert.kind = ReductionKind::hitting_set_weighted;
  cert.apex = detail::fresh_apex_label(hs.universe);
  cert.n = n;

  std::vector<std::string> names = hs.universe;
  names.push_back(cert.apex);
  const int hub = n;

  std::vector<Edge> edges;
  std::vector<std::vector<int>> subsets;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      edges.push_back({i, j, 1.0});
      subsets.push_back({i, j});
    }
  for (int i = 0; i < n; ++i) edges.push_back({i, hub, spoke_weight});
  for (const auto& set : hs.sets) {
    std::vector<int> s = set;
    s.push_back(hub);
    subsets.push_back(std::move(s));
  }

  cert.instance = SthsInstance{Graph(std::move(names), std::move(edges)), std::move(subsets)};
  cert.source_hitting_set = std::move(hs);
  return cert;
}

/// Vertex Cover -> unweighted instance: the original edges stand in for the
/// clique, hub spokes cost the same as everything else, and each edge {u, v}
/// contributes the pair subset {u, v} plus the subset {u, v, hub}. Chosen
/// spokes are exactly a vertex cover, giving h = c + |E'|.
inline ReductionCertificate reduce_vertex_cover_unweighted(const Graph& g) {
  ReductionCertificate cert;
  cert.kind = ReductionKind::vertex_cover_unweighted;
  cert.apex = detail::fresh_apex_label(g.vertex_names());
  cert.n = g.vertex_count();
  cert.edge_count = g.edge_count();

  std::vector<std::string> names = g.vertex_names();
  names.push_back(cert.apex);
  const int hub = g.vertex_count();

  std::vector<Edge> edges;
  std::vector<std::vector<int>> subsets;
  for (const Edge& e : g.edges()) {
    edges.push_back({e.u, e.v, 1.0});
    subsets.push_back({e.u, e.v});
    subsets.push_back({e.u, e.v, hub});
  }
  for (int v = 0; v < g.vertex_count(); ++v) edges.push_back({v, hub, 1.0});

  cert.instance = SthsInstance{Graph(std::move(names), std::move(edges)), std::move(subsets)};
  cert.source_graph = g;
  return cert;
}

/// Min Hitting Set -> rank-1 uniform matroids over ground set U: hitting a
/// basis of the matroid for T_i means picking an element of T_i, so minimum
/// basis hitting sets are exactly minimum hitting sets.
inline std::vector<UniformRank1Matroid> reduce_hitting_set_to_matroids(HittingSetInstance hs) {
  validate_hitting_set(hs);
  const auto ground = static_cast<Element>(hs.universe.size());
  std::vector<UniformRank1Matroid> matroids;
  matroids.reserve(hs.sets.size());
  for (const auto& set : hs.sets) {
    std::vector<Element> members(set.begin(), set.end());
    matroids.emplace_back(ground, members);
  }
  return matroids;
}

enum class CheckStatus { verified, refuted, inconclusive };

struct CertificateCheck {
  CheckStatus status = CheckStatus::inconclusive;
  double source_optimum = 0.0;    // brute force on the source problem
  double produced_optimum = 0.0;  // exact solve of the gadget
  double predicted = 0.0;         // identity applied to source_optimum
};

/// Re-derives both sides of the certificate's identity with independent
/// solvers: brute force on the source, the exact matroid solver on the
/// gadget. verified iff they meet the predicted equality.
inline CertificateCheck check_certificate(const ReductionCertificate& cert,
                                          const SearchBudget& budget = {}) {
  CertificateCheck out;
  if (cert.kind == ReductionKind::hitting_set_weighted) {
    if (!cert.source_hitting_set) throw std::invalid_argument("certificate lacks its source hitting set");
    out.source_optimum = brute_force_min_hitting_set(*cert.source_hitting_set);
  } else {
    if (!cert.source_graph) throw std::invalid_argument("certificate lacks its source graph");
    out.source_optimum = brute_force_min_vertex_cover(*cert.source_graph);
  }
  out.predicted = cert.predicted(out.source_optimum);

  SthsInstance instance = cert.instance;
  const ValidationIssues issues = validate(instance);
  if (!issues.ok())
    throw std::invalid_argument("certificate instance fails validation: " + issues.joined_errors());
  const MatroidFamily family = build_matroids(instance);
  const auto oracles = family.oracles();
  const ExactResult result = exact_min_basis_hitting(oracles, family.element_weights, budget);
  out.produced_optimum = result.value;
  if (result.status == ExactStatus::inconclusive) {
    out.status = CheckStatus::inconclusive;
    return out;
  }
  out.status = out.produced_optimum == out.predicted ? CheckStatus::verified : CheckStatus::refuted;
  return out;
}

}  // namespace sths
