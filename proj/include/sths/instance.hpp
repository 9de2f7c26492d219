#pragma once

#include <algorithm>
#include <memory>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "sths/graph.hpp"
#include "sths/matroid.hpp"
#include "sths/union_find.hpp"

namespace sths {

/// A graph together with the vertex subsets that must each receive a spanning
/// tree. Each subset becomes one graphic matroid over the shared edge ground
/// set. Subsets of size < 2 have rank 0 and are permitted.
struct SthsInstance {
  Graph graph;
  std::vector<std::vector<int>> subsets;  // vertex indices; normalized by validate()
};

/// require_connected demands every induced subgraph G[S_i] be connected, so
/// bases are spanning trees. allow_forest accepts disconnected subsets and
/// settles for spanning forests.
enum class ConnectivityPolicy { require_connected, allow_forest };

struct ValidationIssues {
  std::vector<std::string> errors;
  std::vector<std::string> warnings;

  bool ok() const { return errors.empty(); }

  std::string joined_errors() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < errors.size(); ++i) os << (i ? "; " : "") << errors[i];
    return os.str();
  }
};

namespace detail {

inline std::string subset_label(const SthsInstance& instance, std::size_t i) {
  std::ostringstream os;
  os << "subset #" << i << " {";
  const auto& s = instance.subsets[i];
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (s[j] >= 0 && s[j] < instance.graph.vertex_count())
      os << (j ? "," : "") << instance.graph.vertex_name(s[j]);
    else
      os << (j ? "," : "") << "<" << s[j] << ">";
  }
  os << "}";
  return os.str();
}

inline int induced_components(const Graph& g, const std::vector<int>& subset) {
  // subset must be sorted; counts components of G[subset]
  DisjointSets ds(static_cast<int>(subset.size()));
  const auto local = [&](int v) {
    const auto it = std::lower_bound(subset.begin(), subset.end(), v);
    if (it == subset.end() || *it != v) return -1;
    return static_cast<int>(it - subset.begin());
  };
  for (const Edge& e : g.edges()) {
    const int lu = local(e.u);
    if (lu < 0) continue;
    const int lv = local(e.v);
    if (lv < 0) continue;
    ds.unite(lu, lv);
  }
  return ds.components();
}

}  // namespace detail

/// Normalizes subsets in place (sorted; duplicate vertices collapsed, with a
/// warning) and checks vertex references plus the connectivity policy.
inline ValidationIssues validate(SthsInstance& instance,
                                 ConnectivityPolicy policy = ConnectivityPolicy::require_connected) {
  ValidationIssues issues;
  for (std::size_t i = 0; i < instance.subsets.size(); ++i) {
    auto& s = instance.subsets[i];
    bool in_range = true;
    for (int v : s) {
      if (v < 0 || v >= instance.graph.vertex_count()) {
        issues.errors.push_back(detail::subset_label(instance, i) + ": unknown vertex index " + std::to_string(v));
        in_range = false;
      }
    }
    if (!in_range) continue;
    std::sort(s.begin(), s.end());
    const auto dup = std::unique(s.begin(), s.end());
    if (dup != s.end()) {
      s.erase(dup, s.end());
      issues.warnings.push_back(detail::subset_label(instance, i) + ": duplicate vertices collapsed");
    }
    if (policy == ConnectivityPolicy::require_connected && s.size() >= 2 &&
        detail::induced_components(instance.graph, s) > 1) {
      issues.errors.push_back(detail::subset_label(instance, i) + ": induced subgraph is disconnected");
    }
  }
  return issues;
}

/// The matroid view of an instance: one graphic matroid per subset, all over
/// a shared ground set. The ground set keeps only edges lying inside at least
/// one subset; every other edge is a loop in all matroids and can never help
/// a solution, so it is dropped up front.
struct MatroidFamily {
  GroundEdgesPtr ground;
  std::vector<int> element_to_edge;      // ground element -> graph edge index, ascending
  std::vector<GraphicMatroid> matroids;  // aligned with instance.subsets
  std::vector<double> element_weights;
  bool weighted = false;                 // true when any ground edge weight differs from 1

  Element ground_size() const { return ground ? ground->size() : 0; }

  int total_rank() const {
    int r = 0;
    for (const auto& m : matroids) r += m.full_rank();
    return r;
  }

  std::vector<const RankOracle*> oracles() const {
    std::vector<const RankOracle*> out;
    out.reserve(matroids.size());
    for (const auto& m : matroids) out.push_back(&m);
    return out;
  }

  /// Maps graph edge indices into a ground subset; edges outside the ground
  /// set are loops everywhere and are ignored.
  Subset subset_from_edges(std::span<const int> edge_indices) const {
    Subset s(ground_size());
    for (int idx : edge_indices) {
      const auto it = std::lower_bound(element_to_edge.begin(), element_to_edge.end(), idx);
      if (it != element_to_edge.end() && *it == idx)
        s.add(static_cast<Element>(it - element_to_edge.begin()));
    }
    return s;
  }

  std::vector<int> edges_from_subset(const Subset& s) const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(s.count()));
    s.for_each([&](Element e) { out.push_back(element_to_edge[static_cast<std::size_t>(e)]); });
    return out;
  }
};

/// Builds the per-subset graphic matroids of a validated instance.
inline MatroidFamily build_matroids(const SthsInstance& instance) {
  MatroidFamily family;

  std::vector<char> covered(static_cast<std::size_t>(instance.graph.edge_count()), 0);
  for (const auto& s : instance.subsets) {
    for (std::size_t a = 0; a < s.size(); ++a)
      for (std::size_t b = a + 1; b < s.size(); ++b) {
        const int idx = instance.graph.edge_index(s[a], s[b]);
        if (idx >= 0) covered[static_cast<std::size_t>(idx)] = 1;
      }
  }

  GroundEdges ground;
  for (int i = 0; i < instance.graph.edge_count(); ++i) {
    if (!covered[static_cast<std::size_t>(i)]) continue;
    family.element_to_edge.push_back(i);
    const Edge& e = instance.graph.edge(i);
    ground.endpoints.emplace_back(e.u, e.v);
    family.element_weights.push_back(e.weight);
    family.weighted = family.weighted || e.weight != 1.0;
  }
  family.ground = std::make_shared<const GroundEdges>(std::move(ground));

  family.matroids.reserve(instance.subsets.size());
  for (const auto& s : instance.subsets) family.matroids.emplace_back(family.ground, s);
  return family;
}

/// Extracts one spanning tree (or forest, for disconnected subsets) per
/// matroid from a feasible element set: cheapest edge first, ties by canonical
/// edge index. Throws when some subset cannot be spanned, listing the rank
/// deficits.
inline std::vector<std::vector<int>> extract_trees(const MatroidFamily& family, const Subset& chosen) {
  if (chosen.universe_size() != family.ground_size())
    throw std::invalid_argument("extract_trees: subset universe does not match the family ground set");

  std::vector<std::vector<int>> trees;
  trees.reserve(family.matroids.size());
  std::vector<std::string> deficits;

  for (std::size_t j = 0; j < family.matroids.size(); ++j) {
    const GraphicMatroid& m = family.matroids[j];
    std::vector<Element> candidates;
    for (Element e : m.support())
      if (chosen.contains(e)) candidates.push_back(e);
    std::stable_sort(candidates.begin(), candidates.end(), [&](Element a, Element b) {
      return family.element_weights[static_cast<std::size_t>(a)] < family.element_weights[static_cast<std::size_t>(b)];
    });

    DisjointSets ds(m.subset_size());
    std::vector<int> tree;
    for (Element e : candidates) {
      const auto [lu, lv] = m.local_endpoints(e);
      if (ds.unite(lu, lv)) tree.push_back(family.element_to_edge[static_cast<std::size_t>(e)]);
    }
    if (static_cast<int>(tree.size()) < m.full_rank()) {
      deficits.push_back("matroid #" + std::to_string(j) + " short by " +
                         std::to_string(m.full_rank() - static_cast<int>(tree.size())) + " rank");
    }
    std::sort(tree.begin(), tree.end());
    trees.push_back(std::move(tree));
  }

  if (!deficits.empty()) {
    std::ostringstream os;
    os << "extract_trees: chosen edges do not span every subset (";
    for (std::size_t i = 0; i < deficits.size(); ++i) os << (i ? "; " : "") << deficits[i];
    os << ")";
    throw std::runtime_error(os.str());
  }
  return trees;
}

}  // namespace sths
