#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace sths {

/// Undirected weighted edge in canonical form (u < v).
struct Edge {
  int u = 0;
  int v = 0;
  double weight = 1.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Simple undirected graph over named vertices.
///
/// Edges are canonicalized to (min, max), parallel edges collapse to the
/// cheapest one, and the edge list is kept sorted, so edge indices are a
/// reproducible function of the input. Self-loops and non-positive weights
/// are rejected.
class Graph {
 public:
  Graph() = default;

  Graph(std::vector<std::string> vertex_names, std::vector<Edge> edges)
      : names_(std::move(vertex_names)) {
    const int n = static_cast<int>(names_.size());
    for (int i = 0; i < n; ++i) {
      if (names_[static_cast<std::size_t>(i)].empty())
        throw std::invalid_argument("Graph: empty vertex name");
      if (!index_.emplace(names_[static_cast<std::size_t>(i)], i).second)
        throw std::invalid_argument("Graph: duplicate vertex name '" + names_[static_cast<std::size_t>(i)] + "'");
    }
    for (Edge& e : edges) {
      if (e.u > e.v) std::swap(e.u, e.v);
      if (e.u < 0 || e.v >= n)
        throw std::invalid_argument("Graph: edge endpoint out of range");
      if (e.u == e.v)
        throw std::invalid_argument("Graph: self-loop at vertex '" + names_[static_cast<std::size_t>(e.u)] + "'");
      if (!(e.weight > 0.0) || !std::isfinite(e.weight))
        throw std::invalid_argument("Graph: edge weight must be positive and finite");
    }
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
      if (a.u != b.u) return a.u < b.u;
      if (a.v != b.v) return a.v < b.v;
      return a.weight < b.weight;
    });
    for (const Edge& e : edges) {
      if (!edges_.empty() && edges_.back().u == e.u && edges_.back().v == e.v)
        continue;  // parallel edge; keep the cheapest (sorted first)
      edges_.push_back(e);
    }
  }

  int vertex_count() const { return static_cast<int>(names_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::vector<std::string>& vertex_names() const { return names_; }
  const std::string& vertex_name(int v) const { return names_.at(static_cast<std::size_t>(v)); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int i) const { return edges_.at(static_cast<std::size_t>(i)); }

  /// -1 when the name is unknown.
  int vertex_index(const std::string& name) const {
    const auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
  }

  /// -1 when the (canonicalized) edge is absent.
  int edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    const auto it = std::lower_bound(
        edges_.begin(), edges_.end(), std::pair<int, int>{u, v}, [](const Edge& e, const std::pair<int, int>& key) {
          if (e.u != key.first) return e.u < key.first;
          return e.v < key.second;
        });
    if (it == edges_.end() || it->u != u || it->v != v) return -1;
    return static_cast<int>(it - edges_.begin());
  }

 private:
  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, int> index_;
};

}  // namespace sths
