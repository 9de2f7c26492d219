#pragma once

#include <algorithm>
#include <memory>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sths/subset.hpp"
#include "sths/union_find.hpp"

namespace sths {

/// Shared ground set of an instance: one entry per element giving the vertex
/// endpoints of the edge that element stands for. All matroids of a family
/// reference the same GroundEdges, so element indices mean the same thing
/// everywhere.
struct GroundEdges {
  std::vector<std::pair<int, int>> endpoints;

  Element size() const { return static_cast<Element>(endpoints.size()); }
};

using GroundEdgesPtr = std::shared_ptr<const GroundEdges>;

/// Mutable selection state for one matroid: tracks the rank of a growing
/// element set F and answers marginal-gain queries against it. Obtained from
/// RankOracle::make_incremental(); the oracle itself stays immutable.
class IncrementalRank {
 public:
  virtual ~IncrementalRank() = default;

  /// rank(F + e) - rank(F) for the current F.
  virtual int gain(Element e) const = 0;

  /// F += e.
  virtual void add(Element e) = 0;

  /// rank(F).
  virtual int rank() const = 0;

  /// Independent copy of the state, for branching searches.
  virtual std::unique_ptr<IncrementalRank> clone() const = 0;
};

/// A matroid presented as a rank oracle over a shared ground set.
///
/// Rank queries are pure functions of (oracle, subset): oracles are immutable
/// after construction and safe to query concurrently. The cached full_rank()
/// equals rank(whole ground set).
class RankOracle {
 public:
  virtual ~RankOracle() = default;

  Element ground_size() const { return ground_size_; }
  int full_rank() const { return full_rank_; }

  virtual int rank(const Subset& a) const = 0;

  /// True iff a contains a basis, i.e. rank(a) reaches full_rank.
  bool contains_basis(const Subset& f) const { return rank(f) == full_rank_; }

  /// Fast marginal-gain state; concrete matroids may specialize it.
  virtual std::unique_ptr<IncrementalRank> make_incremental() const;

  /// Reference marginal-gain state that re-evaluates rank() on every query.
  std::unique_ptr<IncrementalRank> make_fresh_incremental() const;

 protected:
  explicit RankOracle(Element ground_size) : ground_size_(ground_size) {
    if (ground_size < 0) throw std::invalid_argument("RankOracle: negative ground set size");
  }

  void set_full_rank(int r) { full_rank_ = r; }

  void check_subset(const Subset& a) const {
    if (a.universe_size() != ground_size_)
      throw std::invalid_argument("RankOracle: subset universe does not match ground set size");
  }

 private:
  Element ground_size_ = 0;
  int full_rank_ = 0;
};

namespace detail {

// Generic incremental state: keeps F as a bitset and calls rank() afresh for
// every gain, which makes it the reference path for consistency checks.
class FreshIncrementalRank final : public IncrementalRank {
 public:
  explicit FreshIncrementalRank(const RankOracle& oracle)
      : oracle_(oracle), current_(oracle.ground_size()) {}

  int gain(Element e) const override {
    Subset with = current_;
    with.add(e);
    return oracle_.rank(with) - rank_;
  }

  void add(Element e) override {
    current_.add(e);
    rank_ = oracle_.rank(current_);
  }

  int rank() const override { return rank_; }

  std::unique_ptr<IncrementalRank> clone() const override {
    return std::make_unique<FreshIncrementalRank>(*this);
  }

 private:
  const RankOracle& oracle_;
  Subset current_;
  int rank_ = 0;
};

}  // namespace detail

inline std::unique_ptr<IncrementalRank> RankOracle::make_fresh_incremental() const {
  return std::make_unique<detail::FreshIncrementalRank>(*this);
}

inline std::unique_ptr<IncrementalRank> RankOracle::make_incremental() const {
  return make_fresh_incremental();
}

/// Graphic matroid of the subgraph induced by a vertex subset S: the rank of
/// an edge set A is |S| minus the number of connected components of (S, A'),
/// where A' keeps only edges with both endpoints in S. Elements whose edge
/// leaves S are loops and never change the rank.
class GraphicMatroid final : public RankOracle {
 public:
  GraphicMatroid(GroundEdgesPtr ground, std::vector<int> subset_vertices)
      : RankOracle(ground ? ground->size() : 0), ground_(std::move(ground)), verts_(std::move(subset_vertices)) {
    if (!ground_) throw std::invalid_argument("GraphicMatroid: null ground edge list");
    std::sort(verts_.begin(), verts_.end());
    verts_.erase(std::unique(verts_.begin(), verts_.end()), verts_.end());
    if (!verts_.empty() && verts_.front() < 0)
      throw std::invalid_argument("GraphicMatroid: negative vertex index");

    for (Element e = 0; e < ground_->size(); ++e) {
      const auto [u, v] = ground_->endpoints[static_cast<std::size_t>(e)];
      if (local_index(u) >= 0 && local_index(v) >= 0) support_.push_back(e);
    }

    DisjointSets ds(subset_size());
    int r = 0;
    for (Element e : support_) {
      const auto [a, b] = local_endpoints(e);
      r += ds.unite(a, b) ? 1 : 0;
    }
    set_full_rank(r);
  }

  int rank(const Subset& a) const override {
    check_subset(a);
    DisjointSets ds(subset_size());
    int r = 0;
    a.for_each([&](Element e) {
      const auto [lu, lv] = local_endpoints(e);
      if (lu >= 0) r += ds.unite(lu, lv) ? 1 : 0;
    });
    return r;
  }

  int subset_size() const { return static_cast<int>(verts_.size()); }
  const std::vector<int>& subset_vertices() const { return verts_; }

  /// Elements with both endpoints inside S (the non-loops), ascending.
  const std::vector<Element>& support() const { return support_; }

  /// Endpoint slots of e within S, or {-1, -1} when e is a loop.
  std::pair<int, int> local_endpoints(Element e) const {
    const auto [u, v] = ground_->endpoints[static_cast<std::size_t>(e)];
    const int lu = local_index(u);
    if (lu < 0) return {-1, -1};
    const int lv = local_index(v);
    if (lv < 0) return {-1, -1};
    return {lu, lv};
  }

  std::unique_ptr<IncrementalRank> make_incremental() const override;

 private:
  int local_index(int v) const {
    const auto it = std::lower_bound(verts_.begin(), verts_.end(), v);
    if (it == verts_.end() || *it != v) return -1;
    return static_cast<int>(it - verts_.begin());
  }

  GroundEdgesPtr ground_;
  std::vector<int> verts_;
  std::vector<Element> support_;
};

namespace detail {

// Union-find state over S; gain is 1 exactly when e joins two components.
class GraphicIncrementalRank final : public IncrementalRank {
 public:
  explicit GraphicIncrementalRank(const GraphicMatroid& matroid)
      : matroid_(matroid), components_(matroid.subset_size()) {}

  int gain(Element e) const override {
    const auto [lu, lv] = matroid_.local_endpoints(e);
    if (lu < 0) return 0;
    return components_.connected(lu, lv) ? 0 : 1;
  }

  void add(Element e) override {
    const auto [lu, lv] = matroid_.local_endpoints(e);
    if (lu < 0) return;
    rank_ += components_.unite(lu, lv) ? 1 : 0;
  }

  int rank() const override { return rank_; }

  std::unique_ptr<IncrementalRank> clone() const override {
    return std::make_unique<GraphicIncrementalRank>(*this);
  }

 private:
  const GraphicMatroid& matroid_;
  mutable DisjointSets components_;
  int rank_ = 0;
};

}  // namespace detail

inline std::unique_ptr<IncrementalRank> GraphicMatroid::make_incremental() const {
  return std::make_unique<detail::GraphicIncrementalRank>(*this);
}

/// Rank-1 uniform matroid on a member set C: rank(A) is 1 iff A meets C.
/// Independent sets are the empty set and the singletons of C.
class UniformRank1Matroid final : public RankOracle {
 public:
  UniformRank1Matroid(Element ground_size, const std::vector<Element>& members)
      : RankOracle(ground_size), members_(ground_size) {
    for (Element e : members) members_.add(e);
    set_full_rank(members_.empty() ? 0 : 1);
  }

  int rank(const Subset& a) const override {
    check_subset(a);
    return members_.intersects(a) ? 1 : 0;
  }

  const Subset& members() const { return members_; }

  std::unique_ptr<IncrementalRank> make_incremental() const override;

 private:
  Subset members_;
};

namespace detail {

class UniformIncrementalRank final : public IncrementalRank {
 public:
  explicit UniformIncrementalRank(const UniformRank1Matroid& matroid) : matroid_(matroid) {}

  int gain(Element e) const override { return rank_ == 0 && matroid_.members().contains(e) ? 1 : 0; }
  void add(Element e) override { rank_ = std::max(rank_, gain(e) > 0 ? 1 : 0); }
  int rank() const override { return rank_; }

  std::unique_ptr<IncrementalRank> clone() const override {
    return std::make_unique<UniformIncrementalRank>(*this);
  }

 private:
  const UniformRank1Matroid& matroid_;
  int rank_ = 0;
};

}  // namespace detail

inline std::unique_ptr<IncrementalRank> UniformRank1Matroid::make_incremental() const {
  return std::make_unique<detail::UniformIncrementalRank>(*this);
}

/// Dual of another matroid: rank*(A) = |A| + rank(E \ A) - rank(E). A set F
/// contains a basis of the primal exactly when E \ F is independent here.
class DualMatroid final : public RankOracle {
 public:
  explicit DualMatroid(std::shared_ptr<const RankOracle> primal)
      : RankOracle(primal ? primal->ground_size() : 0), primal_(std::move(primal)) {
    if (!primal_) throw std::invalid_argument("DualMatroid: null primal oracle");
    set_full_rank(ground_size() - primal_->full_rank());
  }

  int rank(const Subset& a) const override {
    check_subset(a);
    return a.count() + primal_->rank(a.complemented()) - primal_->full_rank();
  }

  const RankOracle& primal() const { return *primal_; }

 private:
  std::shared_ptr<const RankOracle> primal_;
};

}  // namespace sths
