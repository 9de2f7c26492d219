#pragma once

#include <numeric>
#include <vector>

namespace sths {

/// Union-find over a fixed number of slots (path halving, union by size).
class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n)), size_(static_cast<std::size_t>(n), 1), components_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      parent_[static_cast<std::size_t>(x)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
      x = parent_[static_cast<std::size_t>(x)];
    }
    return x;
  }

  /// Merges the components of x and y; returns true when they were distinct.
  bool unite(int x, int y) {
    int rx = find(x), ry = find(y);
    if (rx == ry) return false;
    if (size_[static_cast<std::size_t>(rx)] < size_[static_cast<std::size_t>(ry)]) std::swap(rx, ry);
    parent_[static_cast<std::size_t>(ry)] = rx;
    size_[static_cast<std::size_t>(rx)] += size_[static_cast<std::size_t>(ry)];
    --components_;
    return true;
  }

  bool connected(int x, int y) { return find(x) == find(y); }
  int components() const { return components_; }

  void reset() {
    std::iota(parent_.begin(), parent_.end(), 0);
    std::fill(size_.begin(), size_.end(), 1);
    components_ = static_cast<int>(parent_.size());
  }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  int components_;
};

}  // namespace sths
