#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace sths {

/// Index of an element in a shared ground set.
using Element = std::int32_t;

/// Set of ground-set elements over a fixed universe 0..n-1, backed by a bitset.
/// Out-of-range indices are rejected, so a Subset can never hold duplicates or
/// stray elements.
class Subset {
 public:
  Subset() = default;

  explicit Subset(Element universe) {
    if (universe < 0) throw std::invalid_argument("Subset: negative universe size");
    universe_ = universe;
    bits_.assign(static_cast<std::size_t>((universe + 63) / 64), 0);
  }

  Subset(Element universe, std::initializer_list<Element> elems) : Subset(universe) {
    for (Element e : elems) add(e);
  }

  static Subset full(Element universe) {
    Subset s(universe);
    for (auto& w : s.bits_) w = ~std::uint64_t{0};
    s.trim();
    s.count_ = universe;
    return s;
  }

  Element universe_size() const { return universe_; }
  int count() const { return count_; }
  bool empty() const { return count_ == 0; }

  bool contains(Element e) const {
    check(e);
    return (bits_[word(e)] >> bit(e)) & 1u;
  }

  void add(Element e) {
    check(e);
    const std::uint64_t m = std::uint64_t{1} << bit(e);
    if (!(bits_[word(e)] & m)) {
      bits_[word(e)] |= m;
      ++count_;
    }
  }

  void remove(Element e) {
    check(e);
    const std::uint64_t m = std::uint64_t{1} << bit(e);
    if (bits_[word(e)] & m) {
      bits_[word(e)] &= ~m;
      --count_;
    }
  }

  Subset& operator|=(const Subset& o) {
    check_same_universe(o);
    for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] |= o.bits_[i];
    recount();
    return *this;
  }

  Subset& operator&=(const Subset& o) {
    check_same_universe(o);
    for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] &= o.bits_[i];
    recount();
    return *this;
  }

  friend Subset operator|(Subset a, const Subset& b) { return a |= b; }
  friend Subset operator&(Subset a, const Subset& b) { return a &= b; }

  Subset complemented() const {
    Subset s(*this);
    for (auto& w : s.bits_) w = ~w;
    s.trim();
    s.count_ = universe_ - count_;
    return s;
  }

  bool intersects(const Subset& o) const {
    check_same_universe(o);
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i] & o.bits_[i]) return true;
    return false;
  }

  bool is_subset_of(const Subset& o) const {
    check_same_universe(o);
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i] & ~o.bits_[i]) return false;
    return true;
  }

  friend bool operator==(const Subset& a, const Subset& b) {
    return a.universe_ == b.universe_ && a.bits_ == b.bits_;
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t i = 0; i < bits_.size(); ++i) {
      std::uint64_t w = bits_[i];
      while (w) {
        const int b = std::countr_zero(w);
        fn(static_cast<Element>(i * 64 + static_cast<std::size_t>(b)));
        w &= w - 1;
      }
    }
  }

  std::vector<Element> elements() const {
    std::vector<Element> out;
    out.reserve(static_cast<std::size_t>(count_));
    for_each([&](Element e) { out.push_back(e); });
    return out;
  }

 private:
  static std::size_t word(Element e) { return static_cast<std::size_t>(e) / 64; }
  static int bit(Element e) { return static_cast<int>(e % 64); }

  void check(Element e) const {
    if (e < 0 || e >= universe_)
      throw std::out_of_range("Subset: element index " + std::to_string(e) +
                              " out of range for universe of size " + std::to_string(universe_));
  }

  void check_same_universe(const Subset& o) const {
    if (universe_ != o.universe_)
      throw std::invalid_argument("Subset: universe size mismatch");
  }

  void trim() {
    if (universe_ % 64 != 0 && !bits_.empty())
      bits_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
  }

  void recount() {
    int c = 0;
    for (auto w : bits_) c += std::popcount(w);
    count_ = c;
  }

  Element universe_ = 0;
  int count_ = 0;
  std::vector<std::uint64_t> bits_;
};

}  // namespace sths
