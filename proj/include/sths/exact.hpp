#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <memory>
#include <queue>
#include <span>
#include <stdexcept>
#include <vector>

#include "sths/greedy.hpp"
#include "sths/matroid.hpp"
#include "sths/subset.hpp"

namespace sths {

/// Limits for the exhaustive solver. The ground-set cap keeps accidental
/// exponential blowups out; the node budget turns long searches into an
/// explicit "inconclusive" answer instead of an open-ended run.
struct SearchBudget {
  std::uint64_t max_nodes = 5'000'000;
  Element max_ground = 24;
};

enum class ExactStatus { optimal, inconclusive };

struct ExactResult {
  ExactStatus status = ExactStatus::optimal;
  std::vector<Element> elements;  // ascending; best known set when inconclusive
  double value = 0.0;             // cardinality, or total weight in weighted mode
  double lower_bound = 0.0;       // proven bounds on the optimum value
  double upper_bound = 0.0;
  std::uint64_t nodes_explored = 0;

  Subset element_set(Element ground) const {
    Subset s(ground);
    for (Element e : elements) s.add(e);
    return s;
  }
};

struct MatroidDeficit {
  int matroid = 0;  // index into the matroid list
  int deficit = 0;  // full_rank - rank(F), always > 0 here
};

struct DeficitReport {
  std::vector<MatroidDeficit> deficits;

  bool feasible() const { return deficits.empty(); }
};

/// Checks F against every matroid and reports each one whose basis is missed.
inline DeficitReport verify_solution(std::span<const RankOracle* const> matroids, const Subset& f) {
  Element ground = 0;
  detail::check_matroid_list(matroids, {}, &ground);
  if (f.universe_size() != ground)
    throw std::invalid_argument("verify_solution: subset universe does not match the matroids");
  DeficitReport report;
  for (std::size_t j = 0; j < matroids.size(); ++j) {
    const int d = matroids[j]->full_rank() - matroids[j]->rank(f);
    if (d > 0) report.deficits.push_back({static_cast<int>(j), d});
  }
  return report;
}

namespace detail {

inline std::vector<std::unique_ptr<IncrementalRank>> clone_states(
    const std::vector<std::unique_ptr<IncrementalRank>>& states) {
  std::vector<std::unique_ptr<IncrementalRank>> out;
  out.reserve(states.size());
  for (const auto& st : states) out.push_back(st->clone());
  return out;
}

// Cardinality-layered DFS: for a fixed slot count, branch on the lowest
// undecided element, inclusion before exclusion, so the first feasible set
// found is the lexicographically smallest optimum. Prunings: residual rank
// beyond slots * (max single-element profit at the empty set) cannot be
// repaired; a matroid with no remaining rank-raising element kills the
// branch; a matroid whose unique raiser remains forces that element;
// elements with zero current profit stay zero by submodularity and are
// never included.
class LayeredSearch {
 public:
  LayeredSearch(std::span<const RankOracle* const> matroids, int max_p0, std::uint64_t max_nodes)
      : matroids_(matroids), max_p0_(max_p0), max_nodes_(max_nodes) {}

  bool run(const Subset& available, int slots, int residual) {
    found_.clear();
    std::vector<std::unique_ptr<IncrementalRank>> states;
    states.reserve(matroids_.size());
    for (const RankOracle* m : matroids_) states.push_back(m->make_incremental());
    Subset chosen(available.universe_size());
    Subset avail = available;
    return dfs(states, chosen, avail, slots, residual);
  }

  bool exhausted() const { return exhausted_; }
  std::uint64_t nodes() const { return nodes_; }
  const std::vector<Element>& found() const { return found_; }

 private:
  int total_gain(const std::vector<std::unique_ptr<IncrementalRank>>& states, Element e) const {
    int p = 0;
    for (const auto& st : states) p += st->gain(e);
    return p;
  }

  bool dfs(std::vector<std::unique_ptr<IncrementalRank>>& states, Subset& chosen, Subset& avail,
           int slots, int residual) {
    if (exhausted_) return false;
    if (residual == 0) {
      found_ = chosen.elements();
      return true;
    }
    if (++nodes_ > max_nodes_) {
      exhausted_ = true;
      return false;
    }
    if (slots == 0) return false;
    if (static_cast<std::int64_t>(residual) > static_cast<std::int64_t>(slots) * max_p0_) return false;

    // Deficient matroids with no raiser kill the branch; a unique raiser is
    // part of every feasible completion, so include it without branching.
    Element forced = -1;
    const Element ground = avail.universe_size();
    for (std::size_t j = 0; j < matroids_.size() && forced < 0; ++j) {
      if (matroids_[j]->full_rank() - states[j]->rank() <= 0) continue;
      int raisers = 0;
      Element only = -1;
      for (Element e = 0; e < ground && raisers < 2; ++e) {
        if (!avail.contains(e)) continue;
        if (states[j]->gain(e) > 0) {
          ++raisers;
          only = e;
        }
      }
      if (raisers == 0) return false;
      if (raisers == 1) forced = only;
    }

    const auto include = [&](Element e, int p) {
      auto child = clone_states(states);
      for (auto& st : child) st->add(e);
      chosen.add(e);
      avail.remove(e);
      const bool ok = dfs(child, chosen, avail, slots - 1, residual - p);
      avail.add(e);
      if (!ok) chosen.remove(e);
      return ok;
    };

    if (forced >= 0) return include(forced, total_gain(states, forced));

    Element e = -1;
    for (Element c = 0; c < ground; ++c)
      if (avail.contains(c)) {
        e = c;
        break;
      }
    if (e < 0) return false;

    const int p = total_gain(states, e);
    if (p > 0 && include(e, p)) return true;
    avail.remove(e);
    const bool ok = dfs(states, chosen, avail, slots, residual);
    avail.add(e);
    return ok;
  }

  std::span<const RankOracle* const> matroids_;
  int max_p0_;
  std::uint64_t max_nodes_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  std::vector<Element> found_;
};

inline double mask_weight(std::uint64_t mask, std::span<const double> weights) {
  // Fixed ascending-index accumulation: equal sets give bit-identical sums.
  double w = 0.0;
  for (Element e = 0; mask != 0; ++e, mask >>= 1)
    if (mask & 1) w += weights.empty() ? 1.0 : weights[static_cast<std::size_t>(e)];
  return w;
}

}  // namespace detail

/// Minimum basis hitting set by exhaustive search. Unweighted instances use
/// cardinality-layered DFS from a proven lower bound; weighted instances use
/// best-first search on weight with an admissible remaining-cost estimate.
/// Within budget the result is a certified optimum; on budget exhaustion the
/// status is inconclusive and the result carries the best known feasible set
/// plus proven lower/upper bounds.
inline ExactResult exact_min_basis_hitting(std::span<const RankOracle* const> matroids,
                                           std::span<const double> weights = {},
                                           const SearchBudget& budget = {}) {
  Element ground = 0;
  detail::check_matroid_list(matroids, weights, &ground);
  if (ground > budget.max_ground)
    throw std::invalid_argument("exact solver: ground set size " + std::to_string(ground) +
                                " exceeds the cap of " + std::to_string(budget.max_ground));

  ExactResult result;
  int r0 = 0;
  int max_full = 0;
  for (const RankOracle* m : matroids) {
    r0 += m->full_rank();
    max_full = std::max(max_full, m->full_rank());
  }
  if (r0 == 0) {
    result.status = ExactStatus::optimal;
    return result;
  }

  bool uniform = true;
  for (double w : weights) uniform = uniform && w == 1.0;

  // Elements useless even at the empty set stay useless by submodularity.
  Subset available(ground);
  Subset empty(ground);
  int max_p0 = 0;
  double min_weight = 0.0;
  for (Element e = 0; e < ground; ++e) {
    const int p = profit(matroids, empty, e);
    if (p <= 0) continue;
    available.add(e);
    max_p0 = std::max(max_p0, p);
    const double w = weights.empty() ? 1.0 : weights[static_cast<std::size_t>(e)];
    min_weight = min_weight == 0.0 ? w : std::min(min_weight, w);
  }
  if (max_p0 == 0)
    throw std::logic_error("exact solver: residual rank is positive but no element raises rank");

  GreedyOptions greedy_options;
  const SolveReport greedy = greedy_solve(matroids, weights, greedy_options);
  std::vector<Element> ub_elements = greedy.chosen;
  std::sort(ub_elements.begin(), ub_elements.end());

  if (uniform) {
    const int ub = static_cast<int>(ub_elements.size());
    const int lb = std::max(max_full, (r0 + max_p0 - 1) / max_p0);
    detail::LayeredSearch search(matroids, max_p0, budget.max_nodes);
    for (int t = lb; t <= ub; ++t) {
      if (search.run(available, t, r0)) {
        result.status = ExactStatus::optimal;
        result.elements = search.found();
        result.value = static_cast<double>(result.elements.size());
        result.lower_bound = result.upper_bound = result.value;
        result.nodes_explored = search.nodes();
        return result;
      }
      if (search.exhausted()) {
        result.status = ExactStatus::inconclusive;
        result.elements = ub_elements;
        result.value = static_cast<double>(ub);
        result.lower_bound = static_cast<double>(t);
        result.upper_bound = static_cast<double>(ub);
        result.nodes_explored = search.nodes();
        return result;
      }
    }
    throw std::logic_error("exact solver: layered search missed the known feasible set");
  }

  // Weighted: A* over the ascending-index subset tree. Remaining cost is at
  // least ceil(residual / max_p0) further elements, each at least min_weight.
  std::uint64_t ub_mask = 0;
  for (Element e : ub_elements) ub_mask |= std::uint64_t{1} << e;
  const double ub_value = detail::mask_weight(ub_mask, weights);

  const auto residual_of = [&](std::uint64_t mask) {
    Subset f(ground);
    for (Element e = 0; e < ground; ++e)
      if (mask & (std::uint64_t{1} << e)) f.add(e);
    int r = 0;
    for (const RankOracle* m : matroids) r += m->full_rank() - m->rank(f);
    return r;
  };
  const auto heuristic = [&](int residual) {
    return static_cast<double>((residual + max_p0 - 1) / max_p0) * min_weight;
  };

  struct Node {
    double f = 0.0;
    double g = 0.0;
    std::uint64_t mask = 0;
    Element next = 0;
  };
  const auto later = [](const Node& a, const Node& b) {
    if (a.f != b.f) return a.f > b.f;
    if (a.g != b.g) return a.g > b.g;
    if (a.mask != b.mask) return a.mask > b.mask;
    return a.next > b.next;
  };
  std::priority_queue<Node, std::vector<Node>, decltype(later)> open(later);
  open.push({heuristic(r0), 0.0, 0, 0});

  std::uint64_t nodes = 0;
  double frontier_lb = 0.0;
  while (!open.empty()) {
    const Node node = open.top();
    open.pop();
    frontier_lb = node.f;
    const int residual = residual_of(node.mask);
    if (residual == 0) {
      result.status = ExactStatus::optimal;
      result.value = node.g;
      result.lower_bound = result.upper_bound = node.g;
      result.nodes_explored = nodes;
      for (Element e = 0; e < ground; ++e)
        if (node.mask & (std::uint64_t{1} << e)) result.elements.push_back(e);
      return result;
    }
    if (++nodes > budget.max_nodes) break;
    for (Element e = node.next; e < ground; ++e) {
      if (!available.contains(e)) continue;
      const std::uint64_t child_mask = node.mask | (std::uint64_t{1} << e);
      const int child_residual = residual_of(child_mask);
      if (child_residual == residual) continue;  // zero gain now means zero gain forever
      const double g = detail::mask_weight(child_mask, weights);
      const double f = g + heuristic(child_residual);
      if (f > ub_value) continue;  // never better than the known feasible set
      open.push({f, g, child_mask, static_cast<Element>(e + 1)});
    }
  }

  if (open.empty() && nodes <= budget.max_nodes)
    throw std::logic_error("exact solver: weighted search missed the known feasible set");
  result.status = ExactStatus::inconclusive;
  result.elements = ub_elements;
  result.value = ub_value;
  result.lower_bound = std::min(frontier_lb, ub_value);
  result.upper_bound = ub_value;
  result.nodes_explored = nodes;
  return result;
}

}  // namespace sths
