#pragma once

#include <algorithm>
#include <cmath>
#include <memory>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sths/matroid.hpp"
#include "sths/subset.hpp"

namespace sths {

/// Among equal-key candidates, pick the lowest or the highest element index.
enum class TieBreak { lowest_index, highest_index };

/// Selection key in weighted mode: marginal rank per unit weight (the
/// set-cover rule), or raw marginal rank ignoring weights.
enum class WeightedRule { profit_per_weight, profit };

/// lazy_heap keeps a max-heap of stale profits (valid upper bounds by
/// submodularity); full_rescan recomputes every candidate each step and is
/// the reference path. Both produce identical traces.
enum class EvalStrategy { lazy_heap, full_rescan };

/// incremental uses per-matroid marginal-gain states; fresh re-evaluates
/// rank() from scratch on every query (reference path).
enum class RankEval { incremental, fresh };

struct GreedyOptions {
  TieBreak tie_break = TieBreak::lowest_index;
  WeightedRule weighted_rule = WeightedRule::profit_per_weight;
  EvalStrategy eval = EvalStrategy::lazy_heap;
  RankEval rank_eval = RankEval::incremental;
};

struct GreedyStep {
  Element element = -1;
  int profit = 0;  // p_i, the total rank gained by this pick
};

struct SolveReport {
  std::vector<Element> chosen;    // selection order
  double weight = 0.0;            // sum of chosen weights; cardinality if unweighted
  int initial_residual = 0;       // R0, the total rank to hit
  double harmonic_bound = 0.0;    // H(R0)
  bool guarantee_applies = true;  // false when non-uniform weights are in play
  std::vector<GreedyStep> steps;
  Element ground_size = 0;

  Subset chosen_set() const {
    Subset s(ground_size);
    for (Element e : chosen) s.add(e);
    return s;
  }
};

/// H(n) = sum_{t=1..n} 1/t, accumulated in ascending order for stable output.
inline double harmonic(int n) {
  double h = 0.0;
  for (int t = 1; t <= n; ++t) h += 1.0 / static_cast<double>(t);
  return h;
}

namespace detail {

inline void check_matroid_list(std::span<const RankOracle* const> matroids,
                               std::span<const double> weights, Element* ground_out) {
  Element ground = 0;
  for (std::size_t j = 0; j < matroids.size(); ++j) {
    if (matroids[j] == nullptr) throw std::invalid_argument("matroid list contains a null oracle");
    if (j == 0)
      ground = matroids[j]->ground_size();
    else if (matroids[j]->ground_size() != ground)
      throw std::invalid_argument("matroids disagree on ground set size");
  }
  if (!weights.empty()) {
    if (matroids.empty())
      throw std::invalid_argument("weights given without any matroid");
    if (static_cast<Element>(weights.size()) != ground)
      throw std::invalid_argument("weight vector size does not match the ground set");
    for (double w : weights)
      if (!(w > 0.0) || !std::isfinite(w))
        throw std::invalid_argument("element weights must be positive and finite");
  }
  if (ground_out) *ground_out = ground;
}

// Three-way compare of the selection values of two candidates. Weighted keys
// profit/weight are compared by cross-multiplication, so both evaluation
// strategies rank candidates identically.
inline int compare_keys(int pa, double wa, int pb, double wb, bool per_weight) {
  if (per_weight) {
    const double lhs = static_cast<double>(pa) * wb;
    const double rhs = static_cast<double>(pb) * wa;
    return (lhs > rhs) - (lhs < rhs);
  }
  return (pa > pb) - (pa < pb);
}

}  // namespace detail

/// P(F, e) = sum_j rank_j(F + e) - rank_j(F). e must lie outside F.
inline int profit(std::span<const RankOracle* const> matroids, const Subset& f, Element e) {
  Element ground = 0;
  detail::check_matroid_list(matroids, {}, &ground);
  if (f.universe_size() != ground)
    throw std::invalid_argument("profit: subset universe does not match the matroids");
  if (f.contains(e)) throw std::invalid_argument("profit: element already selected");
  Subset with = f;
  with.add(e);
  int p = 0;
  for (const RankOracle* m : matroids) p += m->rank(with) - m->rank(f);
  return p;
}

/// Total residual rank R = sum_j (full_rank_j - rank_j(F)).
inline int total_residual(std::span<const RankOracle* const> matroids, const Subset& f) {
  Element ground = 0;
  detail::check_matroid_list(matroids, {}, &ground);
  if (f.universe_size() != ground)
    throw std::invalid_argument("total_residual: subset universe does not match the matroids");
  int r = 0;
  for (const RankOracle* m : matroids) r += m->full_rank() - m->rank(f);
  return r;
}

/// Greedy submodular cover over a family of matroids on a shared ground set:
/// repeatedly select the element of maximum profit (or profit per weight)
/// until every matroid holds a basis. Unweighted, the result is within
/// H(R0) of optimal cardinality; with non-uniform weights no guarantee is
/// claimed and the report says so.
inline SolveReport greedy_solve(std::span<const RankOracle* const> matroids,
                                std::span<const double> weights = {},
                                const GreedyOptions& options = {}) {
  Element ground = 0;
  detail::check_matroid_list(matroids, weights, &ground);

  SolveReport report;
  report.ground_size = ground;
  bool uniform = true;
  for (double w : weights) uniform = uniform && w == 1.0;
  report.guarantee_applies = uniform;
  const bool per_weight =
      !weights.empty() && !uniform && options.weighted_rule == WeightedRule::profit_per_weight;
  const auto weight_of = [&](Element e) {
    return weights.empty() ? 1.0 : weights[static_cast<std::size_t>(e)];
  };

  std::vector<std::unique_ptr<IncrementalRank>> states;
  states.reserve(matroids.size());
  int residual = 0;
  for (const RankOracle* m : matroids) {
    states.push_back(options.rank_eval == RankEval::incremental ? m->make_incremental()
                                                                : m->make_fresh_incremental());
    residual += m->full_rank();
  }
  report.initial_residual = residual;
  report.harmonic_bound = harmonic(residual);

  const auto gain = [&](Element e) {
    int p = 0;
    for (const auto& st : states) p += st->gain(e);
    return p;
  };
  // True when a beats b: larger key first, then the preferred index.
  const auto beats = [&](int pa, Element a, int pb, Element b) {
    const int c = detail::compare_keys(pa, weight_of(a), pb, weight_of(b), per_weight);
    if (c != 0) return c > 0;
    return options.tie_break == TieBreak::lowest_index ? a < b : a > b;
  };

  std::vector<char> unavailable(static_cast<std::size_t>(ground), 0);  // chosen or profit hit 0
  const auto commit = [&](Element e, int p) {
    for (auto& st : states) st->add(e);
    unavailable[static_cast<std::size_t>(e)] = 1;
    report.chosen.push_back(e);
    report.steps.push_back({e, p});
    report.weight += weight_of(e);
    residual -= p;
  };
  const auto oracle_failure = [&] {
    throw std::logic_error("greedy_solve: no element raises rank but residual rank is " +
                           std::to_string(residual) + "; rank oracle is inconsistent");
  };

  if (options.eval == EvalStrategy::full_rescan) {
    while (residual > 0) {
      Element best = -1;
      int best_p = 0;
      for (Element e = 0; e < ground; ++e) {
        if (unavailable[static_cast<std::size_t>(e)]) continue;
        const int p = gain(e);
        if (p == 0) {
          unavailable[static_cast<std::size_t>(e)] = 1;  // submodularity: never recovers
          continue;
        }
        if (best < 0 || beats(p, e, best_p, best)) {
          best = e;
          best_p = p;
        }
      }
      if (best < 0) oracle_failure();
      commit(best, best_p);
    }
    return report;
  }

  // Lazy evaluation: heap keys are profits from earlier steps, hence upper
  // bounds on the true profit. A popped entry is selected only if it was
  // recomputed during the current step; anything that could beat it under
  // the comparator has already been popped and recomputed to a lower key.
  struct Entry {
    int profit;
    Element element;
    std::uint64_t stamp;
  };
  const auto entry_less = [&](const Entry& a, const Entry& b) {
    return beats(b.profit, b.element, a.profit, a.element);
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(entry_less)> heap(entry_less);
  std::vector<std::uint64_t> valid_stamp(static_cast<std::size_t>(ground), 0);
  std::vector<std::uint64_t> evaluated_step(static_cast<std::size_t>(ground), 0);
  std::uint64_t step = 1;
  for (Element e = 0; e < ground; ++e) {
    const int p = gain(e);
    evaluated_step[static_cast<std::size_t>(e)] = step;
    if (p > 0)
      heap.push({p, e, 0});
    else
      unavailable[static_cast<std::size_t>(e)] = 1;
  }

  while (residual > 0) {
    Element picked = -1;
    int picked_p = 0;
    while (!heap.empty()) {
      const Entry top = heap.top();
      heap.pop();
      const auto idx = static_cast<std::size_t>(top.element);
      if (unavailable[idx] || top.stamp != valid_stamp[idx]) continue;  // outdated duplicate
      if (evaluated_step[idx] == step) {
        picked = top.element;
        picked_p = top.profit;
        break;
      }
      const int p = gain(top.element);
      evaluated_step[idx] = step;
      ++valid_stamp[idx];
      if (p > 0)
        heap.push({p, top.element, valid_stamp[idx]});
      else
        unavailable[idx] = 1;
    }
    if (picked < 0) oracle_failure();
    commit(picked, picked_p);
    ++step;
  }
  return report;
}

}  // namespace sths
