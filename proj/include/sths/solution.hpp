#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sths/exact.hpp"
#include "sths/greedy.hpp"
#include "sths/instance.hpp"

namespace sths {

/// Solver-side provenance of a solution, carried into the output format.
struct SolveStats {
  std::string solver;              // "greedy" or "exact"
  std::string status;              // "feasible", "optimal" or "inconclusive"
  int initial_residual = 0;        // R0
  double harmonic_bound = 0.0;     // H(R0)
  bool guarantee_applies = false;  // greedy only: H(R0) cardinality guarantee in force
  std::vector<std::pair<int, int>> steps;  // greedy trace: (graph edge index, profit)
  double lower_bound = 0.0;        // exact only
  double upper_bound = 0.0;        // exact only
  std::uint64_t nodes_explored = 0;  // exact only
};

/// A solved instance: the hitting edge set, one extracted tree per subset,
/// and the stats block describing how it was found.
struct Solution {
  std::vector<int> edges;  // graph edge indices, ascending
  double weight = 0.0;
  std::vector<std::vector<int>> trees;  // per subset, graph edge indices ascending
  SolveStats stats;
};

inline Solution make_solution(const MatroidFamily& family, const SolveReport& report) {
  Solution s;
  const Subset chosen = report.chosen_set();
  s.edges = family.edges_from_subset(chosen);
  s.weight = report.weight;
  s.trees = extract_trees(family, chosen);
  s.stats.solver = "greedy";
  s.stats.status = "feasible";
  s.stats.initial_residual = report.initial_residual;
  s.stats.harmonic_bound = report.harmonic_bound;
  s.stats.guarantee_applies = report.guarantee_applies;
  s.stats.steps.reserve(report.steps.size());
  for (const GreedyStep& st : report.steps)
    s.stats.steps.emplace_back(family.element_to_edge[static_cast<std::size_t>(st.element)], st.profit);
  return s;
}

inline Solution make_solution(const MatroidFamily& family, const ExactResult& result) {
  Solution s;
  const Subset chosen = result.element_set(family.ground_size());
  s.edges = family.edges_from_subset(chosen);
  s.weight = result.value;
  s.trees = extract_trees(family, chosen);
  s.stats.solver = "exact";
  s.stats.status = result.status == ExactStatus::optimal ? "optimal" : "inconclusive";
  s.stats.initial_residual = family.total_rank();
  s.stats.harmonic_bound = harmonic(s.stats.initial_residual);
  s.stats.guarantee_applies = false;
  s.stats.lower_bound = result.lower_bound;
  s.stats.upper_bound = result.upper_bound;
  s.stats.nodes_explored = result.nodes_explored;
  return s;
}

}  // namespace sths
