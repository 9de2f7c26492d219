#pragma once

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sths/exact.hpp"
#include "sths/graph.hpp"
#include "sths/greedy.hpp"
#include "sths/instance.hpp"
#include "sths/solution.hpp"

namespace sths {

/// What to do with a sentence that repeats a token: drop the sentence
/// entirely (the default) or collapse repeats to one node, keeping the first
/// occurrence's position.
enum class RepeatedWordPolicy { skip, dedupe };

struct CorpusOptions {
  bool lowercase = true;
  bool strip_punctuation = true;
  RepeatedWordPolicy policy = RepeatedWordPolicy::skip;
  std::string root_token;  // nonempty: appended to every sentence as an extra node
};

/// Normalized sentence corpus. Sentences keep their token order so the
/// adjacency baseline can walk them left to right.
struct Corpus {
  std::vector<std::vector<std::string>> sentences;
  std::vector<std::string> lexicon;  // sorted distinct tokens
  int skipped_sentences = 0;         // dropped by the skip policy
};

namespace detail {

inline std::vector<std::string> normalize_line(const std::string& line, const CorpusOptions& options) {
  std::vector<std::string> tokens;
  std::istringstream in(line);
  std::string raw;
  while (in >> raw) {
    std::string token;
    for (char c : raw) {
      const auto uc = static_cast<unsigned char>(c);
      if (options.strip_punctuation && std::ispunct(uc)) continue;
      token.push_back(options.lowercase ? static_cast<char>(std::tolower(uc)) : c);
    }
    if (!token.empty()) tokens.push_back(std::move(token));
  }
  return tokens;
}

}  // namespace detail

/// Builds a corpus from raw sentence lines (one sentence per line; blank
/// lines ignored). Throws when nothing survives filtering.
inline Corpus corpus_from_lines(const std::vector<std::string>& lines, const CorpusOptions& options = {}) {
  Corpus corpus;
  std::set<std::string> lexicon;
  for (const std::string& line : lines) {
    std::vector<std::string> tokens = detail::normalize_line(line, options);
    if (tokens.empty()) continue;
    if (!options.root_token.empty()) tokens.push_back(options.root_token);

    std::set<std::string> seen;
    std::vector<std::string> unique_tokens;
    for (const std::string& t : tokens)
      if (seen.insert(t).second) unique_tokens.push_back(t);
    if (unique_tokens.size() != tokens.size()) {
      if (options.policy == RepeatedWordPolicy::skip) {
        ++corpus.skipped_sentences;
        continue;
      }
      tokens = std::move(unique_tokens);
    }

    for (const std::string& t : tokens) lexicon.insert(t);
    corpus.sentences.push_back(std::move(tokens));
  }
  if (corpus.sentences.empty())
    throw std::runtime_error("corpus is empty after filtering (" +
                             std::to_string(corpus.skipped_sentences) + " sentences skipped)");
  corpus.lexicon.assign(lexicon.begin(), lexicon.end());
  return corpus;
}

inline Corpus load_corpus(const std::string& path, const CorpusOptions& options = {}) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open corpus file: " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return corpus_from_lines(lines, options);
}

/// Lexicon becomes the vertex set; every pair of tokens sharing a sentence
/// becomes a weight-1 edge; every sentence's token set becomes a subset.
inline SthsInstance corpus_to_instance(const Corpus& corpus) {
  if (corpus.sentences.empty()) throw std::invalid_argument("corpus_to_instance: empty corpus");
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < corpus.lexicon.size(); ++i)
    index.emplace(corpus.lexicon[i], static_cast<int>(i));

  std::set<std::pair<int, int>> pairs;
  std::vector<std::vector<int>> subsets;
  subsets.reserve(corpus.sentences.size());
  for (const auto& sentence : corpus.sentences) {
    std::vector<int> subset;
    subset.reserve(sentence.size());
    for (const auto& t : sentence) subset.push_back(index.at(t));
    std::sort(subset.begin(), subset.end());
    for (std::size_t a = 0; a < subset.size(); ++a)
      for (std::size_t b = a + 1; b < subset.size(); ++b) pairs.emplace(subset[a], subset[b]);
    subsets.push_back(std::move(subset));
  }

  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& [u, v] : pairs) edges.push_back({u, v, 1.0});
  return SthsInstance{Graph(corpus.lexicon, std::move(edges)), std::move(subsets)};
}

/// One parsed sentence: its tokens and its tree's edges as token pairs.
struct SentenceParse {
  std::vector<std::string> tokens;
  std::vector<std::pair<std::string, std::string>> edges;
};

/// Full pipeline output: the shared grammar (global edge list) plus one
/// spanning tree per sentence, with the solver's stats block.
struct ParseOutput {
  std::vector<std::pair<std::string, std::string>> grammar;
  std::vector<SentenceParse> sentences;
  SolveStats stats;
};

enum class InduceSolver { greedy, exact };

struct InduceOptions {
  InduceSolver solver = InduceSolver::greedy;
  GreedyOptions greedy;
  SearchBudget budget;
};

/// Induces a grammar over the corpus: solve the derived instance, then read
/// one spanning tree per sentence out of the solution.
inline ParseOutput induce(const Corpus& corpus, const InduceOptions& options = {}) {
  SthsInstance instance = corpus_to_instance(corpus);
  const ValidationIssues issues = validate(instance);
  if (!issues.ok())
    throw std::logic_error("corpus instance failed validation: " + issues.joined_errors());
  const MatroidFamily family = build_matroids(instance);
  const auto oracles = family.oracles();

  Solution solution;
  if (options.solver == InduceSolver::greedy) {
    const SolveReport report = greedy_solve(oracles, family.element_weights, options.greedy);
    solution = make_solution(family, report);
  } else {
    const ExactResult result = exact_min_basis_hitting(oracles, family.element_weights, options.budget);
    solution = make_solution(family, result);
  }

  const auto edge_names = [&](int edge_index) {
    const Edge& e = instance.graph.edge(edge_index);
    return std::make_pair(instance.graph.vertex_name(e.u), instance.graph.vertex_name(e.v));
  };

  ParseOutput out;
  out.stats = solution.stats;
  out.grammar.reserve(solution.edges.size());
  for (int idx : solution.edges) out.grammar.push_back(edge_names(idx));
  out.sentences.reserve(corpus.sentences.size());
  for (std::size_t i = 0; i < corpus.sentences.size(); ++i) {
    SentenceParse parse;
    parse.tokens = corpus.sentences[i];
    for (int idx : solution.trees[i]) parse.edges.push_back(edge_names(idx));
    out.sentences.push_back(std::move(parse));
  }
  return out;
}

/// Adjacency heuristic: parse each sentence as the left-to-right path of its
/// tokens. The grammar is the set of distinct adjacent pairs.
inline ParseOutput adjacency_baseline(const Corpus& corpus) {
  ParseOutput out;
  std::set<std::pair<std::string, std::string>> grammar;
  int total_rank = 0;
  for (const auto& sentence : corpus.sentences) {
    SentenceParse parse;
    parse.tokens = sentence;
    for (std::size_t j = 0; j + 1 < sentence.size(); ++j) {
      parse.edges.emplace_back(sentence[j], sentence[j + 1]);
      grammar.insert(std::minmax(sentence[j], sentence[j + 1]));
    }
    total_rank += static_cast<int>(sentence.size()) - 1;
    out.sentences.push_back(std::move(parse));
  }
  out.grammar.assign(grammar.begin(), grammar.end());
  out.stats.solver = "baseline";
  out.stats.status = "feasible";
  out.stats.initial_residual = total_rank;
  out.stats.harmonic_bound = harmonic(total_rank);
  out.stats.guarantee_applies = false;
  return out;
}

}  // namespace sths
