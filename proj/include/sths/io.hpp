#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "sths/corpus.hpp"
#include "sths/exact.hpp"
#include "sths/graph.hpp"
#include "sths/instance.hpp"
#include "sths/reductions.hpp"
#include "sths/solution.hpp"

namespace sths {

// nlohmann::json keeps object keys sorted, so dump(2) is byte-stable for a
// fixed value; every writer in this header relies on that.
using Json = nlohmann::json;

inline constexpr const char* kInstanceFormat = "sths-instance/1";
inline constexpr const char* kGraphFormat = "sths-graph/1";
inline constexpr const char* kSolutionFormat = "sths-solution/1";
inline constexpr const char* kHittingSetFormat = "sths-hitting-set/1";
inline constexpr const char* kCertificateFormat = "sths-certificate/1";
inline constexpr const char* kParsesFormat = "sths-parses/1";
inline constexpr const char* kVerifyFormat = "sths-verify/1";

namespace detail {

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

inline void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

inline Json parse_json_text(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw std::runtime_error(what + ": not valid JSON (" + e.what() + ")");
  }
}

inline void require_format(const Json& j, const std::string& expected, const std::string& what) {
  if (!j.is_object()) throw std::runtime_error(what + ": expected a JSON object");
  if (!j.contains("format") || !j.at("format").is_string() || j.at("format") != expected)
    throw std::runtime_error(what + ": missing or wrong \"format\" tag (expected \"" + expected + "\")");
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

inline Json name_pair(const Graph& g, int edge_index) {
  const Edge& e = g.edge(edge_index);
  return Json::array({g.vertex_name(e.u), g.vertex_name(e.v)});
}

inline int lookup_vertex(const Graph& g, const std::string& name, const std::string& what) {
  const int v = g.vertex_index(name);
  if (v < 0) throw std::runtime_error(what + ": unknown vertex \"" + name + "\"");
  return v;
}

inline std::pair<std::vector<std::string>, std::vector<Edge>> graph_parts_from_json(
    const Json& j, const std::string& what) {
  std::vector<std::string> names;
  for (const Json& v : j.at("vertices")) {
    if (!v.is_string()) throw std::runtime_error(what + ": vertex names must be strings");
    names.push_back(v.get<std::string>());
  }
  std::vector<Edge> edges;
  for (const Json& ej : j.at("edges")) {
    if (!ej.is_array() || ej.size() < 2 || ej.size() > 3)
      throw std::runtime_error(what + ": each edge must be [u, v] or [u, v, weight]");
    if (!ej[0].is_string() || !ej[1].is_string())
      throw std::runtime_error(what + ": edge endpoints must be vertex names");
    const auto find = [&](const std::string& n) {
      const auto it = std::find(names.begin(), names.end(), n);
      if (it == names.end()) throw std::runtime_error(what + ": unknown vertex \"" + n + "\" in edge");
      return static_cast<int>(it - names.begin());
    };
    Edge e;
    e.u = find(ej[0].get<std::string>());
    e.v = find(ej[1].get<std::string>());
    if (ej.size() == 3) {
      if (!ej[2].is_number()) throw std::runtime_error(what + ": edge weight must be a number");
      e.weight = ej[2].get<double>();
    }
    edges.push_back(e);
  }
  return {std::move(names), std::move(edges)};
}

inline Json graph_body_to_json(const Graph& g) {
  Json j;
  j["vertices"] = g.vertex_names();
  Json edges = Json::array();
  for (int i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    edges.push_back(Json::array({g.vertex_name(e.u), g.vertex_name(e.v), e.weight}));
  }
  j["edges"] = std::move(edges);
  return j;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Instance files
// ---------------------------------------------------------------------------

inline Json instance_to_json(const SthsInstance& instance) {
  Json j = detail::graph_body_to_json(instance.graph);
  j["format"] = kInstanceFormat;
  Json subsets = Json::array();
  for (const auto& s : instance.subsets) {
    Json names = Json::array();
    for (int v : s) names.push_back(instance.graph.vertex_name(v));
    subsets.push_back(std::move(names));
  }
  j["subsets"] = std::move(subsets);
  return j;
}

inline std::string instance_to_string(const SthsInstance& instance) {
  return detail::dump(instance_to_json(instance));
}

inline SthsInstance instance_from_json(const Json& j) {
  const std::string what = "instance";
  detail::require_format(j, kInstanceFormat, what);
  try {
    auto [names, edges] = detail::graph_parts_from_json(j, what);
    Graph graph(std::move(names), std::move(edges));
    std::vector<std::vector<int>> subsets;
    for (const Json& sj : j.at("subsets")) {
      std::vector<int> s;
      for (const Json& v : sj) {
        if (!v.is_string()) throw std::runtime_error(what + ": subset entries must be vertex names");
        s.push_back(detail::lookup_vertex(graph, v.get<std::string>(), what));
      }
      subsets.push_back(std::move(s));
    }
    return SthsInstance{std::move(graph), std::move(subsets)};
  } catch (const Json::exception& e) {
    throw std::runtime_error(what + ": " + e.what());
  }
}

inline SthsInstance read_instance(const std::string& path) {
  return instance_from_json(detail::parse_json_text(detail::read_text_file(path), path));
}

inline void write_instance(const std::string& path, const SthsInstance& instance) {
  detail::write_text_file(path, instance_to_string(instance));
}

// ---------------------------------------------------------------------------
// Plain graph files (vertex-cover reduction input)
// ---------------------------------------------------------------------------

inline Json graph_to_json(const Graph& g) {
  Json j = detail::graph_body_to_json(g);
  j["format"] = kGraphFormat;
  return j;
}

inline std::string graph_to_string(const Graph& g) { return detail::dump(graph_to_json(g)); }

inline Graph graph_from_json(const Json& j) {
  const std::string what = "graph";
  detail::require_format(j, kGraphFormat, what);
  try {
    auto [names, edges] = detail::graph_parts_from_json(j, what);
    return Graph(std::move(names), std::move(edges));
  } catch (const Json::exception& e) {
    throw std::runtime_error(what + ": " + e.what());
  }
}

inline Graph read_graph(const std::string& path) {
  return graph_from_json(detail::parse_json_text(detail::read_text_file(path), path));
}

inline void write_graph(const std::string& path, const Graph& g) {
  detail::write_text_file(path, graph_to_string(g));
}

// ---------------------------------------------------------------------------
// Solution files
// ---------------------------------------------------------------------------

inline Json stats_to_json(const SolveStats& stats, const Graph& g) {
  Json j;
  j["solver"] = stats.solver;
  j["status"] = stats.status;
  j["R0"] = stats.initial_residual;
  j["harmonic_bound"] = stats.harmonic_bound;
  j["guarantee_applies"] = stats.guarantee_applies;
  Json steps = Json::array();
  for (const auto& [edge_index, profit] : stats.steps) {
    const Edge& e = g.edge(edge_index);
    steps.push_back(Json::array({g.vertex_name(e.u), g.vertex_name(e.v), profit}));
  }
  j["steps"] = std::move(steps);
  if (stats.solver == "exact") {
    j["lower_bound"] = stats.lower_bound;
    j["upper_bound"] = stats.upper_bound;
    j["nodes_explored"] = stats.nodes_explored;
  }
  return j;
}

inline Json solution_to_json(const Solution& solution, const Graph& g) {
  Json j;
  j["format"] = kSolutionFormat;
  Json edges = Json::array();
  for (int idx : solution.edges) edges.push_back(detail::name_pair(g, idx));
  j["edges"] = std::move(edges);
  j["weight"] = solution.weight;
  Json trees = Json::array();
  for (const auto& tree : solution.trees) {
    Json t = Json::array();
    for (int idx : tree) t.push_back(detail::name_pair(g, idx));
    trees.push_back(std::move(t));
  }
  j["trees"] = std::move(trees);
  j["stats"] = stats_to_json(solution.stats, g);
  return j;
}

inline std::string solution_to_string(const Solution& solution, const Graph& g) {
  return detail::dump(solution_to_json(solution, g));
}

/// Reads back a solution against its instance's graph. Stats are restored on
/// a best-effort basis (enough for reporting; the numbers are not re-derived).
inline Solution solution_from_json(const Json& j, const Graph& g) {
  const std::string what = "solution";
  detail::require_format(j, kSolutionFormat, what);
  try {
    Solution s;
    const auto edge_of = [&](const Json& pair) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string())
        throw std::runtime_error(what + ": edges must be [u, v] name pairs");
      const int u = detail::lookup_vertex(g, pair[0].get<std::string>(), what);
      const int v = detail::lookup_vertex(g, pair[1].get<std::string>(), what);
      const int idx = g.edge_index(u, v);
      if (idx < 0)
        throw std::runtime_error(what + ": edge (" + pair[0].get<std::string>() + ", " +
                                 pair[1].get<std::string>() + ") is not in the graph");
      return idx;
    };
    for (const Json& pair : j.at("edges")) s.edges.push_back(edge_of(pair));
    s.weight = j.at("weight").get<double>();
    if (j.contains("trees"))
      for (const Json& tj : j.at("trees")) {
        std::vector<int> tree;
        for (const Json& pair : tj) tree.push_back(edge_of(pair));
        s.trees.push_back(std::move(tree));
      }
    if (j.contains("stats")) {
      const Json& st = j.at("stats");
      if (st.contains("solver")) s.stats.solver = st.at("solver").get<std::string>();
      if (st.contains("status")) s.stats.status = st.at("status").get<std::string>();
      if (st.contains("R0")) s.stats.initial_residual = st.at("R0").get<int>();
      if (st.contains("harmonic_bound")) s.stats.harmonic_bound = st.at("harmonic_bound").get<double>();
      if (st.contains("guarantee_applies"))
        s.stats.guarantee_applies = st.at("guarantee_applies").get<bool>();
      if (st.contains("lower_bound")) s.stats.lower_bound = st.at("lower_bound").get<double>();
      if (st.contains("upper_bound")) s.stats.upper_bound = st.at("upper_bound").get<double>();
      if (st.contains("nodes_explored"))
        s.stats.nodes_explored = st.at("nodes_explored").get<std::uint64_t>();
      if (st.contains("steps"))
        for (const Json& step : st.at("steps")) {
          if (!step.is_array() || step.size() != 3)
            throw std::runtime_error(what + ": steps must be [u, v, profit] triples");
          const int u = detail::lookup_vertex(g, step[0].get<std::string>(), what);
          const int v = detail::lookup_vertex(g, step[1].get<std::string>(), what);
          s.stats.steps.emplace_back(g.edge_index(u, v), step[2].get<int>());
        }
    }
    return s;
  } catch (const Json::exception& e) {
    throw std::runtime_error(what + ": " + e.what());
  }
}

inline Solution read_solution(const std::string& path, const Graph& g) {
  return solution_from_json(detail::parse_json_text(detail::read_text_file(path), path), g);
}

inline void write_solution(const std::string& path, const Solution& solution, const Graph& g) {
  detail::write_text_file(path, solution_to_string(solution, g));
}

// ---------------------------------------------------------------------------
// Hitting set files
// ---------------------------------------------------------------------------

inline Json hitting_set_to_json(const HittingSetInstance& hs) {
  Json j;
  j["format"] = kHittingSetFormat;
  j["universe"] = hs.universe;
  Json sets = Json::array();
  for (const auto& set : hs.sets) {
    Json labels = Json::array();
    for (int e : set) labels.push_back(hs.universe[static_cast<std::size_t>(e)]);
    sets.push_back(std::move(labels));
  }
  j["sets"] = std::move(sets);
  return j;
}

inline std::string hitting_set_to_string(const HittingSetInstance& hs) {
  return detail::dump(hitting_set_to_json(hs));
}

inline HittingSetInstance hitting_set_from_json(const Json& j) {
  const std::string what = "hitting set";
  detail::require_format(j, kHittingSetFormat, what);
  try {
    HittingSetInstance hs;
    for (const Json& v : j.at("universe")) {
      if (!v.is_string()) throw std::runtime_error(what + ": universe labels must be strings");
      hs.universe.push_back(v.get<std::string>());
    }
    for (const Json& sj : j.at("sets")) {
      std::vector<int> set;
      for (const Json& v : sj) {
        if (!v.is_string()) throw std::runtime_error(what + ": set entries must be labels");
        const auto it = std::find(hs.universe.begin(), hs.universe.end(), v.get<std::string>());
        if (it == hs.universe.end())
          throw std::runtime_error(what + ": unknown element \"" + v.get<std::string>() + "\"");
        set.push_back(static_cast<int>(it - hs.universe.begin()));
      }
      hs.sets.push_back(std::move(set));
    }
    return hs;
  } catch (const Json::exception& e) {
    throw std::runtime_error(what + ": " + e.what());
  }
}

inline HittingSetInstance read_hitting_set(const std::string& path) {
  return hitting_set_from_json(detail::parse_json_text(detail::read_text_file(path), path));
}

inline void write_hitting_set(const std::string& path, const HittingSetInstance& hs) {
  detail::write_text_file(path, hitting_set_to_string(hs));
}

// ---------------------------------------------------------------------------
// Reduction certificates
// ---------------------------------------------------------------------------

inline Json certificate_to_json(const ReductionCertificate& cert) {
  Json j;
  j["format"] = kCertificateFormat;
  j["apex"] = cert.apex;
  j["n"] = cert.n;
  j["edge_count"] = cert.edge_count;
  j["instance"] = instance_to_json(cert.instance);
  if (cert.kind == ReductionKind::hitting_set_weighted) {
    j["kind"] = "hitting-set-weighted";
    j["identity"] = "h = h' * n^3 + C(n, 2)";
    j["source"] = hitting_set_to_json(*cert.source_hitting_set);
  } else {
    j["kind"] = "vertex-cover-unweighted";
    j["identity"] = "h = c + |E'|";
    j["source"] = graph_to_json(*cert.source_graph);
  }
  return j;
}

inline std::string certificate_to_string(const ReductionCertificate& cert) {
  return detail::dump(certificate_to_json(cert));
}

inline ReductionCertificate certificate_from_json(const Json& j) {
  const std::string what = "certificate";
  detail::require_format(j, kCertificateFormat, what);
  try {
    ReductionCertificate cert;
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "hitting-set-weighted") {
      cert.kind = ReductionKind::hitting_set_weighted;
      cert.source_hitting_set = hitting_set_from_json(j.at("source"));
    } else if (kind == "vertex-cover-unweighted") {
      cert.kind = ReductionKind::vertex_cover_unweighted;
      cert.source_graph = graph_from_json(j.at("source"));
    } else {
      throw std::runtime_error(what + ": unknown kind \"" + kind + "\"");
    }
    cert.apex = j.at("apex").get<std::string>();
    cert.n = j.at("n").get<int>();
    cert.edge_count = j.at("edge_count").get<int>();
    cert.instance = instance_from_json(j.at("instance"));
    return cert;
  } catch (const Json::exception& e) {
    throw std::runtime_error(what + ": " + e.what());
  }
}

inline ReductionCertificate read_certificate(const std::string& path) {
  return certificate_from_json(detail::parse_json_text(detail::read_text_file(path), path));
}

inline void write_certificate(const std::string& path, const ReductionCertificate& cert) {
  detail::write_text_file(path, certificate_to_string(cert));
}

// ---------------------------------------------------------------------------
// Parse output (grammar induction)
// ---------------------------------------------------------------------------

inline Json parses_to_json(const ParseOutput& parses, const Graph& g) {
  Json j;
  j["format"] = kParsesFormat;
  Json grammar = Json::array();
  for (const auto& [a, b] : parses.grammar) grammar.push_back(Json::array({a, b}));
  j["grammar"] = std::move(grammar);
  Json sentences = Json::array();
  for (const auto& parse : parses.sentences) {
    Json s;
    s["tokens"] = parse.tokens;
    Json edges = Json::array();
    for (const auto& [a, b] : parse.edges) edges.push_back(Json::array({a, b}));
    s["edges"] = std::move(edges);
    sentences.push_back(std::move(s));
  }
  j["sentences"] = std::move(sentences);
  j["stats"] = stats_to_json(parses.stats, g);
  return j;
}

inline std::string parses_to_string(const ParseOutput& parses, const Graph& g) {
  return detail::dump(parses_to_json(parses, g));
}

/// Human-readable form: one line per sentence, its tree as "a-b, c-d" pairs.
inline std::string parses_to_text(const ParseOutput& parses) {
  std::ostringstream out;
  for (const auto& parse : parses.sentences) {
    for (std::size_t i = 0; i < parse.edges.size(); ++i)
      out << (i ? ", " : "") << parse.edges[i].first << "-" << parse.edges[i].second;
    out << "\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Feasibility reports
// ---------------------------------------------------------------------------

inline Json deficit_report_to_json(const DeficitReport& report) {
  Json j;
  j["format"] = kVerifyFormat;
  j["feasible"] = report.feasible();
  Json deficits = Json::array();
  for (const MatroidDeficit& d : report.deficits) {
    Json entry;
    entry["subset"] = d.matroid;
    entry["deficit"] = d.deficit;
    deficits.push_back(std::move(entry));
  }
  j["deficits"] = std::move(deficits);
  return j;
}

inline std::string deficit_report_to_string(const DeficitReport& report) {
  return detail::dump(deficit_report_to_json(report));
}

}  // namespace sths
