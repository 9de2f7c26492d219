// Command-line front end: solve / exact / induce / baseline / reduce /
// verify / gen over the structured file formats of sths/io.hpp.
//
// Exit codes: 0 success, 1 invalid input or infeasible, 2 internal error.

#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "sths/sths.hpp"

namespace {

struct OutputTarget {
  std::string path;  // empty: stdout

  void emit(const std::string& content) const {
    if (path.empty())
      std::cout << content;
    else
      sths::detail::write_text_file(path, content);
  }
};

sths::ConnectivityPolicy parse_policy(const std::string& s) {
  return s == "allow-forest" ? sths::ConnectivityPolicy::allow_forest
                             : sths::ConnectivityPolicy::require_connected;
}

sths::GreedyOptions make_greedy_options(const std::string& tie_break, const std::string& rule) {
  sths::GreedyOptions options;
  options.tie_break =
      tie_break == "highest" ? sths::TieBreak::highest_index : sths::TieBreak::lowest_index;
  options.weighted_rule =
      rule == "profit" ? sths::WeightedRule::profit : sths::WeightedRule::profit_per_weight;
  return options;
}

sths::SthsInstance load_validated_instance(const std::string& path, const std::string& policy) {
  sths::SthsInstance instance = sths::read_instance(path);
  const sths::ValidationIssues issues = sths::validate(instance, parse_policy(policy));
  for (const std::string& w : issues.warnings) std::cerr << "warning: " << w << "\n";
  if (!issues.ok()) throw std::runtime_error("invalid instance: " + issues.joined_errors());
  return instance;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum basis hitting set solver: one shared edge set that contains a spanning "
               "tree for every vertex subset, plus reductions and a grammar-induction pipeline."};
  app.require_subcommand(1);
  int exit_status = 0;

  // ---- solve: greedy on an instance file
  std::string solve_input, solve_policy = "require-connected", solve_tie = "lowest";
  std::string solve_rule = "profit-per-weight";
  OutputTarget solve_out;
  auto* solve = app.add_subcommand("solve", "Greedy solve of an instance file");
  solve->add_option("instance", solve_input, "Instance file")->required();
  solve->add_option("--policy", solve_policy, "Connectivity policy")
      ->check(CLI::IsMember({"require-connected", "allow-forest"}));
  solve->add_option("--tie-break", solve_tie, "Equal-profit tie-break")
      ->check(CLI::IsMember({"lowest", "highest"}));
  solve->add_option("--weighted-rule", solve_rule, "Weighted selection rule")
      ->check(CLI::IsMember({"profit-per-weight", "profit"}));
  solve->add_option("--output", solve_out.path, "Output file (default: stdout)");
  solve->callback([&] {
    const sths::SthsInstance instance = load_validated_instance(solve_input, solve_policy);
    const sths::MatroidFamily family = sths::build_matroids(instance);
    const auto oracles = family.oracles();
    const sths::SolveReport report =
        sths::greedy_solve(oracles, family.element_weights, make_greedy_options(solve_tie, solve_rule));
    const sths::Solution solution = sths::make_solution(family, report);
    solve_out.emit(sths::solution_to_string(solution, instance.graph));
  });

  // ---- exact: certified optimum of an instance file
  std::string exact_input, exact_policy = "require-connected";
  std::uint64_t exact_max_nodes = sths::SearchBudget{}.max_nodes;
  int exact_max_ground = sths::SearchBudget{}.max_ground;
  OutputTarget exact_out;
  auto* exact = app.add_subcommand("exact", "Exact solve of an instance file (small instances)");
  exact->add_option("instance", exact_input, "Instance file")->required();
  exact->add_option("--policy", exact_policy, "Connectivity policy")
      ->check(CLI::IsMember({"require-connected", "allow-forest"}));
  exact->add_option("--max-nodes", exact_max_nodes, "Search node budget");
  exact->add_option("--max-ground", exact_max_ground, "Ground set size cap");
  exact->add_option("--output", exact_out.path, "Output file (default: stdout)");
  exact->callback([&] {
    const sths::SthsInstance instance = load_validated_instance(exact_input, exact_policy);
    const sths::MatroidFamily family = sths::build_matroids(instance);
    const auto oracles = family.oracles();
    sths::SearchBudget budget;
    budget.max_nodes = exact_max_nodes;
    budget.max_ground = static_cast<sths::Element>(exact_max_ground);
    const sths::ExactResult result =
        sths::exact_min_basis_hitting(oracles, family.element_weights, budget);
    const sths::Solution solution = sths::make_solution(family, result);
    exact_out.emit(sths::solution_to_string(solution, instance.graph));
  });

  // ---- shared corpus flags for induce/baseline
  struct CorpusFlags {
    std::string input;
    bool keep_case = false;
    bool keep_punctuation = false;
    std::string repeated = "skip";
    std::string root_token;
    std::string format = "json";
    OutputTarget out;

    sths::CorpusOptions options() const {
      sths::CorpusOptions o;
      o.lowercase = !keep_case;
      o.strip_punctuation = !keep_punctuation;
      o.policy = repeated == "dedupe" ? sths::RepeatedWordPolicy::dedupe : sths::RepeatedWordPolicy::skip;
      o.root_token = root_token;
      return o;
    }
  };
  const auto add_corpus_flags = [](CLI::App* cmd, CorpusFlags& f) {
    cmd->add_option("corpus", f.input, "Corpus file, one sentence per line")->required();
    cmd->add_flag("--keep-case", f.keep_case, "Do not lowercase tokens");
    cmd->add_flag("--keep-punctuation", f.keep_punctuation, "Do not strip punctuation");
    cmd->add_option("--repeated", f.repeated, "Repeated-word policy")
        ->check(CLI::IsMember({"skip", "dedupe"}));
    cmd->add_option("--root-token", f.root_token, "Append this token to every sentence");
    cmd->add_option("--format", f.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--output", f.out.path, "Output file (default: stdout)");
  };
  const auto load_corpus_with_note = [](const CorpusFlags& f) {
    const sths::Corpus corpus = sths::load_corpus(f.input, f.options());
    if (corpus.skipped_sentences > 0)
      std::cerr << "warning: skipped " << corpus.skipped_sentences
                << " sentence(s) with repeated words\n";
    return corpus;
  };

  // ---- induce: corpus -> grammar + parses
  CorpusFlags induce_flags;
  std::string induce_solver = "greedy", induce_tie = "lowest";
  auto* induce = app.add_subcommand("induce", "Induce a grammar from a sentence corpus");
  add_corpus_flags(induce, induce_flags);
  induce->add_option("--solver", induce_solver, "Solver")->check(CLI::IsMember({"greedy", "exact"}));
  induce->add_option("--tie-break", induce_tie, "Equal-profit tie-break")
      ->check(CLI::IsMember({"lowest", "highest"}));
  induce->callback([&] {
    const sths::Corpus corpus = load_corpus_with_note(induce_flags);
    sths::InduceOptions options;
    options.solver =
        induce_solver == "exact" ? sths::InduceSolver::exact : sths::InduceSolver::greedy;
    options.greedy = make_greedy_options(induce_tie, "profit-per-weight");
    const sths::ParseOutput parses = sths::induce(corpus, options);
    if (induce_flags.format == "text") {
      induce_flags.out.emit(sths::parses_to_text(parses));
    } else {
      const sths::SthsInstance instance = sths::corpus_to_instance(corpus);
      induce_flags.out.emit(sths::parses_to_string(parses, instance.graph));
    }
  });

  // ---- baseline: corpus -> adjacency-path parses
  CorpusFlags baseline_flags;
  auto* baseline = app.add_subcommand("baseline", "Adjacency-path baseline parses for a corpus");
  add_corpus_flags(baseline, baseline_flags);
  baseline->callback([&] {
    const sths::Corpus corpus = load_corpus_with_note(baseline_flags);
    const sths::ParseOutput parses = sths::adjacency_baseline(corpus);
    if (baseline_flags.format == "text") {
      baseline_flags.out.emit(sths::parses_to_text(parses));
    } else {
      const sths::SthsInstance instance = sths::corpus_to_instance(corpus);
      baseline_flags.out.emit(sths::parses_to_string(parses, instance.graph));
    }
  });

  // ---- reduce: hitting set / vertex cover -> gadget instance + certificate
  std::string reduce_input, reduce_certificate;
  OutputTarget reduce_out;
  auto* reduce = app.add_subcommand(
      "reduce", "Build the gadget instance for a hitting-set or graph (vertex cover) file");
  reduce->add_option("input", reduce_input, "Hitting-set or graph file")->required();
  reduce->add_option("--output", reduce_out.path, "Instance output file (default: stdout)");
  reduce->add_option("--certificate", reduce_certificate, "Also write the reduction certificate here");
  reduce->callback([&] {
    const sths::Json j =
        sths::detail::parse_json_text(sths::detail::read_text_file(reduce_input), reduce_input);
    if (!j.is_object() || !j.contains("format") || !j.at("format").is_string())
      throw std::runtime_error(reduce_input + ": missing \"format\" tag");
    const std::string format = j.at("format").get<std::string>();
    sths::ReductionCertificate cert;
    if (format == sths::kHittingSetFormat)
      cert = sths::reduce_hitting_set_weighted(sths::hitting_set_from_json(j));
    else if (format == sths::kGraphFormat)
      cert = sths::reduce_vertex_cover_unweighted(sths::graph_from_json(j));
    else
      throw std::runtime_error(reduce_input + ": cannot reduce files of format \"" + format + "\"");
    reduce_out.emit(sths::instance_to_string(cert.instance));
    if (!reduce_certificate.empty()) sths::write_certificate(reduce_certificate, cert);
  });

  // ---- verify: instance + solution -> feasibility report
  std::string verify_instance_path, verify_solution_path, verify_policy = "require-connected";
  OutputTarget verify_out;
  auto* verify = app.add_subcommand("verify", "Check a solution file against its instance");
  verify->add_option("instance", verify_instance_path, "Instance file")->required();
  verify->add_option("solution", verify_solution_path, "Solution file")->required();
  verify->add_option("--policy", verify_policy, "Connectivity policy")
      ->check(CLI::IsMember({"require-connected", "allow-forest"}));
  verify->add_option("--output", verify_out.path, "Report file (default: stdout)");
  verify->callback([&] {
    const sths::SthsInstance instance = load_validated_instance(verify_instance_path, verify_policy);
    const sths::MatroidFamily family = sths::build_matroids(instance);
    const sths::Solution solution = sths::read_solution(verify_solution_path, instance.graph);
    const sths::Subset chosen = family.subset_from_edges(solution.edges);
    const auto oracles = family.oracles();
    const sths::DeficitReport report = sths::verify_solution(oracles, chosen);
    verify_out.emit(sths::deficit_report_to_string(report));
    if (!report.feasible()) exit_status = 1;
  });

  // ---- gen: seeded random instance
  std::uint64_t gen_seed = 1;
  sths::RandomInstanceParams gen_params;
  OutputTarget gen_out;
  auto* gen = app.add_subcommand("gen", "Generate a random instance (deterministic per seed)");
  gen->add_option("--seed", gen_seed, "Random seed");
  gen->add_option("--vertices", gen_params.n_vertices, "Vertex count");
  gen->add_option("--subsets", gen_params.n_subsets, "Subset count");
  gen->add_option("--min-size", gen_params.subset_size_min, "Smallest subset size");
  gen->add_option("--max-size", gen_params.subset_size_max, "Largest subset size");
  gen->add_option("--density", gen_params.edge_density, "Edge keep probability");
  gen->add_option("--weight-min", gen_params.weight_min, "Smallest edge weight");
  gen->add_option("--weight-max", gen_params.weight_max, "Largest edge weight");
  gen->add_option("--output", gen_out.path, "Output file (default: stdout)");
  gen->callback([&] {
    const sths::SthsInstance instance = sths::generate_random_instance(gen_seed, gen_params);
    gen_out.emit(sths::instance_to_string(instance));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return exit_status;
}
