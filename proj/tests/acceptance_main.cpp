// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits nonzero if any fails. Criteria c1-c3 carry hard time limits; the
// whole binary runs under the ctest timeout.
//
// Usage: sths_acceptance <cli-binary> <data-dir>

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "sths/sths.hpp"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"

namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool condition, const std::string& note) {
    if (!condition) {
      ok = false;
      if (!detail.str().empty()) detail << "; ";
      detail << note;
    }
  }
};

struct Runner {
  bool all_ok = true;

  void criterion(const std::string& name, double time_limit_s,
                 const std::function<void(Outcome&)>& body) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
      body(out);
    } catch (const std::exception& e) {
      out.require(false, std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (time_limit_s > 0 && seconds > time_limit_s) {
      std::ostringstream note;
      note << "took " << std::fixed << std::setprecision(2) << seconds << "s, limit "
           << time_limit_s << "s";
      out.require(false, note.str());
    }
    all_ok = all_ok && out.ok;
    std::cout << (out.ok ? "PASS" : "FAIL") << "  " << name << "  (" << std::fixed
              << std::setprecision(2) << seconds << "s)";
    if (!out.ok) std::cout << "  [" << out.detail.str() << "]";
    std::cout << "\n";
  }
};

std::uint32_t edge_mask_of(const sths::MatroidFamily& family,
                           const std::vector<sths::Element>& elements) {
  std::uint32_t mask = 0;
  for (sths::Element e : elements)
    mask |= std::uint32_t{1} << family.element_to_edge[static_cast<std::size_t>(e)];
  return mask;
}

sths::HittingSetInstance random_hitting_set(std::mt19937_64& rng, int max_universe, int max_sets) {
  const int n = 1 + static_cast<int>(sths::uniform_below(rng, static_cast<std::uint64_t>(max_universe)));
  const int m = 1 + static_cast<int>(sths::uniform_below(rng, static_cast<std::uint64_t>(max_sets)));
  sths::HittingSetInstance hs;
  for (int i = 0; i < n; ++i) hs.universe.push_back("x" + std::to_string(i));
  for (int j = 0; j < m; ++j) {
    std::vector<int> set;
    for (int i = 0; i < n; ++i)
      if (sths::uniform_below(rng, 2) == 0) set.push_back(i);
    if (set.empty())
      set.push_back(static_cast<int>(sths::uniform_below(rng, static_cast<std::uint64_t>(n))));
    hs.sets.push_back(std::move(set));
  }
  return hs;
}

/// Checks that a parse is a spanning tree of its sentence's tokens.
bool is_spanning_parse(const std::vector<std::string>& tokens,
                       const std::vector<std::pair<std::string, std::string>>& edges) {
  if (tokens.size() <= 1) return edges.empty();
  const auto index_of = [&](const std::string& t) {
    for (std::size_t i = 0; i < tokens.size(); ++i)
      if (tokens[i] == t) return static_cast<int>(i);
    return -1;
  };
  std::vector<std::pair<int, int>> pairs;
  for (const auto& [a, b] : edges) {
    const int u = index_of(a);
    const int v = index_of(b);
    if (u < 0 || v < 0) return false;
    pairs.emplace_back(u, v);
  }
  return edges.size() == tokens.size() - 1 &&
         reference::forest_rank(pairs) == static_cast<int>(tokens.size()) - 1;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: sths_acceptance <cli-binary> <data-dir>\n";
    return 2;
  }
  const std::string cli = argv[1];
  const fs::path data = argv[2];
  Runner runner;

  // c1: on the five-vertex counterexample the exact optimum has 6 edges and
  // skips {4,5}; greedy returns 7 edges including it, within H(12).
  runner.criterion("c1 counterexample: exact 6 vs greedy 7", 1.0, [&](Outcome& out) {
    const sths::SthsInstance instance = fixtures::counterexample();
    const sths::MatroidFamily family = sths::build_matroids(instance);
    const auto oracles = family.oracles();
    const int hub_edge = instance.graph.edge_index(3, 4);  // vertices "4","5"
    const sths::Subset hub = family.subset_from_edges(std::vector<int>{hub_edge});

    const sths::ExactResult exact = sths::exact_min_basis_hitting(oracles, family.element_weights);
    out.require(exact.status == sths::ExactStatus::optimal, "exact not optimal");
    out.require(exact.value == 6.0, "exact value != 6");
    out.require(!exact.element_set(family.ground_size()).intersects(hub),
                "exact solution uses edge {4,5}");
    out.require(reference::feasible(instance, edge_mask_of(family, exact.elements)),
                "exact solution infeasible per reference");

    const sths::SolveReport greedy = sths::greedy_solve(oracles, family.element_weights);
    out.require(greedy.chosen.size() == 7, "greedy size != 7");
    out.require(greedy.chosen_set().intersects(hub), "greedy skipped edge {4,5}");
    out.require(greedy.initial_residual == 12, "R0 != 12");
    out.require(std::abs(greedy.harmonic_bound - 3.103210678210678) < 1e-12, "H(12) off");
    out.require(7.0 <= 6.0 * greedy.harmonic_bound, "ratio outside H(12)");
  });

  // c2: >= 50 random hitting-set reductions, both sides solved independently,
  // identity h = h' * n^3 + C(n,2) verified each time.
  runner.criterion("c2 hitting-set gadgets: 50 certificates", 30.0, [&](Outcome& out) {
    std::mt19937_64 rng(2026);
    for (int t = 0; t < 50; ++t) {
      const sths::HittingSetInstance hs = random_hitting_set(rng, 5, 5);
      const sths::CertificateCheck check =
          sths::check_certificate(sths::reduce_hitting_set_weighted(hs));
      if (check.status != sths::CheckStatus::verified) {
        std::ostringstream note;
        note << "trial " << t << ": predicted " << check.predicted << ", produced "
             << check.produced_optimum;
        out.require(false, note.str());
        return;
      }
    }
  });

  // c3: vertex-cover reduction across every graph on at most 5 vertices
  // (1099 graphs), identity h = c + |E'| verified on each.
  runner.criterion("c3 vertex-cover gadgets: all graphs n<=5", 60.0, [&](Outcome& out) {
    int cases = 0;
    for (int n = 1; n <= 5; ++n) {
      std::vector<std::string> names;
      for (int v = 0; v < n; ++v) names.push_back("v" + std::to_string(v));
      std::vector<std::pair<int, int>> pairs;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);

      for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << pairs.size()); ++mask) {
        std::vector<sths::Edge> edges;
        for (std::size_t i = 0; i < pairs.size(); ++i)
          if (mask & (std::uint32_t{1} << i))
            edges.push_back({pairs[i].first, pairs[i].second, 1.0});
        const sths::Graph g(names, edges);
        const sths::CertificateCheck check =
            sths::check_certificate(sths::reduce_vertex_cover_unweighted(g));
        if (check.status != sths::CheckStatus::verified) {
          std::ostringstream note;
          note << "n=" << n << " mask=" << mask << ": predicted " << check.predicted
               << ", produced " << check.produced_optimum;
          out.require(false, note.str());
          return;
        }
        ++cases;
      }
    }
    out.require(cases >= 1000, "fewer than 1000 graphs checked");
  });

  // c4: greedy stays feasible and within H(R0) of the optimum on >= 200
  // random instances with ground sets of at most 16 elements.
  runner.criterion("c4 greedy guarantee on 200 random instances", 0, [&](Outcome& out) {
    double worst_ratio = 0.0;
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
      sths::RandomInstanceParams params;
      params.n_vertices = 6;
      params.n_subsets = 4;
      const sths::SthsInstance instance = sths::generate_random_instance(seed, params);
      const sths::MatroidFamily family = sths::build_matroids(instance);
      const auto oracles = family.oracles();
      if (family.ground_size() > 16) {
        out.require(false, "ground set exceeded 16");
        return;
      }

      const sths::SolveReport greedy = sths::greedy_solve(oracles, family.element_weights);
      const bool feasible =
          sths::verify_solution(oracles, greedy.chosen_set()).feasible() &&
          reference::feasible(instance, edge_mask_of(family, greedy.chosen));
      const sths::ExactResult exact =
          sths::exact_min_basis_hitting(oracles, family.element_weights);
      const bool within = exact.value == 0.0
                              ? greedy.chosen.empty()
                              : static_cast<double>(greedy.chosen.size()) <=
                                    exact.value * greedy.harmonic_bound + 1e-9;
      if (exact.value > 0.0)
        worst_ratio = std::max(worst_ratio, static_cast<double>(greedy.chosen.size()) / exact.value);
      if (!feasible || exact.status != sths::ExactStatus::optimal || !within) {
        out.require(false, "seed " + std::to_string(seed) + " violated the guarantee");
        return;
      }
    }
    out.require(worst_ratio >= 1.0, "ratios never computed");
  });

  // c5: rank axioms hold exhaustively (ground <= 10) for a graphic matroid,
  // a rank-1 uniform matroid and a dual matroid.
  runner.criterion("c5 rank axioms, exhaustive sweeps", 0, [&](Outcome& out) {
    sths::GroundEdges k5;
    for (int u = 0; u < 5; ++u)
      for (int v = u + 1; v < 5; ++v) k5.endpoints.emplace_back(u, v);
    const auto k5_ptr = std::make_shared<const sths::GroundEdges>(std::move(k5));
    const sths::GraphicMatroid graphic(k5_ptr, {0, 1, 2, 3, 4});
    out.require(reference::axiom_violations(reference::rank_table(graphic), 10) == 0,
                "graphic axioms violated");

    const sths::UniformRank1Matroid uniform(10, {2, 5, 7});
    out.require(reference::axiom_violations(reference::rank_table(uniform), 10) == 0,
                "uniform axioms violated");

    sths::GroundEdges k4;
    for (int u = 0; u < 4; ++u)
      for (int v = u + 1; v < 4; ++v) k4.endpoints.emplace_back(u, v);
    const auto k4_ptr = std::make_shared<const sths::GroundEdges>(std::move(k4));
    const auto primal = std::make_shared<const sths::GraphicMatroid>(k4_ptr, std::vector<int>{0, 1, 2, 3});
    const sths::DualMatroid dual(primal);
    out.require(reference::axiom_violations(reference::rank_table(dual), 6) == 0,
                "dual axioms violated");
  });

  // c6: F contains a primal basis exactly when E \ F is independent in the
  // dual, exhaustively over every subset (ground <= 10).
  runner.criterion("c6 dual-rank basis equivalence", 0, [&](Outcome& out) {
    sths::GroundEdges k4;
    for (int u = 0; u < 4; ++u)
      for (int v = u + 1; v < 4; ++v) k4.endpoints.emplace_back(u, v);
    const auto k4_ptr = std::make_shared<const sths::GroundEdges>(std::move(k4));
    std::vector<std::shared_ptr<const sths::RankOracle>> primals{
        std::make_shared<const sths::GraphicMatroid>(k4_ptr, std::vector<int>{0, 1, 2, 3}),
        std::make_shared<const sths::UniformRank1Matroid>(8, std::vector<sths::Element>{1, 3}),
    };
    for (const auto& primal : primals) {
      const sths::DualMatroid dual(primal);
      const sths::Element ground = primal->ground_size();
      for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << ground); ++mask) {
        sths::Subset f(ground);
        for (sths::Element e = 0; e < ground; ++e)
          if (mask & (std::uint32_t{1} << e)) f.add(e);
        const sths::Subset rest = f.complemented();
        const bool lhs = primal->contains_basis(f);
        const bool rhs = dual.rank(rest) == rest.count();
        if (lhs != rhs) {
          out.require(false, "mismatch at mask " + std::to_string(mask));
          return;
        }
      }
      out.require(dual.full_rank() == ground - primal->full_rank(), "dual full rank off");
    }
  });

  // c7: the rank-1 uniform reduction solves hitting set exactly on >= 100
  // random instances with |U| <= 8.
  runner.criterion("c7 rank-1 reduction vs brute force", 0, [&](Outcome& out) {
    std::mt19937_64 rng(777);
    for (int t = 0; t < 100; ++t) {
      const sths::HittingSetInstance hs = random_hitting_set(rng, 8, 5);
      const auto matroids = sths::reduce_hitting_set_to_matroids(hs);
      std::vector<const sths::RankOracle*> oracles;
      for (const auto& m : matroids) oracles.push_back(&m);
      const sths::ExactResult exact = sths::exact_min_basis_hitting(oracles);
      if (exact.status != sths::ExactStatus::optimal ||
          static_cast<int>(exact.value) != sths::brute_force_min_hitting_set(hs)) {
        out.require(false, "trial " + std::to_string(t) + " disagreed with brute force");
        return;
      }
    }
  });

  // c8: the corpus pipeline induces the two-rule grammar for the toy corpus
  // with both solvers, parses are spanning trees, and the adjacency baseline
  // renders the expected single-sentence walk.
  runner.criterion("c8 corpus pipeline", 0, [&](Outcome& out) {
    const sths::Corpus toy = sths::corpus_from_lines(fixtures::toy_corpus_lines());
    const std::vector<std::pair<std::string, std::string>> expected{{"a", "b"}, {"b", "c"}};

    sths::InduceOptions greedy_options;
    const sths::ParseOutput greedy = sths::induce(toy, greedy_options);
    out.require(greedy.grammar == expected, "greedy grammar wrong");
    sths::InduceOptions exact_options;
    exact_options.solver = sths::InduceSolver::exact;
    const sths::ParseOutput exact = sths::induce(toy, exact_options);
    out.require(exact.grammar == expected, "exact grammar wrong");
    for (const sths::ParseOutput* run : {&greedy, &exact})
      for (const sths::SentenceParse& parse : run->sentences)
        out.require(is_spanning_parse(parse.tokens, parse.edges), "parse is not a spanning tree");

    const sths::Corpus woof = sths::corpus_from_lines(fixtures::woof_corpus_lines());
    const sths::ParseOutput baseline = sths::adjacency_baseline(woof);
    out.require(sths::parses_to_text(baseline) == "is-that, that-a, a-woof\n",
                "baseline text wrong");
    for (const sths::SentenceParse& parse : baseline.sentences)
      out.require(is_spanning_parse(parse.tokens, parse.edges), "baseline parse not a tree");
  });

  // c9: every CLI subcommand is byte-deterministic across two runs, and the
  // worked examples hold end to end through the binary.
  runner.criterion("c9 CLI determinism and worked examples", 0, [&](Outcome& out) {
    const fs::path work =
        fs::temp_directory_path() / ("sths_accept_" + std::to_string(::getpid()));
    fs::create_directories(work);
    const auto q = [](const fs::path& p) { return "'" + p.string() + "'"; };
    const auto run = [&](const std::string& args) {
      const std::string cmd = "'" + cli + "' " + args + " > " + q(work / "stdout.txt") + " 2> " +
                              q(work / "stderr.txt");
      const int status = std::system(cmd.c_str());
      return status >= 0 && WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    };
    const auto read = [](const fs::path& p) { return sths::detail::read_text_file(p.string()); };
    const auto twice_identical = [&](const std::string& args_stem, const fs::path& out1,
                                     const fs::path& out2, int expected_rc) {
      const int rc1 = run(args_stem + " --output " + q(out1));
      const int rc2 = run(args_stem + " --output " + q(out2));
      return rc1 == expected_rc && rc2 == expected_rc && read(out1) == read(out2);
    };

    const std::string instance_file = q(data / "counterexample.json");
    const fs::path solve1 = work / "solve1.json", solve2 = work / "solve2.json";
    out.require(twice_identical("solve " + instance_file, solve1, solve2, 0),
                "solve not deterministic");
    const fs::path exact1 = work / "exact1.json", exact2 = work / "exact2.json";
    out.require(twice_identical("exact " + instance_file, exact1, exact2, 0),
                "exact not deterministic");
    {
      const sths::Json greedy_json = sths::Json::parse(read(solve1));
      const sths::Json exact_json = sths::Json::parse(read(exact1));
      out.require(greedy_json.at("edges").size() == 7, "CLI greedy edge count != 7");
      out.require(exact_json.at("edges").size() == 6, "CLI exact edge count != 6");
      bool exact_uses_hub = false;
      for (const auto& pair : exact_json.at("edges"))
        exact_uses_hub = exact_uses_hub || (pair[0] == "4" && pair[1] == "5");
      out.require(!exact_uses_hub, "CLI exact kept edge {4,5}");
    }

    const std::string toy_file = q(data / "toy.corpus.txt");
    out.require(twice_identical("induce " + toy_file + " --solver exact",
                                work / "induce1.json", work / "induce2.json", 0),
                "induce not deterministic");
    {
      const sths::Json parses = sths::Json::parse(read(work / "induce1.json"));
      const sths::Json expected = sths::Json::array({sths::Json::array({"a", "b"}),
                                                     sths::Json::array({"b", "c"})});
      out.require(parses.at("grammar") == expected, "CLI induce grammar wrong");
    }

    const std::string woof_file = q(data / "woof.corpus.txt");
    out.require(twice_identical("baseline " + woof_file + " --format text",
                                work / "base1.txt", work / "base2.txt", 0),
                "baseline not deterministic");
    out.require(read(work / "base1.txt") == "is-that, that-a, a-woof\n",
                "CLI baseline text wrong");

    const std::string hs_file = q(data / "hitting_set.json");
    const fs::path red1 = work / "red1.json", red2 = work / "red2.json";
    const fs::path cert1 = work / "cert1.json", cert2 = work / "cert2.json";
    const int rc_red1 = run("reduce " + hs_file + " --output " + q(red1) + " --certificate " + q(cert1));
    const int rc_red2 = run("reduce " + hs_file + " --output " + q(red2) + " --certificate " + q(cert2));
    out.require(rc_red1 == 0 && rc_red2 == 0 && read(red1) == read(red2) && read(cert1) == read(cert2),
                "reduce not deterministic");
    out.require(sths::check_certificate(sths::read_certificate(cert1.string())).status ==
                    sths::CheckStatus::verified,
                "CLI-written certificate failed verification");
    out.require(twice_identical("reduce " + q(data / "k3.json"), work / "vc1.json",
                                work / "vc2.json", 0),
                "graph reduce not deterministic");

    const fs::path report1 = work / "verify1.json", report2 = work / "verify2.json";
    out.require(twice_identical("verify " + instance_file + " " + q(exact1), report1, report2, 0),
                "verify not deterministic");
    out.require(sths::Json::parse(read(report1)).at("feasible") == true, "verify rejected optimum");
    const fs::path bad_solution = work / "bad_solution.json";
    sths::detail::write_text_file(bad_solution.string(),
                                  "{\"format\":\"sths-solution/1\",\"edges\":[],\"weight\":0}\n");
    const fs::path bad_report = work / "verify_bad.json";
    out.require(run("verify " + instance_file + " " + q(bad_solution) + " --output " + q(bad_report)) == 1,
                "verify accepted an infeasible solution");
    out.require(sths::Json::parse(read(bad_report)).at("feasible") == false,
                "bad-solution report claims feasible");

    out.require(twice_identical("gen --seed 5", work / "gen1.json", work / "gen2.json", 0),
                "gen not deterministic");
    {
      sths::SthsInstance generated = sths::instance_from_json(sths::Json::parse(read(work / "gen1.json")));
      out.require(sths::validate(generated).ok(), "generated instance invalid");
    }

    std::error_code ec;
    fs::remove_all(work, ec);
  });

  return runner.all_ok ? 0 : 1;
}
