// rainbow: CLI front door for the edge-colored graph toolkit.
// Exit codes: 0 = success / assertions held, 1 = assertion failure,
// 2 = usage or parse error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "rainbow/harness.hpp"

namespace {

using namespace rainbow;

ColoredGraph load_graph(const std::string& path) {
  if (path == "-") return read_edge_list(std::cin);
  std::ifstream in(path);
  if (!in) throw Error("cannot open input file " + path);
  return read_edge_list(in);
}

void emit_graph(const ColoredGraph& g, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    write_edge_list(std::cout, g);
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw Error("cannot open output file " + out_path);
  write_edge_list(out, g);
}

std::vector<std::uint32_t> parse_set(const std::string& s) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    out.push_back(static_cast<std::uint32_t>(std::stoul(item)));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rainbow: properly edge-colored graphs, rainbow cycle search, "
               "and extremal constructions"};
  app.require_subcommand(1);

  // --- gen -----------------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "emit a generated graph as an edge list");
  gen->require_subcommand(1);
  std::string gen_out = "-";
  gen->add_option("--out", gen_out, "output file (default stdout)");

  auto* gen_hc = gen->add_subcommand("hypercube", "d-dimensional direction-colored hypercube");
  std::size_t hc_d = 3;
  gen_hc->add_option("--d", hc_d, "dimension")->required();

  auto* gen_cay = gen->add_subcommand("cayley", "bipartite Cayley graph over Z_mod");
  std::size_t cay_mod = 0;
  std::string cay_set;
  gen_cay->add_option("--mod", cay_mod, "modulus")->required();
  gen_cay->add_option("--set", cay_set, "comma-separated elements of A")->required();

  auto* gen_rand = gen->add_subcommand("random", "random simple graph, greedy proper coloring");
  std::size_t rand_n = 0, rand_m = 0;
  std::uint64_t rand_seed = 0;
  gen_rand->add_option("--n", rand_n, "vertex count")->required();
  gen_rand->add_option("--m", rand_m, "edge count")->required();
  gen_rand->add_option("--seed", rand_seed, "rng seed");

  // --- find ----------------------------------------------------------------
  auto* find = app.add_subcommand("find", "exact rainbow cycle search, JSON output");
  find->require_subcommand(1);
  std::string find_input;
  std::size_t find_max_len = 12;
  std::optional<std::size_t> find_node_limit;
  find->add_option("--input", find_input, "edge list file ('-' for stdin)")->required();
  find->add_option("--max-len", find_max_len, "maximum cycle length");
  find->add_option("--node-limit", find_node_limit, "backtracking node limit");

  auto* find_shortest = find->add_subcommand("shortest", "minimum-length rainbow cycle");
  auto* find_exact = find->add_subcommand("exact", "rainbow cycle of length exactly 2k");
  std::size_t find_k = 2;
  find_exact->add_option("--k", find_k, "half-length k")->required();
  auto* find_acyclic = find->add_subcommand("acyclic", "rainbow acyclicity check");

  // --- grow ----------------------------------------------------------------
  auto* grow = app.add_subcommand("grow", "level-tree rainbow even-cycle search");
  std::string grow_input, grow_trace_path;
  std::optional<double> grow_eps;
  std::optional<std::size_t> grow_k;
  std::size_t grow_budget = 4, grow_retries = 100, grow_runs = 1;
  std::uint64_t grow_seed = 0;
  grow->add_option("--input", grow_input, "edge list file ('-' for stdin)")->required();
  grow->add_option("--epsilon", grow_eps, "epsilon (k derived via the ceiling formula if --k absent)");
  grow->add_option("--k", grow_k, "number of color classes / tree depth");
  grow->add_option("--budget", grow_budget, "edges used per vertex per expansion");
  grow->add_option("--retries", grow_retries, "Las Vegas retry cap");
  grow->add_option("--seed", grow_seed, "rng seed");
  grow->add_option("--runs", grow_runs, "independent runs (seed, seed+1, ...)");
  grow->add_option("--trace", grow_trace_path, "write the trace JSON to this file");

  // --- extremal ------------------------------------------------------------
  auto* extremal = app.add_subcommand("extremal", "exhaustive f(n) oracle");
  std::size_t ext_n = 0;
  std::string ext_witness_path;
  extremal->add_option("--n", ext_n, "vertex count (<= 6)")->required();
  extremal->add_option("--witness", ext_witness_path, "write the witness edge list here");

  // --- sweep ---------------------------------------------------------------
  auto* sweep = app.add_subcommand("sweep", "Cayley <-> B_k* equivalence sweep");
  std::size_t sweep_mod_max = 12, sweep_set_max = 4;
  std::string sweep_ks = "2,3";
  sweep->add_option("--mod-max", sweep_mod_max, "largest modulus");
  sweep->add_option("--set-size-max", sweep_set_max, "largest |A|");
  sweep->add_option("--k", sweep_ks, "comma-separated k values");

  // --- experiment ----------------------------------------------------------
  auto* experiment = app.add_subcommand("experiment", "run a batch spec file");
  std::string exp_path;
  experiment->add_option("spec", exp_path, "experiment spec file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*gen) {
      ColoredGraph g;
      if (*gen_hc) g = gen_hypercube(hc_d);
      else if (*gen_cay) g = gen_cayley_bk(cay_mod, parse_set(cay_set));
      else g = gen_random_proper(rand_n, rand_m, rand_seed);
      emit_graph(g, gen_out);
      return 0;
    }

    if (*find) {
      auto g = load_graph(find_input);
      SearchBudget budget{find_max_len, find_node_limit};
      if (*find_acyclic) {
        budget.max_length = g.vertex_count();
        auto r = shortest_rainbow_cycle(g, budget);
        json j = to_json(r);
        j["rainbow_acyclic"] = r.status == DetectStatus::none;
        std::cout << j.dump(2) << '\n';
        return r.status == DetectStatus::unknown ? 1 : 0;
      }
      DetectResult r;
      if (*find_exact) {
        budget.max_length = 2 * find_k;
        r = has_rainbow_c2k(g, find_k, budget);
      } else {
        (void)find_shortest;
        r = shortest_rainbow_cycle(g, budget);
      }
      std::cout << to_json(r).dump(2) << '\n';
      return 0;
    }

    if (*grow) {
      auto g = load_graph(grow_input);
      ExpansionParams params;
      if (grow_eps) params.epsilon = *grow_eps;
      params.k = grow_k ? *grow_k : (grow_eps ? theorem_k(*grow_eps) : 2);
      params.edge_budget = grow_budget;
      params.max_retries = grow_retries;
      json runs = json::array();
      std::size_t found = 0;
      json last_trace;
      for (std::size_t r = 0; r < grow_runs; ++r) {
        ExpansionParams p = params;
        p.seed = grow_seed + r;
        json one{{"run", r}, {"seed", p.seed}};
        try {
          auto res = grow_tree(g, p);
          one["trace"] = to_json(res.trace);
          last_trace = one["trace"];
          if (res.certificate) {
            ++found;
            one["certificate"] = to_json(*res.certificate);
            one["verified"] = bool(verify_certificate(g, *res.certificate));
            last_trace["certificate"] = one["certificate"];
          }
        } catch (const EmptyAfterPeeling& e) {
          one["error"] = e.what();
        }
        runs.push_back(std::move(one));
      }
      json report{{"runs", runs}, {"cycles_found", found}};
      std::cout << report.dump(2) << '\n';
      if (!grow_trace_path.empty()) {
        std::ofstream out(grow_trace_path);
        if (!out) throw Error("cannot open trace file " + grow_trace_path);
        out << last_trace.dump(2) << '\n';
      }
      return 0;
    }

    if (*extremal) {
      auto res = exact_f(ext_n);
      json j{{"n", res.n}, {"f", res.f_value}};
      std::cout << j.dump(2) << '\n';
      if (!ext_witness_path.empty()) emit_graph(res.witness, ext_witness_path);
      else {
        write_edge_list(std::cout, res.witness);
      }
      return 0;
    }

    if (*sweep) {
      auto ks_raw = parse_set(sweep_ks);
      std::vector<std::size_t> ks(ks_raw.begin(), ks_raw.end());
      auto report = cayley_equivalence_sweep(sweep_mod_max, sweep_set_max, ks);
      json j{{"checked", report.checked}, {"discrepancies", report.discrepancies}};
      std::cout << j.dump(2) << '\n';
      return report.discrepancies.empty() ? 0 : 1;
    }

    if (*experiment) {
      std::ifstream in(exp_path);
      if (!in) throw Error("cannot open spec file " + exp_path);
      auto report = run_experiment(in);
      std::cout << report.dump(2) << '\n';
      return report["ok"].get<bool>() ? 0 : 1;
    }
  } catch (const SpecParseError& e) {
    std::cerr << "spec error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
