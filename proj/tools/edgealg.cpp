// Command-line front end: graph generation, invariant reports, Betti tables,
// symbolic-power comparisons, the verification suite, and the exhaustive
// small-graph sweep.  JSON goes to standard output, logs to standard error.
//
// Exit status: 0 success / all checks pass, 1 verification failure,
// 2 usage error (bad arguments or malformed JSON), 3 cost-gate rejection.

#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "edgealg/json_io.hpp"

namespace {

using nlohmann::json;

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw std::invalid_argument("malformed JSON in '" + path + "': " + e.what());
  }
  return j;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int int_param(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    const int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument(what + ": '" + s + "' is not an integer");
  }
}

void log_checks(const std::vector<edgealg::VerificationResult>& checks) {
  for (const auto& r : checks)
    std::cerr << (r.passed() ? "pass" : r.skipped() ? "skip" : "FAIL") << "  " << r.claim
              << " [" << r.instance << "]"
              << (r.skipped() ? " " + r.note
                              : " expected=" + r.expected + " computed=" + r.computed)
              << "\n";
}

bool any_failed(const std::vector<edgealg::VerificationResult>& checks) {
  for (const auto& r : checks)
    if (!r.passed() && !r.skipped()) return true;
  return false;
}

int cmd_gen(const std::vector<std::string>& args) {
  if (args.empty()) throw std::invalid_argument("gen: missing family name");
  const std::string& family = args[0];
  const auto gate = edgealg::default_cost_gate();
  if (family == "construct_reg_dim" || family == "construct_mult_pair" ||
      family == "construct_depth_pair") {
    edgealg::ConstructResult cr;
    if (family == "construct_reg_dim") {
      if (args.size() != 3) throw std::invalid_argument("usage: gen construct_reg_dim <r> <d>");
      cr = edgealg::construct_reg_dim(int_param(args[1], "r"), int_param(args[2], "d"), gate);
    } else if (family == "construct_mult_pair") {
      if (args.size() != 4)
        throw std::invalid_argument("usage: gen construct_mult_pair <e> <reg|hdeg|depth|dim> <v>");
      cr = edgealg::construct_mult_pair(int_param(args[1], "e"),
                                        edgealg::parse_pair_target(args[2]),
                                        int_param(args[3], "v"), gate);
    } else {
      if (args.size() != 4)
        throw std::invalid_argument("usage: gen construct_depth_pair <delta> <reg|hdeg> <v>");
      cr = edgealg::construct_depth_pair(int_param(args[1], "delta"),
                                         edgealg::parse_pair_target(args[2]),
                                         int_param(args[3], "v"), gate);
    }
    log_checks(cr.checks);
    emit(edgealg::graph_to_json(cr.graph));
    return any_failed(cr.checks) ? 1 : 0;
  }
  std::vector<int> params;
  for (std::size_t k = 1; k < args.size(); ++k)
    params.push_back(int_param(args[k], "family parameter"));
  emit(edgealg::graph_to_json(edgealg::graph_family(family, params)));
  return 0;
}

int cmd_invariants(const std::string& path, const std::string& field) {
  const edgealg::Graph g = edgealg::graph_from_json(load_json(path));
  if (field == "both") {
    const auto rq = edgealg::invariant_report(g, edgealg::FieldTag::rationals(), false);
    const auto rf = edgealg::invariant_report(g, edgealg::FieldTag::prime(2), false);
    const bool agree = rq.reg == rf.reg && rq.pd == rf.pd &&
                       rq.linear_resolution == rf.linear_resolution;
    if (!agree)
      std::cerr << "warning: homological invariants differ between Q and F_2\n";
    emit(json{{"q", edgealg::invariants_to_json(rq)},
              {"f2", edgealg::invariants_to_json(rf)},
              {"agree", agree}});
    return 0;
  }
  const auto r = edgealg::invariant_report(g, edgealg::parse_field(field), false);
  emit(edgealg::invariants_to_json(r));
  return 0;
}

int cmd_betti(const std::string& path, const std::string& algorithm) {
  const json in = load_json(path);
  const bool is_graph = in.is_object() && in.contains("edges");
  const auto field = edgealg::FieldTag::rationals();
  const auto gate = edgealg::default_cost_gate();
  if (algorithm == "koszul") {
    const edgealg::MonomialIdeal ideal =
        is_graph ? edgealg::edge_ideal(edgealg::graph_from_json(in))
                 : edgealg::ideal_from_json(in);
    emit(edgealg::betti_to_json(edgealg::betti_by_lattice(ideal, field, gate)));
    return 0;
  }
  if (!is_graph)
    throw std::invalid_argument(
        "betti: algorithm '" + algorithm + "' needs a graph input (use --algorithm koszul)");
  const edgealg::Graph g = edgealg::graph_from_json(in);
  const auto hochster = edgealg::betti_by_subsets(g, field, gate);
  if (algorithm == "hochster") {
    emit(edgealg::betti_to_json(hochster));
    return 0;
  }
  if (algorithm != "both")
    throw std::invalid_argument("betti: unknown algorithm '" + algorithm + "'");
  const auto koszul = edgealg::betti_by_lattice(edgealg::edge_ideal(g), field, gate);
  if (!edgealg::tables_agree_by_degree(hochster, koszul)) {
    std::cerr << "error: the two resolution routes disagree\n";
    emit(json{{"hochster", edgealg::betti_to_json(hochster)},
              {"koszul", edgealg::betti_to_json(koszul)}});
    return 1;
  }
  emit(edgealg::betti_to_json(hochster));
  return 0;
}

int cmd_sympow(const std::string& path, int s, bool compare) {
  const edgealg::Graph g = edgealg::graph_from_json(load_json(path));
  const auto gate = edgealg::default_cost_gate();
  const edgealg::MonomialIdeal sym = edgealg::symbolic_power(g, s);
  json out{{"s", s},
           {"ideal", edgealg::ideal_to_json(sym)},
           {"reg_symbolic", edgealg::detail::reg_of_ideal(sym, gate)}};
  bool equal = true;
  if (compare) {
    const edgealg::MonomialIdeal ord = edgealg::ideal_power(edgealg::edge_ideal(g), s);
    out["reg_ordinary"] = edgealg::detail::reg_of_ideal(ord, gate);
    equal = out["reg_symbolic"] == out["reg_ordinary"];
    out["equal"] = equal;
    if (!equal) std::cerr << "error: symbolic and ordinary regularity differ\n";
  }
  emit(out);
  return equal ? 0 : 1;
}

int cmd_verify(const std::string& suite) {
  std::cerr << "running suite '" << suite << "'\n";
  const auto report = edgealg::run_suite(suite);
  for (const auto& r : report.results)
    if (!r.passed())
      std::cerr << (r.skipped() ? "skip" : "FAIL") << "  " << r.claim << " [" << r.instance
                << "] " << (r.skipped() ? r.note : "expected=" + r.expected +
                                                       " computed=" + r.computed)
                << "\n";
  std::cerr << report.passed << " passed, " << report.failed << " failed, "
            << report.skipped << " skipped\n";
  emit(edgealg::suite_to_json(report));
  return report.failed == 0 ? 0 : 1;
}

int cmd_sweep(int n_max, const std::string& checks_csv, int spot, unsigned seed) {
  std::set<edgealg::SweepCheck> checks;
  std::stringstream ss(checks_csv);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) checks.insert(edgealg::parse_sweep_check(item));
  if (checks.empty()) throw std::invalid_argument("sweep: no checks selected");
  const auto report = edgealg::sweep_small_graphs(n_max, checks, spot);
  std::cerr << report.graphs << " graphs swept, " << report.total_failures()
            << " failures\n";
  emit(edgealg::sweep_to_json(report));
  return report.total_failures() == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"invariants of edge ideals of finite simple graphs"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "generate a graph from a named family");
  std::vector<std::string> gen_args;
  gen->add_option("args", gen_args,
                  "family name and integer parameters (or construct_* subcommand)")
      ->expected(-1);

  auto* inv = app.add_subcommand("invariants", "invariant report for a graph");
  std::string inv_path, inv_field = "both";
  inv->add_option("graph", inv_path, "graph JSON file")->required();
  inv->add_option("--field", inv_field, "coefficient field: q, f2, or both (default both)");

  auto* betti = app.add_subcommand("betti", "graded Betti table of a graph or monomial ideal");
  std::string betti_path, betti_alg = "both";
  betti->add_option("input", betti_path, "graph or ideal JSON file")->required();
  betti->add_option("--algorithm", betti_alg, "hochster, koszul, or both (default both)");

  auto* sympow = app.add_subcommand("sympow", "symbolic power of an edge ideal");
  std::string sympow_path;
  int sympow_s = 0;
  bool sympow_cmp = false;
  sympow->add_option("graph", sympow_path, "graph JSON file")->required();
  sympow->add_option("--s", sympow_s, "power (>= 1)")->required();
  sympow->add_flag("--compare-ordinary", sympow_cmp,
                   "also compute the ordinary power and compare regularity");

  auto* verify = app.add_subcommand("verify", "run a named verification suite");
  std::string verify_suite = "default";
  verify->add_option("--suite", verify_suite, "default, joins, minh, or constructions");

  auto* sweep = app.add_subcommand("sweep", "exhaustive checks over all small graphs");
  int sweep_n = 0, sweep_spot = 0;
  unsigned sweep_seed = 20240801U;
  std::string sweep_checks =
      "reg_le_dim,mult_eq_min_covers,h1_eq_codim,e1_implies,betti_agree";
  sweep->add_option("--n", sweep_n, "largest vertex count (2..6)")->required();
  sweep->add_option("--checks", sweep_checks, "comma-separated check names");
  sweep->add_option("--spot", sweep_spot, "rational-field spot checks (default 0)");
  sweep->add_option("--seed", sweep_seed, "spot-check RNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    std::cerr << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    emit(edgealg::error_to_json("usage", e.what()));
    return 2;
  }

  try {
    if (gen->parsed()) return cmd_gen(gen_args);
    if (inv->parsed()) return cmd_invariants(inv_path, inv_field);
    if (betti->parsed()) return cmd_betti(betti_path, betti_alg);
    if (sympow->parsed()) return cmd_sympow(sympow_path, sympow_s, sympow_cmp);
    if (verify->parsed()) return cmd_verify(verify_suite);
    if (sweep->parsed()) return cmd_sweep(sweep_n, sweep_checks, sweep_spot, sweep_seed);
  } catch (const edgealg::CostGateError& e) {
    emit(edgealg::error_to_json("cost_gate", e.what()));
    return 3;
  } catch (const std::invalid_argument& e) {
    emit(edgealg::error_to_json("usage", e.what()));
    return 2;
  } catch (const std::exception& e) {
    emit(edgealg::error_to_json("internal", e.what()));
    return 1;
  }
  return 2;
}
