#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <catch2/catch_amalgamated.hpp>
#include <json.hpp>

#include "edgealg/json_io.hpp"

using namespace edgealg;
using nlohmann::json;

namespace {

struct CliResult {
  int status = -1;
  std::string out;
};

// run the tool with the given arguments, capturing standard output
CliResult run_cli(const std::string& args) {
  CliResult r;
  const std::string cmd = std::string(EDGEALG_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int rc = pclose(pipe);
  r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return r;
}

std::filesystem::path write_temp(const std::string& name, const json& j) {
  const auto dir = std::filesystem::temp_directory_path() / "edgealg_cli_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::ofstream(path) << j.dump(2) << "\n";
  return path;
}

}  // namespace

TEST_CASE("graph JSON round trip", "[json]") {
  const Graph g = wheel_graph(5);
  const json j = graph_to_json(g);
  CHECK(j.at("n") == 6);
  CHECK(j.at("edges").size() == 10);
  CHECK(graph_from_json(j) == g);

  CHECK_THROWS_AS(graph_from_json(json::array()), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_json(json{{"n", 3}}), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_json(json{{"n", 3}, {"edges", {{0, 1, 2}}}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(graph_from_json(json{{"n", 2.5}, {"edges", json::array()}}),
                  std::invalid_argument);
}

TEST_CASE("ideal JSON round trip", "[json]") {
  const MonomialIdeal i = symbolic_power(cycle_graph(5), 2);
  const json j = ideal_to_json(i);
  CHECK(j.at("n") == 5);
  const MonomialIdeal back = ideal_from_json(j);
  CHECK(back.gens == i.gens);

  CHECK_THROWS_AS(ideal_from_json(json{{"n", 2}, {"gens", {{1, "x"}}}}),
                  std::invalid_argument);
}

TEST_CASE("Betti table JSON is sorted by (i, j)", "[json]") {
  const json j = betti_to_json(betti_by_subsets(cycle_graph(5), FieldTag::rationals()));
  REQUIRE(j.is_array());
  CHECK(j.front() == json{{"i", 0}, {"j", 0}, {"rank", 1}});
  std::pair<int, int> prev{-1, -1};
  for (const auto& entry : j) {
    const std::pair<int, int> cur{entry.at("i").get<int>(), entry.at("j").get<int>()};
    CHECK(prev < cur);
    prev = cur;
  }
  CHECK(j.back() == json{{"i", 3}, {"j", 5}, {"rank", 1}});
}

TEST_CASE("report serialization shapes", "[json]") {
  const json inv = invariants_to_json(invariant_report(complete_graph(4)));
  for (const auto* key : {"reg", "pd", "depth", "dim", "height", "multiplicity",
                          "h_polynomial", "nu", "cohen_macaulay", "linear_resolution"})
    CHECK(inv.contains(key));
  CHECK(inv.at("field") == "Q");
  CHECK(inv.at("multiplicity") == 4);

  const json res = result_to_json(detail::make_check("demo", "inst", 1, 1));
  CHECK(res.at("pass") == true);
  CHECK(res.at("skipped") == false);

  SuiteReport suite;
  suite.results.push_back(detail::make_check("demo", "inst", 1, 2));
  suite.results.push_back(detail::make_skip("demo", "inst", "because"));
  suite.tally();
  const json sj = suite_to_json(suite);
  CHECK(sj.at("summary") == json{{"passed", 0}, {"failed", 1}, {"skipped", 1}});
  CHECK(sj.at("results").size() == 2);
}

TEST_CASE("cli gen", "[cli]") {
  const auto r = run_cli("gen path 5");
  CHECK(r.status == 0);
  CHECK(graph_from_json(json::parse(r.out)) == path_graph(5));

  CHECK(run_cli("gen moebius 5").status == 2);
  CHECK(run_cli("gen path 1 2").status == 2);
  CHECK(run_cli("gen path x").status == 2);
  CHECK(run_cli("gen").status == 2);

  const auto c = run_cli("gen construct_mult_pair 2 hdeg 2");
  CHECK(c.status == 0);
  CHECK(graph_from_json(json::parse(c.out)) == self_join(star_graph(2), 2));

  const json err = json::parse(run_cli("gen moebius 5").out);
  CHECK(err.at("error").at("kind") == "usage");
}

TEST_CASE("cli invariants", "[cli]") {
  const auto k4 = write_temp("k4.json", graph_to_json(complete_graph(4)));
  const auto both = run_cli("invariants " + k4.string());
  CHECK(both.status == 0);
  const json j = json::parse(both.out);
  CHECK(j.at("agree") == true);
  CHECK(j.at("q").at("multiplicity") == 4);
  CHECK(j.at("q").at("depth") == 1);
  CHECK(j.at("f2").at("reg") == j.at("q").at("reg"));

  const auto single = run_cli("invariants " + k4.string() + " --field q");
  const json sj = json::parse(single.out);
  CHECK(sj.at("field") == "Q");
  CHECK(sj.at("field_agreement").is_null());

  CHECK(run_cli("invariants /nonexistent.json").status == 2);
  CHECK(run_cli("invariants " + k4.string() + " --field f7").status == 0);
  CHECK(run_cli("invariants " + k4.string() + " --field f6").status == 2);
}

TEST_CASE("cli betti", "[cli]") {
  const auto c5 = write_temp("c5.json", graph_to_json(cycle_graph(5)));
  const auto both = run_cli("betti " + c5.string());
  CHECK(both.status == 0);
  const json j = json::parse(both.out);
  CHECK(j.is_array());
  CHECK(j.back() == json{{"i", 3}, {"j", 5}, {"rank", 1}});

  // byte stability
  CHECK(run_cli("betti " + c5.string()).out == both.out);
  // the two routes give the same table
  CHECK(run_cli("betti " + c5.string() + " --algorithm hochster").out == both.out);
  CHECK(run_cli("betti " + c5.string() + " --algorithm koszul").out == both.out);

  const auto ideal = write_temp("m2.json", ideal_to_json(make_ideal(
      2, {Monomial{{2, 0}}, Monomial{{1, 1}}})));
  CHECK(run_cli("betti " + ideal.string() + " --algorithm koszul").status == 0);
  CHECK(run_cli("betti " + ideal.string()).status == 2);  // subset route needs a graph

  const auto big = write_temp("p9x3.json", graph_to_json(self_join(path_graph(9), 3)));
  const auto gated = run_cli("betti " + big.string());
  CHECK(gated.status == 3);
  CHECK(json::parse(gated.out).at("error").at("kind") == "cost_gate");
}

TEST_CASE("cli sympow", "[cli]") {
  const auto c5 = write_temp("c5.json", graph_to_json(cycle_graph(5)));
  const auto r = run_cli("sympow " + c5.string() + " --s 2 --compare-ordinary");
  CHECK(r.status == 0);
  const json j = json::parse(r.out);
  CHECK(j.at("reg_symbolic") == 4);
  CHECK(j.at("reg_ordinary") == 4);
  CHECK(j.at("equal") == true);
  CHECK(ideal_from_json(j.at("ideal")).gens == symbolic_power(cycle_graph(5), 2).gens);

  CHECK(run_cli("sympow " + c5.string() + " --s 0").status == 2);
  CHECK(run_cli("sympow " + c5.string()).status == 2);  // --s is required
}

TEST_CASE("cli verify and sweep", "[cli]") {
  const auto v = run_cli("verify --suite minh");
  CHECK(v.status == 0);
  const json vj = json::parse(v.out);
  CHECK(vj.at("summary").at("failed") == 0);
  CHECK(vj.at("summary").at("passed") > 0);

  CHECK(run_cli("verify --suite nope").status == 2);

  const auto s = run_cli("sweep --n 3 --checks reg_le_dim,betti_agree");
  CHECK(s.status == 0);
  const json sj = json::parse(s.out);
  CHECK(sj.at("graphs") == 8);
  CHECK(sj.at("checks").at("reg_le_dim").at("failed") == 0);
  CHECK(sj.at("counterexamples").empty());

  CHECK(run_cli("sweep --n 9").status == 2);
  CHECK(run_cli("sweep --n 4 --checks nope").status == 2);
}
