#pragma once

// JSON interchange for the three external schemas (graph, ideal, Betti table)
// plus the report types emitted by the command-line tool.  Serialization is
// deterministic: object keys come out alphabetically ordered and every list
// is sorted by the library before it gets here.

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "edgealg/betti.hpp"
#include "edgealg/graph.hpp"
#include "edgealg/hilbert.hpp"
#include "edgealg/invariants.hpp"
#include "edgealg/monomial.hpp"
#include "edgealg/sweep.hpp"
#include "edgealg/verify.hpp"

namespace edgealg {

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument("bad JSON input: " + what);
}

inline int to_int(const nlohmann::json& j, const std::string& what) {
  require(j.is_number_integer(), what + " must be an integer");
  return j.get<int>();
}

}  // namespace detail

// --- graph: {"n": <int>, "edges": [[i, j], ...]} ---------------------------

inline nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [u, v] : g.edges) edges.push_back({u, v});
  return {{"n", g.n}, {"edges", edges}};
}

inline Graph graph_from_json(const nlohmann::json& j) {
  detail::require(j.is_object(), "graph must be an object");
  detail::require(j.contains("n") && j.contains("edges"),
                  "graph needs fields \"n\" and \"edges\"");
  const int n = detail::to_int(j.at("n"), "graph field \"n\"");
  detail::require(j.at("edges").is_array(), "graph field \"edges\" must be an array");
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges")) {
    detail::require(e.is_array() && e.size() == 2, "each edge must be a pair [i, j]");
    edges.push_back({detail::to_int(e.at(0), "edge endpoint"),
                     detail::to_int(e.at(1), "edge endpoint")});
  }
  return make_graph(n, std::move(edges));
}

// --- monomial ideal: {"n": <int>, "gens": [[e_0, ..., e_{n-1}], ...]} ------

inline nlohmann::json ideal_to_json(const MonomialIdeal& ideal) {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : ideal.gens) gens.push_back(g.e);
  return {{"n", ideal.n}, {"gens", gens}};
}

inline MonomialIdeal ideal_from_json(const nlohmann::json& j) {
  detail::require(j.is_object(), "ideal must be an object");
  detail::require(j.contains("n") && j.contains("gens"),
                  "ideal needs fields \"n\" and \"gens\"");
  const int n = detail::to_int(j.at("n"), "ideal field \"n\"");
  detail::require(j.at("gens").is_array(), "ideal field \"gens\" must be an array");
  std::vector<Monomial> gens;
  for (const auto& g : j.at("gens")) {
    detail::require(g.is_array(), "each generator must be an exponent array");
    Monomial m;
    for (const auto& e : g) m.e.push_back(detail::to_int(e, "exponent"));
    gens.push_back(std::move(m));
  }
  return make_ideal(n, std::move(gens));
}

// --- Betti table: [{"i": , "j": , "rank": }, ...], sorted by (i, j) --------

inline nlohmann::json betti_to_json(const BettiTable& t) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [ij, rank] : t.by_degree)
    out.push_back({{"i", ij.first}, {"j", ij.second}, {"rank", rank}});
  return out;
}

// --- Hilbert series and invariant report -----------------------------------

inline nlohmann::json hilbert_to_json(const HilbertSeries& h) {
  return {{"h", h.h}, {"dim", h.d}};
}

inline nlohmann::json invariants_to_json(const InvariantReport& r) {
  nlohmann::json out{{"field", r.field.name()},
                     {"reg", r.reg},
                     {"pd", r.pd},
                     {"depth", r.depth},
                     {"dim", r.dim},
                     {"height", r.height},
                     {"multiplicity", r.multiplicity},
                     {"h_polynomial", r.h.h},
                     {"h_degree", r.h.degree()},
                     {"nu", r.nu},
                     {"cohen_macaulay", r.cohen_macaulay},
                     {"linear_resolution", r.linear_resolution}};
  if (r.field_agreement.has_value())
    out["field_agreement"] = *r.field_agreement;
  else
    out["field_agreement"] = nullptr;
  return out;
}

// --- verification results, suites, sweeps ----------------------------------

inline nlohmann::json result_to_json(const VerificationResult& r) {
  return {{"claim", r.claim},       {"instance", r.instance}, {"expected", r.expected},
          {"computed", r.computed}, {"pass", r.passed()},     {"skipped", r.skipped()},
          {"note", r.note}};
}

inline nlohmann::json suite_to_json(const SuiteReport& s) {
  nlohmann::json results = nlohmann::json::array();
  for (const auto& r : s.results) results.push_back(result_to_json(r));
  return {{"results", results},
          {"summary",
           {{"passed", s.passed}, {"failed", s.failed}, {"skipped", s.skipped}}}};
}

inline nlohmann::json sweep_to_json(const SweepReport& s) {
  nlohmann::json checks = nlohmann::json::object();
  for (const auto& [name, st] : s.stats)
    checks[name] = {{"checked", st.checked}, {"failed", st.failed}, {"skipped", st.skipped}};
  nlohmann::json counterexamples = nlohmann::json::array();
  for (std::size_t k = 0; k < s.counterexamples.size(); ++k)
    counterexamples.push_back({{"graph", graph_to_json(s.counterexamples[k])},
                               {"check", s.counterexample_notes[k]}});
  return {{"n_max", s.n_max},
          {"graphs", s.graphs},
          {"checks", checks},
          {"counterexamples", counterexamples},
          {"spot_checks", s.spot_checks},
          {"spot_failures", s.spot_failures}};
}

inline nlohmann::json error_to_json(const std::string& kind, const std::string& message) {
  return {{"error", {{"kind", kind}, {"message", message}}}};
}

}  // namespace edgealg
