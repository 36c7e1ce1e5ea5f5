#pragma once

// Machine checks for a collection of identities about edge ideals of joins,
// whiskered complete graphs, staircase graphs, and their symbolic powers.
// Each check computes both sides of an identity from scratch (no shortcuts
// through the statement being checked) and reports an exact comparison.
//
// A check can also be *skipped*: either its precondition fails (the identity
// does not apply) or the cost gate refuses the computation.  Skips are
// reported, never silently dropped, and do not count as failures.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "edgealg/betti.hpp"
#include "edgealg/field.hpp"
#include "edgealg/graph.hpp"
#include "edgealg/hilbert.hpp"
#include "edgealg/monomial.hpp"

namespace edgealg {

enum class CheckStatus { pass, fail, skip };

struct VerificationResult {
  std::string claim;     // identifier of the identity being checked
  std::string instance;  // human-readable description of the inputs
  std::string expected;  // value demanded by the identity
  std::string computed;  // value obtained by direct computation
  CheckStatus status = CheckStatus::fail;
  std::string note;      // skip reason or extra detail

  bool passed() const { return status == CheckStatus::pass; }
  bool skipped() const { return status == CheckStatus::skip; }
};

namespace detail {

inline VerificationResult make_check(std::string claim, std::string instance,
                                     long long expected, long long computed,
                                     std::string note = "") {
  VerificationResult r;
  r.claim = std::move(claim);
  r.instance = std::move(instance);
  r.expected = std::to_string(expected);
  r.computed = std::to_string(computed);
  r.status = expected == computed ? CheckStatus::pass : CheckStatus::fail;
  r.note = std::move(note);
  return r;
}

inline VerificationResult make_skip(std::string claim, std::string instance, std::string why) {
  VerificationResult r;
  r.claim = std::move(claim);
  r.instance = std::move(instance);
  r.status = CheckStatus::skip;
  r.note = std::move(why);
  return r;
}

// regularity of an ideal (not the quotient) from the lattice route
inline int reg_of_ideal(const MonomialIdeal& ideal, const CostGate& gate) {
  return regularity(betti_by_lattice(ideal, FieldTag::rationals(), gate), RegView::ideal);
}

// quotient Betti table of a graph over Q
inline BettiTable quotient_table(const Graph& g, const CostGate& gate) {
  return betti_by_subsets(g, FieldTag::rationals(), gate);
}

inline MonomialIdeal lift_ideal(const MonomialIdeal& ideal, int total, int offset) {
  std::vector<Monomial> gens;
  for (const auto& g : ideal.gens) {
    Monomial m{std::vector<int>(static_cast<std::size_t>(total), 0)};
    for (std::size_t v = 0; v < g.e.size(); ++v)
      m.e[static_cast<std::size_t>(offset) + v] = g.e[v];
    gens.push_back(std::move(m));
  }
  return make_ideal(total, std::move(gens));
}

inline std::string describe_graph(const Graph& g) {
  return "graph(n=" + std::to_string(g.n) + ", m=" + std::to_string(g.edges.size()) + ")";
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Artinian sum: for squarefree I in x-variables (generated in degree >= 2 or
// zero) and J in y-variables likewise,
//   reg( (I + <y>)^{(s)} + (J + <x>)^{(s)} ) = 2s - 1   for all s >= 1.
inline VerificationResult verify_artinian_reg(const MonomialIdeal& ix, const MonomialIdeal& jy,
                                              int s,
                                              const CostGate& gate = default_cost_gate()) {
  if (s < 1) throw std::invalid_argument("verify_artinian_reg: need s >= 1");
  const int m = ix.n, n = jy.n;
  if (m < 1 || n < 1)
    throw std::invalid_argument("verify_artinian_reg: need at least one variable on each side");
  if (!is_squarefree(ix) || !is_squarefree(jy))
    throw std::invalid_argument("verify_artinian_reg: inputs must be squarefree");
  for (const auto& g : ix.gens)
    if (g.degree() < 2)
      throw std::invalid_argument("verify_artinian_reg: x-ideal must be generated in degree >= 2");
  for (const auto& g : jy.gens)
    if (g.degree() < 2)
      throw std::invalid_argument("verify_artinian_reg: y-ideal must be generated in degree >= 2");
  const int total = m + n;
  std::vector<int> xs(static_cast<std::size_t>(m)), ys(static_cast<std::size_t>(n));
  for (int v = 0; v < m; ++v) xs[static_cast<std::size_t>(v)] = v;
  for (int v = 0; v < n; ++v) ys[static_cast<std::size_t>(v)] = m + v;
  const MonomialIdeal left =
      ideal_sum(detail::lift_ideal(ix, total, 0), variable_prime(ys, total));
  const MonomialIdeal right =
      ideal_sum(detail::lift_ideal(jy, total, m), variable_prime(xs, total));
  const MonomialIdeal k =
      ideal_sum(symbolic_power_squarefree(left, s), symbolic_power_squarefree(right, s));
  const std::string instance = "m=" + std::to_string(m) + ", n=" + std::to_string(n) +
                               ", |I|=" + std::to_string(ix.gens.size()) +
                               ", |J|=" + std::to_string(jy.gens.size()) +
                               ", s=" + std::to_string(s);
  return detail::make_check("artinian_sum_reg", instance, 2LL * s - 1,
                            detail::reg_of_ideal(k, gate));
}

// ---------------------------------------------------------------------------
// Symbolic powers of joins: for r >= 2 factors,
//   reg(I(G_1 * ... * G_r)^{(s)}) = max{ reg(I(G_j)^{(i)}) - i + s :
//                                        1 <= i <= s, factor j has an edge }.
// Edgeless factors contribute nothing to the right-hand side (their edge
// ideal is zero), but they do enter the join on the left.
inline VerificationResult verify_join_symbolic_reg(const std::vector<Graph>& factors, int s,
                                                   std::string instance = "",
                                                   const CostGate& gate = default_cost_gate()) {
  if (factors.size() < 2)
    throw std::invalid_argument("verify_join_symbolic_reg: need at least two factors");
  if (s < 1) throw std::invalid_argument("verify_join_symbolic_reg: need s >= 1");
  Graph join = factors.front();
  for (std::size_t k = 1; k < factors.size(); ++k) join = graph_join(join, factors[k]);
  if (!join.has_edge())
    throw std::invalid_argument("verify_join_symbolic_reg: join has no edge");
  if (instance.empty()) {
    for (const auto& f : factors) instance += (instance.empty() ? "" : " * ") + detail::describe_graph(f);
    instance += ", s=" + std::to_string(s);
  }
  bool some_edge = false;
  int rhs = 0;
  for (const auto& f : factors) {
    if (!f.has_edge()) continue;
    some_edge = true;
    for (int i = 1; i <= s; ++i)
      rhs = std::max(rhs, detail::reg_of_ideal(symbolic_power(f, i), gate) - i + s);
  }
  if (!some_edge)
    throw std::invalid_argument("verify_join_symbolic_reg: every factor is edgeless");
  const int lhs = detail::reg_of_ideal(symbolic_power(join, s), gate);
  return detail::make_check("join_symbolic_reg", instance, rhs, lhs);
}

// ---------------------------------------------------------------------------
// Wheels: reg(I(W_n)^{(s)}) = reg(I(W_n)^s) = 2s + nu(C_n) - 1 for s >= 2.
inline std::vector<VerificationResult> verify_wheel_symbolic(
    int n, int s, const CostGate& gate = default_cost_gate()) {
  if (n < 4) throw std::invalid_argument("verify_wheel_symbolic: need n >= 4");
  if (s < 2) throw std::invalid_argument("verify_wheel_symbolic: need s >= 2");
  const Graph w = wheel_graph(n);
  const long long expected = 2LL * s + induced_matching_number(cycle_graph(n)) - 1;
  const std::string instance = "W_" + std::to_string(n) + ", s=" + std::to_string(s);
  std::vector<VerificationResult> out;
  out.push_back(detail::make_check("wheel_symbolic_reg", instance, expected,
                                   detail::reg_of_ideal(symbolic_power(w, s), gate)));
  out.push_back(detail::make_check("wheel_ordinary_reg", instance, expected,
                                   detail::reg_of_ideal(ideal_power(edge_ideal(w), s), gate)));
  return out;
}

// ---------------------------------------------------------------------------
// Symbolic vs ordinary power regularity, s = 1..s_max.  At s = 1 the two
// ideals coincide and the check passes by construction.
inline std::vector<VerificationResult> check_minh(const Graph& g, int s_max,
                                                  std::string label = "",
                                                  const CostGate& gate = default_cost_gate()) {
  if (!g.has_edge()) throw std::invalid_argument("check_minh: graph has no edge");
  if (s_max < 1) throw std::invalid_argument("check_minh: need s_max >= 1");
  if (label.empty()) label = detail::describe_graph(g);
  std::vector<VerificationResult> out;
  for (int s = 1; s <= s_max; ++s) {
    const std::string instance = label + ", s=" + std::to_string(s);
    try {
      const int rs = detail::reg_of_ideal(symbolic_power(g, s), gate);
      const int ro = detail::reg_of_ideal(ideal_power(edge_ideal(g), s), gate);
      out.push_back(detail::make_check("symbolic_vs_ordinary_reg", instance, ro, rs));
    } catch (const CostGateError& e) {
      out.push_back(detail::make_skip("symbolic_vs_ordinary_reg", instance, e.what()));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Multiplicity of a join, by trichotomy on m + hgt(I(H)) vs n + hgt(I(G)):
//   e(S/I(G*H)) = e(G)+e(H)  (equal),  e(G)  (>),  e(H)  (<).
inline VerificationResult verify_join_multiplicity(const Graph& g, const Graph& h,
                                                   std::string instance = "") {
  if (!g.has_edge() || !h.has_edge())
    throw std::invalid_argument("verify_join_multiplicity: both factors need an edge");
  if (instance.empty())
    instance = detail::describe_graph(g) + " * " + detail::describe_graph(h);
  const CoverSet cg = minimal_vertex_covers(g), ch = minimal_vertex_covers(h);
  const int left = g.n + ch.height, right = h.n + cg.height;
  long long expected;
  std::string branch;
  if (left == right) {
    expected = cg.min_count + ch.min_count;
    branch = "equal heights: e(G)+e(H)";
  } else if (left > right) {
    expected = cg.min_count;
    branch = "left dominant: e(G)";
  } else {
    expected = ch.min_count;
    branch = "right dominant: e(H)";
  }
  const long long computed = multiplicity_by_covers(graph_join(g, h));
  auto r = detail::make_check("join_multiplicity", std::move(instance), expected, computed);
  r.note = branch;
  return r;
}

// ---------------------------------------------------------------------------
// Self-joins G^{*l}: (a) regularity of the quotient is unchanged,
// (b) multiplicity scales by l, (c) the Hilbert series satisfies
//   H(S/I(G^{*l}), t) = l * H(S_G/I(G), t) - (l - 1),
// checked as a polynomial identity after clearing (1-t)^dim.
inline std::vector<VerificationResult> verify_self_join(
    const Graph& g, int l, std::string label = "",
    const CostGate& gate = default_cost_gate()) {
  if (!g.has_edge()) throw std::invalid_argument("verify_self_join: graph has no edge");
  if (l < 1) throw std::invalid_argument("verify_self_join: need l >= 1");
  if (label.empty()) label = detail::describe_graph(g);
  const std::string instance = label + ", l=" + std::to_string(l);
  const Graph big = self_join(g, l);
  std::vector<VerificationResult> out;
  out.push_back(detail::make_check(
      "self_join_reg", instance,
      regularity(detail::quotient_table(g, gate), RegView::quotient),
      regularity(detail::quotient_table(big, gate), RegView::quotient)));
  out.push_back(detail::make_check("self_join_multiplicity", instance,
                                   static_cast<long long>(l) * multiplicity_by_covers(g),
                                   multiplicity_by_covers(big)));
  const HilbertSeries small = hilbert_series(g), large = hilbert_series(big);
  VerificationResult series;
  series.claim = "self_join_hilbert_series";
  series.instance = instance;
  if (small.d != large.d) {
    series.status = CheckStatus::fail;
    series.expected = "denominator (1-t)^" + std::to_string(small.d);
    series.computed = "denominator (1-t)^" + std::to_string(large.d);
    series.note = "dimension changed under self-join";
  } else {
    const Poly rhs =
        poly_sub(poly_scale(small.h, l), poly_scale(one_minus_t_pow(small.d), l - 1));
    series.expected = poly_to_string(rhs);
    series.computed = poly_to_string(large.h);
    series.status = rhs == large.h ? CheckStatus::pass : CheckStatus::fail;
  }
  out.push_back(std::move(series));
  return out;
}

// ---------------------------------------------------------------------------
// Whiskered complete graphs W(n, r): linear resolution; pd = n; depth = r;
// and e = n - r when r < n.
inline std::vector<VerificationResult> verify_whiskered(
    int n, int r, const CostGate& gate = default_cost_gate()) {
  const Graph w = whiskered_complete(n, r);
  const std::string instance = "W(" + std::to_string(n) + "," + std::to_string(r) + ")";
  const BettiTable t = detail::quotient_table(w, gate);
  std::vector<VerificationResult> out;
  out.push_back(detail::make_check("whiskered_linear_resolution", instance, 1,
                                   has_linear_resolution(t) ? 1 : 0));
  out.push_back(detail::make_check("whiskered_pd", instance, n, projective_dimension(t)));
  out.push_back(detail::make_check("whiskered_depth", instance, r, depth_from_table(t)));
  if (r < n)
    out.push_back(detail::make_check("whiskered_multiplicity", instance,
                                     static_cast<long long>(n - r),
                                     multiplicity_by_covers(w)));
  return out;
}

// ---------------------------------------------------------------------------
// Complements of triangle-free non-forests: reg(S/I(G^c)) = 2.  When the
// precondition fails the identity does not apply and the check is a skip.
inline VerificationResult verify_complement_reg(const Graph& g, std::string label = "",
                                                const CostGate& gate = default_cost_gate()) {
  if (label.empty()) label = detail::describe_graph(g);
  if (has_triangle(g))
    return detail::make_skip("complement_reg", label, "inapplicable: graph has a triangle");
  if (is_forest(g))
    return detail::make_skip("complement_reg", label, "inapplicable: graph is a forest");
  const Graph gc = graph_complement(g);
  return detail::make_check("complement_reg", label, 2,
                            regularity(detail::quotient_table(gc, gate), RegView::quotient));
}

// ---------------------------------------------------------------------------
// constructions (each returns the constructed graph plus its checks)

struct ConstructResult {
  Graph graph;
  std::vector<VerificationResult> checks;
};

// If reg(I(G)) = 3 and reg(I(H)) <= 3, then reg(I(G * H)) = 3.  The
// preconditions are computed, not assumed; a violation yields a skip.
inline ConstructResult construct_reg3_join(const Graph& g, const Graph& h,
                                           std::string instance = "",
                                           const CostGate& gate = default_cost_gate()) {
  if (!g.has_edge() || !h.has_edge())
    throw std::invalid_argument("construct_reg3_join: both factors need an edge");
  if (instance.empty())
    instance = detail::describe_graph(g) + " * " + detail::describe_graph(h);
  ConstructResult res;
  res.graph = graph_join(g, h);
  const int rg = regularity(detail::quotient_table(g, gate), RegView::ideal);
  const int rh = regularity(detail::quotient_table(h, gate), RegView::ideal);
  if (rg != 3) {
    res.checks.push_back(detail::make_skip(
        "reg3_join", instance, "inapplicable: reg(I(G)) = " + std::to_string(rg) + " != 3"));
    return res;
  }
  if (rh > 3) {
    res.checks.push_back(detail::make_skip(
        "reg3_join", instance, "inapplicable: reg(I(H)) = " + std::to_string(rh) + " > 3"));
    return res;
  }
  res.checks.push_back(detail::make_check(
      "reg3_join", instance, 3,
      regularity(detail::quotient_table(res.graph, gate), RegView::ideal)));
  return res;
}

// Disjoint union of r-1 edges with the staircase F_{d-r+1}: realizes
// reg(S/I) = r together with dim(S/I) = d, for any 1 <= r <= d.
inline ConstructResult construct_reg_dim(int r, int d,
                                         const CostGate& gate = default_cost_gate()) {
  if (r < 1 || d < r) throw std::invalid_argument("construct_reg_dim: need 1 <= r <= d");
  Graph g = staircase_graph(d - r + 1);
  for (int k = 1; k < r; ++k) g = disjoint_union(g, complete_graph(2));
  const std::string instance = "(r=" + std::to_string(r) + ", d=" + std::to_string(d) + ")";
  ConstructResult res;
  res.graph = std::move(g);
  try {
    res.checks.push_back(detail::make_check(
        "reg_dim_pair_reg", instance, r,
        regularity(detail::quotient_table(res.graph, gate), RegView::quotient)));
  } catch (const CostGateError& e) {
    res.checks.push_back(detail::make_skip("reg_dim_pair_reg", instance, e.what()));
  }
  res.checks.push_back(detail::make_check("reg_dim_pair_dim", instance, d, krull_dim(res.graph)));
  return res;
}

enum class PairTarget { reg, hdeg, depth, dim };

inline std::string pair_target_name(PairTarget t) {
  switch (t) {
    case PairTarget::reg: return "reg";
    case PairTarget::hdeg: return "hdeg";
    case PairTarget::depth: return "depth";
    case PairTarget::dim: return "dim";
  }
  throw std::logic_error("pair_target_name: bad enum");
}

inline PairTarget parse_pair_target(const std::string& s) {
  if (s == "reg") return PairTarget::reg;
  if (s == "hdeg") return PairTarget::hdeg;
  if (s == "depth") return PairTarget::depth;
  if (s == "dim") return PairTarget::dim;
  throw std::invalid_argument("unknown pair target '" + s + "' (reg|hdeg|depth|dim)");
}

// Fixed multiplicity e together with one other invariant of value v:
//   reg:   G = H^{*e} with H = P_{3v} (v odd) or P_{3v+1} (v even)
//   hdeg:  G = K_e (v = 1, needs e >= 2) or K_{1,v}^{*e} (v >= 2)
//   depth: G = W(e+v, v)
//   dim:   same shape as hdeg
// The hdeg and dim targets require e*v >= 2: multiplicity 1 forces both
// h-degree and dimension to be at least 2.
inline ConstructResult construct_mult_pair(int e, PairTarget target, int v,
                                           const CostGate& gate = default_cost_gate()) {
  if (e < 1 || v < 1) throw std::invalid_argument("construct_mult_pair: need e, v >= 1");
  if ((target == PairTarget::hdeg || target == PairTarget::dim) && e * v < 2)
    throw std::invalid_argument(
        "construct_mult_pair: the pair (e=1, " + pair_target_name(target) +
        "=1) is not realizable (multiplicity 1 forces h-degree and dimension >= 2)");
  const std::string instance =
      "(e=" + std::to_string(e) + ", " + pair_target_name(target) + "=" + std::to_string(v) + ")";
  ConstructResult res;
  std::vector<VerificationResult>& checks = res.checks;
  switch (target) {
    case PairTarget::reg: {
      res.graph = self_join(v % 2 == 1 ? path_graph(3 * v) : path_graph(3 * v + 1), e);
      checks.push_back(detail::make_check("mult_pair_mult", instance, e,
                                          multiplicity_by_covers(res.graph)));
      try {
        checks.push_back(detail::make_check(
            "mult_pair_reg", instance, v,
            regularity(detail::quotient_table(res.graph, gate), RegView::quotient)));
      } catch (const CostGateError& err) {
        checks.push_back(detail::make_skip("mult_pair_reg", instance, err.what()));
      }
      break;
    }
    case PairTarget::hdeg: {
      res.graph = v == 1 ? complete_graph(e) : self_join(star_graph(v), e);
      checks.push_back(detail::make_check("mult_pair_mult", instance, e,
                                          multiplicity_by_covers(res.graph)));
      checks.push_back(detail::make_check("mult_pair_hdeg", instance, v,
                                          hilbert_series(res.graph).degree()));
      break;
    }
    case PairTarget::depth: {
      res.graph = whiskered_complete(e + v, v);
      checks.push_back(detail::make_check("mult_pair_mult", instance, e,
                                          multiplicity_by_covers(res.graph)));
      checks.push_back(detail::make_check(
          "mult_pair_depth", instance, v,
          depth_from_table(detail::quotient_table(res.graph, gate))));
      break;
    }
    case PairTarget::dim: {
      res.graph = v == 1 ? complete_graph(e) : self_join(star_graph(v), e);
      checks.push_back(detail::make_check("mult_pair_mult", instance, e,
                                          multiplicity_by_covers(res.graph)));
      checks.push_back(detail::make_check("mult_pair_dim", instance, v, krull_dim(res.graph)));
      break;
    }
  }
  return res;
}

// Fixed depth delta together with regularity r or h-degree s:
//   reg:  delta = 1 -> P_{3r}^{*2};  r = 1 -> W(delta+1, delta);
//         2 <= r <= delta -> W(delta-r+2, delta-r+1) + (r-1) edges;
//         2 <= delta < r -> P_{3(r-delta+1)}^{*2} + (delta-1) edges
//   hdeg: delta = 1 -> K_{1,s};  s = 1 -> F_delta;
//         2 <= delta <= s -> K_{1,s-delta+1} + (delta-1) edges;
//         2 <= s < delta -> F_{delta-s+1} + (s-1) edges
inline ConstructResult construct_depth_pair(int delta, PairTarget target, int v,
                                            const CostGate& gate = default_cost_gate()) {
  if (delta < 1 || v < 1) throw std::invalid_argument("construct_depth_pair: need delta, v >= 1");
  if (target != PairTarget::reg && target != PairTarget::hdeg)
    throw std::invalid_argument("construct_depth_pair: target must be reg or hdeg");
  const std::string instance = "(depth=" + std::to_string(delta) + ", " +
                               pair_target_name(target) + "=" + std::to_string(v) + ")";
  auto with_edges = [](Graph g, int count) {
    for (int k = 0; k < count; ++k) g = disjoint_union(g, complete_graph(2));
    return g;
  };
  ConstructResult res;
  if (target == PairTarget::reg) {
    const int r = v;
    if (delta == 1) res.graph = self_join(path_graph(3 * r), 2);
    else if (r == 1) res.graph = whiskered_complete(delta + 1, delta);
    else if (r <= delta)
      res.graph = with_edges(whiskered_complete(delta - r + 2, delta - r + 1), r - 1);
    else
      res.graph = with_edges(self_join(path_graph(3 * (r - delta + 1)), 2), delta - 1);
  } else {
    const int s = v;
    if (delta == 1) res.graph = star_graph(s);
    else if (s == 1) res.graph = staircase_graph(delta);
    else if (delta <= s) res.graph = with_edges(star_graph(s - delta + 1), delta - 1);
    else res.graph = with_edges(staircase_graph(delta - s + 1), s - 1);
  }
  try {
    const BettiTable t = detail::quotient_table(res.graph, gate);
    res.checks.push_back(detail::make_check("depth_pair_depth", instance, delta,
                                            depth_from_table(t)));
    if (target == PairTarget::reg)
      res.checks.push_back(detail::make_check("depth_pair_reg", instance, v,
                                              regularity(t, RegView::quotient)));
  } catch (const CostGateError& err) {
    res.checks.push_back(detail::make_skip("depth_pair_depth", instance, err.what()));
    if (target == PairTarget::reg)
      res.checks.push_back(detail::make_skip("depth_pair_reg", instance, err.what()));
  }
  if (target == PairTarget::hdeg)
    res.checks.push_back(detail::make_check("depth_pair_hdeg", instance, v,
                                            hilbert_series(res.graph).degree()));
  return res;
}

// ---------------------------------------------------------------------------
// Disjoint unions: regularity of the quotient, depth, and h-degree are all
// additive across disjoint union.
inline std::vector<VerificationResult> verify_disjoint_union_additivity(
    const Graph& g, const Graph& h, std::string instance = "",
    const CostGate& gate = default_cost_gate()) {
  if (!g.has_edge() || !h.has_edge())
    throw std::invalid_argument("verify_disjoint_union_additivity: both parts need an edge");
  if (instance.empty())
    instance = detail::describe_graph(g) + " + " + detail::describe_graph(h);
  const Graph u = disjoint_union(g, h);
  const BettiTable tg = detail::quotient_table(g, gate), th = detail::quotient_table(h, gate),
                   tu = detail::quotient_table(u, gate);
  std::vector<VerificationResult> out;
  out.push_back(detail::make_check(
      "disjoint_union_reg", instance,
      regularity(tg, RegView::quotient) + regularity(th, RegView::quotient),
      regularity(tu, RegView::quotient)));
  out.push_back(detail::make_check("disjoint_union_depth", instance,
                                   depth_from_table(tg) + depth_from_table(th),
                                   depth_from_table(tu)));
  out.push_back(detail::make_check(
      "disjoint_union_hdeg", instance,
      hilbert_series(g).degree() + hilbert_series(h).degree(),
      hilbert_series(u).degree()));
  return out;
}

}  // namespace edgealg
