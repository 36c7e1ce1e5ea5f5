#pragma once

// Multigraded Betti numbers of edge-ideal quotients, by two independent
// routes:
//
//  * betti_by_subsets: for a squarefree (edge) ideal, beta_{i,A}(S/I) is the
//    reduced homology of the independence complex restricted to the vertex
//    subset A, in degree |A| - i - 1.  Loops over all 2^n subsets.
//
//  * betti_by_lattice: for any monomial ideal, beta_{i,a}(I) is the reduced
//    homology in degree i - 1 of the complex of squarefree vectors s with
//    x^{a-s} in I.  Loops over the lcm closure of the generators; entries
//    are shifted to quotient convention (homological degree i + 1).
//
// Both produce tables in quotient convention, including the unit entry in
// homological degree 0.  A cost gate bounds the work up front and raises
// CostGateError instead of starting an infeasible run.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "edgealg/exact_rank.hpp"
#include "edgealg/field.hpp"
#include "edgealg/graph.hpp"
#include "edgealg/homology.hpp"
#include "edgealg/monomial.hpp"
#include "edgealg/simplicial_complex.hpp"

namespace edgealg {

class CostGateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Work bounds checked before a computation starts.  Estimates are
// deliberately crude (subset count times face count, or lattice homology
// work) but monotone in the true cost.
struct CostGate {
  std::uint64_t subset_ops = 1'500'000'000ULL;   // 2^n * #independent sets
  std::uint64_t lattice_size = 50'000;           // lcm closure size
  std::uint64_t lattice_ops = 500'000'000ULL;    // sum of 2^|supp| over the closure
  std::uint64_t face_limit = 2'000'000;          // faces enumerated per complex
};

inline const CostGate& default_cost_gate() {
  static const CostGate gate{};
  return gate;
}

// Multidegree detail is retained only up to this many variables; the graded
// table is always complete.  (Large joins have homology in nearly every
// subset, so the multigraded map would dominate memory.)
inline constexpr int kMultidegreeMaxVars = 16;

struct BettiTable {
  FieldTag field;
  int n = 0;  // number of variables
  // quotient convention: entry (0, 0) -> 1 is always present
  std::map<std::pair<int, int>, long long> by_degree;  // (i, j) -> rank
  bool has_multidegree = false;
  std::map<std::pair<int, std::vector<int>>, long long> by_multidegree;

  void add(int i, int j, long long r) {
    if (r != 0) by_degree[{i, j}] += r;
  }
  void add_multi(int i, std::vector<int> a, long long r) {
    if (r != 0 && has_multidegree) by_multidegree[{i, std::move(a)}] += r;
  }

  long long entry(int i, int j) const {
    auto it = by_degree.find({i, j});
    return it == by_degree.end() ? 0 : it->second;
  }
};

enum class RegView { quotient, ideal };

// Castelnuovo-Mumford regularity read off the table: max(j - i) over nonzero
// entries of S/I; the ideal itself has regularity one higher.
inline int regularity(const BettiTable& t, RegView view = RegView::ideal) {
  int reg = 0;
  for (const auto& [key, rank] : t.by_degree)
    if (rank != 0) reg = std::max(reg, key.second - key.first);
  return view == RegView::quotient ? reg : reg + 1;
}

inline int projective_dimension(const BettiTable& t) {
  int pd = 0;
  for (const auto& [key, rank] : t.by_degree)
    if (rank != 0) pd = std::max(pd, key.first);
  return pd;
}

// depth S/I = n - pd (Auslander-Buchsbaum over the polynomial ring)
inline int depth_from_table(const BettiTable& t) {
  return t.n - projective_dimension(t);
}

// The ideal has a linear resolution iff every nonzero entry with i >= 1 sits
// in degree j = i + 1 (edge ideals are generated in degree 2).
inline bool has_linear_resolution(const BettiTable& t) {
  for (const auto& [key, rank] : t.by_degree)
    if (rank != 0 && key.first >= 1 && key.second != key.first + 1) return false;
  return true;
}

inline bool tables_agree_by_degree(const BettiTable& a, const BettiTable& b) {
  return a.by_degree == b.by_degree;
}

namespace detail {

inline std::vector<int> mask_to_squarefree(std::uint64_t m, int n) {
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  for (; m != 0; m &= m - 1) a[static_cast<std::size_t>(std::countr_zero(m))] = 1;
  return a;
}

// All independent sets of g as sorted masks, with a hard cap.
inline std::vector<std::uint64_t> independent_set_masks(const Graph& g, std::uint64_t cap) {
  auto adj = g.adjacency_masks();
  std::vector<std::uint64_t> out{0};
  // grow lexicographically: extend each independent set by any larger vertex
  std::function<void(std::uint64_t, int)> rec = [&](std::uint64_t cur, int next) {
    for (int v = next; v < g.n; ++v) {
      if ((adj[static_cast<std::size_t>(v)] & cur) != 0) continue;
      std::uint64_t ext = cur | (std::uint64_t{1} << v);
      out.push_back(ext);
      if (out.size() > cap)
        throw CostGateError("independent-set enumeration exceeded face limit (" +
                            std::to_string(cap) + ")");
      rec(ext, v + 1);
    }
  };
  rec(0, 0);
  sort_faces(out);
  return out;
}

// Shared engine: one chain-complex build per subset / lattice point, ranks
// over every requested field.
inline std::vector<BettiTable> betti_by_subsets_multi(const Graph& g,
                                                      const std::vector<FieldTag>& fields,
                                                      const CostGate& gate) {
  if (!g.has_edge())
    throw std::invalid_argument("betti_by_subsets: graph must have an edge");
  if (g.n > 30)
    throw CostGateError("betti_by_subsets: 2^" + std::to_string(g.n) + " subsets is out of reach");
  const auto faces = independent_set_masks(g, gate.face_limit);
  const std::uint64_t ops = (std::uint64_t{1} << g.n) * faces.size();
  if (ops > gate.subset_ops)
    throw CostGateError("betti_by_subsets: estimated work 2^" + std::to_string(g.n) + " * " +
                        std::to_string(faces.size()) + " = " + std::to_string(ops) +
                        " exceeds gate " + std::to_string(gate.subset_ops));
  const auto adj = g.adjacency_masks();
  std::vector<BettiTable> tables;
  for (const auto& f : fields) {
    BettiTable t;
    t.field = f;
    t.n = g.n;
    t.has_multidegree = g.n <= kMultidegreeMaxVars;
    t.add(0, 0, 1);
    t.add_multi(0, std::vector<int>(static_cast<std::size_t>(g.n), 0), 1);
    tables.push_back(std::move(t));
  }
  std::vector<std::uint64_t> sub;
  ChainComplex cc;
  for (std::uint64_t a = 1; a < (std::uint64_t{1} << g.n); ++a) {
    // a vertex isolated within G[A] makes the restricted complex a cone,
    // hence acyclic; this also covers singletons and independent subsets
    bool cone = false;
    for (std::uint64_t m = a; m != 0; m &= m - 1) {
      if ((adj[static_cast<std::size_t>(std::countr_zero(m))] & a) == 0) {
        cone = true;
        break;
      }
    }
    if (cone) continue;
    sub.clear();
    for (std::uint64_t f : faces)
      if ((f & ~a) == 0) sub.push_back(f);
    build_chain_complex(sub, cc);
    const int card = std::popcount(a);
    for (std::size_t k = 0; k < fields.size(); ++k) {
      const HomologyProfile h = profile_from_chain(cc, fields[k]);
      for (int deg = -1; deg + 1 < static_cast<int>(h.ranks.size()); ++deg) {
        const long long r = h.rank(deg);
        if (r == 0) continue;
        const int i = card - deg - 1;
        tables[k].add(i, card, r);
        if (tables[k].has_multidegree)
          tables[k].add_multi(i, mask_to_squarefree(a, g.n), r);
      }
    }
  }
  return tables;
}

// lcm closure of the generators (the multidegrees that can carry homology).
inline std::vector<Monomial> lcm_closure(const MonomialIdeal& ideal, const CostGate& gate) {
  std::vector<Monomial> lat = ideal.gens;
  std::set<std::vector<int>> seen;
  for (const auto& m : lat) seen.insert(m.e);
  for (std::size_t j = 1; j < lat.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      Monomial m = mon_lcm(lat[i], lat[j]);
      if (seen.insert(m.e).second) {
        lat.push_back(std::move(m));
        if (lat.size() > gate.lattice_size)
          throw CostGateError("betti_by_lattice: lcm closure exceeds gate " +
                              std::to_string(gate.lattice_size));
      }
    }
  }
  std::sort(lat.begin(), lat.end(), grlex_less);
  return lat;
}

inline std::vector<BettiTable> betti_by_lattice_multi(const MonomialIdeal& ideal,
                                                      const std::vector<FieldTag>& fields,
                                                      const CostGate& gate) {
  if (ideal.is_zero())
    throw std::invalid_argument("betti_by_lattice: ideal must be nonzero");
  const auto lattice = lcm_closure(ideal, gate);
  std::uint64_t ops = 0;
  for (const auto& a : lattice) {
    int supp = 0;
    for (int v : a.e) supp += v > 0;
    ops += std::uint64_t{1} << supp;
    if (ops > gate.lattice_ops)
      throw CostGateError("betti_by_lattice: estimated homology work exceeds gate " +
                          std::to_string(gate.lattice_ops));
  }
  std::vector<BettiTable> tables;
  for (const auto& f : fields) {
    BettiTable t;
    t.field = f;
    t.n = ideal.n;
    t.has_multidegree = ideal.n <= kMultidegreeMaxVars;
    t.add(0, 0, 1);
    t.add_multi(0, std::vector<int>(static_cast<std::size_t>(ideal.n), 0), 1);
    tables.push_back(std::move(t));
  }
  std::vector<std::uint64_t> faces;
  ChainComplex cc;
  Monomial probe{std::vector<int>(static_cast<std::size_t>(ideal.n), 0)};
  for (const auto& a : lattice) {
    std::vector<int> supp_vars;
    for (std::size_t v = 0; v < a.e.size(); ++v)
      if (a.e[v] > 0) supp_vars.push_back(static_cast<int>(v));
    const int s = static_cast<int>(supp_vars.size());
    faces.clear();
    for (std::uint64_t sigma = 0; sigma < (std::uint64_t{1} << s); ++sigma) {
      probe.e = a.e;
      for (std::uint64_t m = sigma; m != 0; m &= m - 1)
        --probe.e[static_cast<std::size_t>(supp_vars[static_cast<std::size_t>(std::countr_zero(m))])];
      if (ideal_contains(ideal, probe)) faces.push_back(sigma);
    }
    // sigma = 0 always qualifies: a is an lcm of generators, so x^a lies in
    // the ideal and the complex is never void
    sort_faces(faces);
    build_chain_complex(faces, cc);
    const int deg_a = std::accumulate(a.e.begin(), a.e.end(), 0);
    for (std::size_t k = 0; k < fields.size(); ++k) {
      const HomologyProfile h = profile_from_chain(cc, fields[k]);
      for (int deg = -1; deg + 1 < static_cast<int>(h.ranks.size()); ++deg) {
        const long long r = h.rank(deg);
        if (r == 0) continue;
        // beta_{deg+1, a}(I) = beta_{deg+2, a}(S/I)
        tables[k].add(deg + 2, deg_a, r);
        if (tables[k].has_multidegree) tables[k].add_multi(deg + 2, a.e, r);
      }
    }
  }
  return tables;
}

}  // namespace detail

inline BettiTable betti_by_subsets(const Graph& g, const FieldTag& field,
                                   const CostGate& gate = default_cost_gate()) {
  return detail::betti_by_subsets_multi(g, {field}, gate).front();
}

inline BettiTable betti_by_lattice(const MonomialIdeal& ideal, const FieldTag& field,
                                   const CostGate& gate = default_cost_gate()) {
  return detail::betti_by_lattice_multi(ideal, {field}, gate).front();
}

}  // namespace edgealg
