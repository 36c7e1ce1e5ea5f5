#pragma once

// Brute-force reference implementations used only by the tests.  Each one is
// written to be obviously correct (exhaustive enumeration, no cleverness) so
// that library results can be checked against an independent route.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <vector>

#include "edgealg/graph.hpp"
#include "edgealg/monomial.hpp"

namespace oracle {

// all independent sets of g, as bitmasks (includes the empty set)
inline std::set<std::uint64_t> independent_sets(const edgealg::Graph& g) {
  std::set<std::uint64_t> out;
  const auto adj = g.adjacency_masks();
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.n); ++s) {
    bool ok = true;
    for (int v = 0; v < g.n && ok; ++v)
      if ((s >> v & 1) && (adj[static_cast<std::size_t>(v)] & s)) ok = false;
    if (ok) out.insert(s);
  }
  return out;
}

// all minimal vertex covers, by scanning every subset for coverage and then
// dropping non-minimal ones
inline std::vector<std::uint64_t> minimal_covers(const edgealg::Graph& g) {
  std::vector<std::uint64_t> covers;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.n); ++s) {
    bool cover = true;
    for (const auto& [u, v] : g.edges)
      if (!(s >> u & 1) && !(s >> v & 1)) {
        cover = false;
        break;
      }
    if (cover) covers.push_back(s);
  }
  std::vector<std::uint64_t> minimal;
  for (const auto a : covers) {
    bool keep = true;
    for (const auto b : covers)
      if (b != a && (a & b) == b) {
        keep = false;
        break;
      }
    if (keep) minimal.push_back(a);
  }
  return minimal;
}

// induced matching number by scanning all subsets of the edge list
inline int induced_matching(const edgealg::Graph& g) {
  const int m = static_cast<int>(g.edges.size());
  int best = 0;
  for (std::uint32_t pick = 1; pick < (std::uint32_t{1} << m); ++pick) {
    std::uint64_t verts = 0;
    int count = 0;
    bool disjoint = true;
    for (int k = 0; k < m && disjoint; ++k)
      if (pick >> k & 1) {
        const std::uint64_t ends = (std::uint64_t{1} << g.edges[static_cast<std::size_t>(k)].first) |
                                   (std::uint64_t{1} << g.edges[static_cast<std::size_t>(k)].second);
        if (verts & ends) disjoint = false;
        verts |= ends;
        ++count;
      }
    if (!disjoint || count <= best) continue;
    // induced: the chosen vertices must span exactly the chosen edges
    int spanned = 0;
    for (const auto& [u, v] : g.edges)
      if ((verts >> u & 1) && (verts >> v & 1)) ++spanned;
    if (spanned == count) best = count;
  }
  return best;
}

// chordal iff no induced cycle of length >= 4: check every vertex subset that
// induces a connected 2-regular subgraph
inline bool is_chordal(const edgealg::Graph& g) {
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.n); ++s) {
    if (std::popcount(s) < 4) continue;
    std::vector<int> verts;
    for (int v = 0; v < g.n; ++v)
      if (s >> v & 1) verts.push_back(v);
    std::vector<int> deg(verts.size(), 0);
    int edges_inside = 0;
    for (std::size_t a = 0; a < verts.size(); ++a)
      for (std::size_t b = a + 1; b < verts.size(); ++b)
        if (g.adjacent(verts[a], verts[b])) {
          ++deg[a];
          ++deg[b];
          ++edges_inside;
        }
    if (edges_inside != static_cast<int>(verts.size())) continue;
    if (!std::all_of(deg.begin(), deg.end(), [](int d) { return d == 2; })) continue;
    // 2-regular with |E| = |V|: a disjoint union of cycles; connected iff one cycle
    std::vector<std::uint64_t> adj(verts.size(), 0);
    for (std::size_t a = 0; a < verts.size(); ++a)
      for (std::size_t b = 0; b < verts.size(); ++b)
        if (a != b && g.adjacent(verts[a], verts[b])) adj[a] |= std::uint64_t{1} << b;
    std::uint64_t seen = 1;
    std::vector<std::size_t> stack{0};
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t w = 0; w < verts.size(); ++w)
        if ((adj[v] >> w & 1) && !(seen >> w & 1)) {
          seen |= std::uint64_t{1} << w;
          stack.push_back(w);
        }
    }
    if (seen == (std::uint64_t{1} << verts.size()) - 1) return false;  // induced long cycle
  }
  return true;
}

// membership of a monomial in an ideal, straight from the definition
inline bool ideal_member(const edgealg::MonomialIdeal& ideal, const edgealg::Monomial& m) {
  for (const auto& g : ideal.gens)
    if (edgealg::divides(g, m)) return true;
  return false;
}

// membership in the s-th ordinary power: m is divisible by a product of s
// generators (computed recursively)
inline bool power_member(const edgealg::MonomialIdeal& ideal, const edgealg::Monomial& m, int s) {
  if (s == 0) return true;
  for (const auto& g : ideal.gens) {
    if (!edgealg::divides(g, m)) continue;
    edgealg::Monomial rest = m;
    for (std::size_t v = 0; v < rest.e.size(); ++v) rest.e[v] -= g.e[v];
    if (power_member(ideal, rest, s - 1)) return true;
  }
  return false;
}

// membership in the s-th symbolic power of an edge ideal: every minimal
// vertex cover must receive total degree >= s
inline bool symbolic_member(const edgealg::Graph& g, const edgealg::Monomial& m, int s) {
  for (const auto cover : minimal_covers(g)) {
    long long total = 0;
    for (int v = 0; v < g.n; ++v)
      if (cover >> v & 1) total += m.e[static_cast<std::size_t>(v)];
    if (total < s) return false;
  }
  return true;
}

// reduced Euler characteristic of a simplicial complex given its full face
// list as bitmasks (the empty face included)
inline long long reduced_euler(const std::vector<std::uint64_t>& faces) {
  long long chi = 0;
  for (const auto f : faces) {
    const int dim = std::popcount(f) - 1;
    chi += (dim % 2 == 0) ? 1 : -1;  // the empty face (dim -1) contributes -1
  }
  return chi;
}

}  // namespace oracle
