#pragma once

// Finite simple graphs on vertex set {0, ..., n-1}, together with the
// combinatorial machinery needed downstream: standard families, graph
// operations (join, disjoint union, complement, induced subgraph), minimal
// vertex covers / maximal independent sets, induced matching number, and a
// few structural predicates.
//
// Vertex subsets are manipulated as 64-bit masks, which caps graphs at 63
// vertices.  Everything here is exact and deterministic: all enumeration
// results come back sorted.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace edgealg {

inline constexpr int kMaxVertices = 63;

struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // sorted, each (u, v) with u < v

  bool has_edge() const { return !edges.empty(); }

  bool adjacent(int u, int v) const {
    return std::binary_search(edges.begin(), edges.end(),
                              std::make_pair(std::min(u, v), std::max(u, v)));
  }

  // adjacency_masks()[v] has bit w set iff {v, w} is an edge
  std::vector<std::uint64_t> adjacency_masks() const {
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
    for (const auto& [u, v] : edges) {
      adj[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
      adj[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    }
    return adj;
  }

  std::uint64_t full_mask() const {
    return n == 0 ? 0 : (~std::uint64_t{0} >> (64 - n));
  }

  bool operator==(const Graph& other) const = default;
};

// Builds a graph in canonical form.  Rejects loops, out-of-range endpoints
// and duplicate edges (in either orientation).
inline Graph make_graph(int n, std::vector<std::pair<int, int>> edges) {
  if (n < 0 || n > kMaxVertices)
    throw std::invalid_argument("make_graph: vertex count out of range [0, 63]");
  for (auto& [u, v] : edges) {
    if (u == v) throw std::invalid_argument("make_graph: loop edge rejected");
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= n)
      throw std::invalid_argument("make_graph: edge endpoint out of range");
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw std::invalid_argument("make_graph: duplicate edge rejected");
  return Graph{n, std::move(edges)};
}

// ---------------------------------------------------------------------------
// families

inline Graph edgeless_graph(int n) { return make_graph(n, {}); }

inline Graph path_graph(int n) {
  if (n < 1) throw std::invalid_argument("path_graph: need n >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return make_graph(n, std::move(e));
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle_graph: need n >= 3");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  e.push_back({0, n - 1});
  return make_graph(n, std::move(e));
}

inline Graph complete_graph(int n) {
  if (n < 1) throw std::invalid_argument("complete_graph: need n >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.push_back({i, j});
  return make_graph(n, std::move(e));
}

inline Graph complete_multipartite(const std::vector<int>& parts) {
  if (parts.empty())
    throw std::invalid_argument("complete_multipartite: need at least one part");
  for (int p : parts)
    if (p < 1) throw std::invalid_argument("complete_multipartite: part sizes must be >= 1");
  int n = std::accumulate(parts.begin(), parts.end(), 0);
  std::vector<int> part_of;
  for (std::size_t k = 0; k < parts.size(); ++k)
    part_of.insert(part_of.end(), static_cast<std::size_t>(parts[k]), static_cast<int>(k));
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (part_of[static_cast<std::size_t>(i)] != part_of[static_cast<std::size_t>(j)])
        e.push_back({i, j});
  return make_graph(n, std::move(e));
}

// Star K_{1,s}: vertex 0 is the center, 1..s are the leaves.
inline Graph star_graph(int s) {
  if (s < 1) throw std::invalid_argument("star_graph: need s >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= s; ++i) e.push_back({0, i});
  return make_graph(s + 1, std::move(e));
}

// Wheel W_n = hub 0 joined to the cycle 1..n.
inline Graph wheel_graph(int n) {
  if (n < 4) throw std::invalid_argument("wheel_graph: need n >= 4");
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= n; ++i) e.push_back({0, i});
  for (int i = 1; i < n; ++i) e.push_back({i, i + 1});
  e.push_back({1, n});
  return make_graph(n + 1, std::move(e));
}

// Whiskered complete graph W(n, r): K_n on 0..n-1, with a pendant
// vertex n+k attached to vertex k for each k < r.
inline Graph whiskered_complete(int n, int r) {
  if (n < 1 || r < 1 || r > n)
    throw std::invalid_argument("whiskered_complete: need 1 <= r <= n");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.push_back({i, j});
  for (int k = 0; k < r; ++k) e.push_back({k, n + k});
  return make_graph(n + r, std::move(e));
}

// Staircase graph F_n: bipartite on x_0..x_{n-1} (vertices 0..n-1) and
// y_0..y_{n-1} (vertices n..2n-1), with x_i ~ y_j iff i <= j.
inline Graph staircase_graph(int n) {
  if (n < 1) throw std::invalid_argument("staircase_graph: need n >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) e.push_back({i, n + j});
  return make_graph(2 * n, std::move(e));
}

// ---------------------------------------------------------------------------
// operations

// Join G * H: disjoint copies of G and H plus every edge between them.
inline Graph graph_join(const Graph& g, const Graph& h) {
  int n = g.n + h.n;
  std::vector<std::pair<int, int>> e = g.edges;
  for (const auto& [u, v] : h.edges) e.push_back({u + g.n, v + g.n});
  for (int u = 0; u < g.n; ++u)
    for (int v = 0; v < h.n; ++v) e.push_back({u, g.n + v});
  return make_graph(n, std::move(e));
}

inline Graph disjoint_union(const Graph& g, const Graph& h) {
  std::vector<std::pair<int, int>> e = g.edges;
  for (const auto& [u, v] : h.edges) e.push_back({u + g.n, v + g.n});
  return make_graph(g.n + h.n, std::move(e));
}

// l-fold join G * G * ... * G.
inline Graph self_join(const Graph& g, int l) {
  if (l < 1) throw std::invalid_argument("self_join: need l >= 1");
  Graph acc = g;
  for (int k = 1; k < l; ++k) acc = graph_join(acc, g);
  return acc;
}

inline Graph graph_complement(const Graph& g) {
  std::vector<std::pair<int, int>> e;
  auto adj = g.adjacency_masks();
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j)
      if (!(adj[static_cast<std::size_t>(i)] >> j & 1)) e.push_back({i, j});
  return make_graph(g.n, std::move(e));
}

// Subgraph induced on a sorted list of distinct vertices; vertex k of the
// result corresponds to verts[k].
inline Graph induced_subgraph(const Graph& g, const std::vector<int>& verts) {
  std::vector<int> newidx(static_cast<std::size_t>(g.n), -1);
  for (std::size_t k = 0; k < verts.size(); ++k) {
    int v = verts[k];
    if (v < 0 || v >= g.n)
      throw std::invalid_argument("induced_subgraph: vertex out of range");
    if (newidx[static_cast<std::size_t>(v)] != -1)
      throw std::invalid_argument("induced_subgraph: repeated vertex");
    newidx[static_cast<std::size_t>(v)] = static_cast<int>(k);
  }
  if (!std::is_sorted(verts.begin(), verts.end()))
    throw std::invalid_argument("induced_subgraph: vertex list must be sorted");
  std::vector<std::pair<int, int>> e;
  for (const auto& [u, v] : g.edges) {
    int nu = newidx[static_cast<std::size_t>(u)], nv = newidx[static_cast<std::size_t>(v)];
    if (nu != -1 && nv != -1) e.push_back({nu, nv});
  }
  return make_graph(static_cast<int>(verts.size()), std::move(e));
}

// ---------------------------------------------------------------------------
// independent sets and vertex covers

namespace detail {

// Bron-Kerbosch with pivoting; reports maximal cliques of the graph whose
// adjacency masks are `nbr`.
inline void bron_kerbosch(std::uint64_t r, std::uint64_t p, std::uint64_t x,
                          const std::vector<std::uint64_t>& nbr,
                          std::vector<std::uint64_t>& out) {
  if (p == 0 && x == 0) {
    out.push_back(r);
    return;
  }
  std::uint64_t px = p | x;
  int pivot = -1, best = -1;
  for (std::uint64_t m = px; m != 0; m &= m - 1) {
    int v = std::countr_zero(m);
    int c = std::popcount(p & nbr[static_cast<std::size_t>(v)]);
    if (c > best) {
      best = c;
      pivot = v;
    }
  }
  std::uint64_t cand = p & ~nbr[static_cast<std::size_t>(pivot)];
  for (std::uint64_t m = cand; m != 0; m &= m - 1) {
    int v = std::countr_zero(m);
    std::uint64_t vb = std::uint64_t{1} << v;
    bron_kerbosch(r | vb, p & nbr[static_cast<std::size_t>(v)],
                  x & nbr[static_cast<std::size_t>(v)], nbr, out);
    p &= ~vb;
    x |= vb;
  }
}

inline std::vector<int> mask_to_verts(std::uint64_t m) {
  std::vector<int> out;
  for (; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

inline std::uint64_t verts_to_mask(const std::vector<int>& verts) {
  std::uint64_t m = 0;
  for (int v : verts) m |= std::uint64_t{1} << v;
  return m;
}

}  // namespace detail

// Maximal independent sets, as sorted vertex lists, in lexicographic order.
// Found as the maximal cliques of the complement.
inline std::vector<std::uint64_t> maximal_independent_set_masks(const Graph& g) {
  auto adj = g.adjacency_masks();
  std::uint64_t full = g.full_mask();
  std::vector<std::uint64_t> cnbr(static_cast<std::size_t>(g.n));
  for (int v = 0; v < g.n; ++v)
    cnbr[static_cast<std::size_t>(v)] =
        full & ~adj[static_cast<std::size_t>(v)] & ~(std::uint64_t{1} << v);
  std::vector<std::uint64_t> out;
  detail::bron_kerbosch(0, full, 0, cnbr, out);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::vector<int>> maximal_independent_sets(const Graph& g) {
  std::vector<std::vector<int>> out;
  for (std::uint64_t m : maximal_independent_set_masks(g))
    out.push_back(detail::mask_to_verts(m));
  std::sort(out.begin(), out.end());
  return out;
}

struct CoverSet {
  std::vector<std::vector<int>> covers;  // minimal vertex covers, each sorted, list lex-sorted
  int height = 0;                        // smallest cover size
  long long min_count = 0;               // number of covers of the smallest size
};

// Minimal vertex covers are exactly the complements of maximal independent
// sets.  For the edgeless graph the unique minimal cover is the empty set.
inline CoverSet minimal_vertex_covers(const Graph& g) {
  std::uint64_t full = g.full_mask();
  CoverSet cs;
  for (std::uint64_t m : maximal_independent_set_masks(g))
    cs.covers.push_back(detail::mask_to_verts(full & ~m));
  std::sort(cs.covers.begin(), cs.covers.end());
  cs.height = g.n;
  for (const auto& c : cs.covers)
    cs.height = std::min(cs.height, static_cast<int>(c.size()));
  for (const auto& c : cs.covers)
    if (static_cast<int>(c.size()) == cs.height) ++cs.min_count;
  return cs;
}

// Krull dimension of the Stanley-Reisner quotient: n minus the height of the
// cover ideal, i.e. the size of a largest independent set.
inline int krull_dim(const Graph& g) {
  return g.n - minimal_vertex_covers(g).height;
}

// Multiplicity of the edge-ideal quotient: the number of minimum vertex
// covers, equivalently the number of maximum independent sets.
inline long long multiplicity_by_covers(const Graph& g) {
  return minimal_vertex_covers(g).min_count;
}

// ---------------------------------------------------------------------------
// induced matching number

// Largest set of edges pairwise joined by no edge (and sharing no vertex):
// exhaustive search, pruned by forbidding the closed neighborhood of the
// chosen edges.
inline int induced_matching_number(const Graph& g) {
  if (!g.has_edge())
    throw std::invalid_argument("induced_matching_number: graph has no edge");
  auto adj = g.adjacency_masks();
  const auto& edges = g.edges;
  int best = 0;
  std::function<void(std::size_t, std::uint64_t, int)> rec =
      [&](std::size_t start, std::uint64_t forbidden, int count) {
        best = std::max(best, count);
        if (count + static_cast<int>(edges.size() - start) <= best) return;
        for (std::size_t k = start; k < edges.size(); ++k) {
          auto [u, v] = edges[k];
          std::uint64_t uv = (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
          if ((uv & forbidden) != 0) continue;
          rec(k + 1,
              forbidden | uv | adj[static_cast<std::size_t>(u)] |
                  adj[static_cast<std::size_t>(v)],
              count + 1);
        }
      };
  rec(0, 0, 0);
  return best;
}

// ---------------------------------------------------------------------------
// predicates

inline bool is_bipartite(const Graph& g) {
  std::vector<int> color(static_cast<std::size_t>(g.n), -1);
  auto adj = g.adjacency_masks();
  for (int s = 0; s < g.n; ++s) {
    if (color[static_cast<std::size_t>(s)] != -1) continue;
    color[static_cast<std::size_t>(s)] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (std::uint64_t m = adj[static_cast<std::size_t>(v)]; m != 0; m &= m - 1) {
        int w = std::countr_zero(m);
        if (color[static_cast<std::size_t>(w)] == -1) {
          color[static_cast<std::size_t>(w)] = 1 - color[static_cast<std::size_t>(v)];
          stack.push_back(w);
        } else if (color[static_cast<std::size_t>(w)] == color[static_cast<std::size_t>(v)]) {
          return false;
        }
      }
    }
  }
  return true;
}

inline bool is_forest(const Graph& g) {
  // a graph is a forest iff every component has (size - 1) edges;
  // equivalently DFS from each root meets no back edge
  std::vector<int> parent(static_cast<std::size_t>(g.n), -2);
  auto adj = g.adjacency_masks();
  for (int s = 0; s < g.n; ++s) {
    if (parent[static_cast<std::size_t>(s)] != -2) continue;
    parent[static_cast<std::size_t>(s)] = -1;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (std::uint64_t m = adj[static_cast<std::size_t>(v)]; m != 0; m &= m - 1) {
        int w = std::countr_zero(m);
        if (w == parent[static_cast<std::size_t>(v)]) continue;
        if (parent[static_cast<std::size_t>(w)] != -2) return false;
        parent[static_cast<std::size_t>(w)] = v;
        stack.push_back(w);
      }
    }
  }
  return true;
}

inline bool has_triangle(const Graph& g) {
  auto adj = g.adjacency_masks();
  for (const auto& [u, v] : g.edges)
    if ((adj[static_cast<std::size_t>(u)] & adj[static_cast<std::size_t>(v)]) != 0)
      return true;
  return false;
}

// Chordality via maximum cardinality search: the reverse of an MCS visit
// order is a perfect elimination ordering iff the graph is chordal.
inline bool is_chordal(const Graph& g) {
  int n = g.n;
  auto adj = g.adjacency_masks();
  std::vector<int> weight(static_cast<std::size_t>(n), 0);
  std::vector<bool> visited(static_cast<std::size_t>(n), false);
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int v = 0; v < n; ++v)
      if (!visited[static_cast<std::size_t>(v)] &&
          (pick == -1 || weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(pick)]))
        pick = v;
    visited[static_cast<std::size_t>(pick)] = true;
    order.push_back(pick);
    for (std::uint64_t m = adj[static_cast<std::size_t>(pick)]; m != 0; m &= m - 1) {
      int w = std::countr_zero(m);
      if (!visited[static_cast<std::size_t>(w)]) ++weight[static_cast<std::size_t>(w)];
    }
  }
  // position in the candidate elimination ordering (reverse of visit order)
  std::vector<int> pos(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])] = n - 1 - k;
  for (int v = 0; v < n; ++v) {
    std::uint64_t later = 0;
    int u = -1, upos = n;
    for (std::uint64_t m = adj[static_cast<std::size_t>(v)]; m != 0; m &= m - 1) {
      int w = std::countr_zero(m);
      if (pos[static_cast<std::size_t>(w)] > pos[static_cast<std::size_t>(v)]) {
        later |= std::uint64_t{1} << w;
        if (pos[static_cast<std::size_t>(w)] < upos) {
          upos = pos[static_cast<std::size_t>(w)];
          u = w;
        }
      }
    }
    if (u != -1) {
      std::uint64_t rest = later & ~(std::uint64_t{1} << u);
      if ((rest & ~adj[static_cast<std::size_t>(u)]) != 0) return false;
    }
  }
  return true;
}

inline bool is_cochordal(const Graph& g) { return is_chordal(graph_complement(g)); }

// ---------------------------------------------------------------------------
// family dispatcher (used by the command-line tool)

inline Graph graph_family(const std::string& name, const std::vector<int>& params) {
  auto arity = [&](std::size_t k) {
    if (params.size() != k)
      throw std::invalid_argument("family '" + name + "': expected " +
                                  std::to_string(k) + " parameter(s)");
  };
  if (name == "path") { arity(1); return path_graph(params[0]); }
  if (name == "cycle") { arity(1); return cycle_graph(params[0]); }
  if (name == "complete") { arity(1); return complete_graph(params[0]); }
  if (name == "star") { arity(1); return star_graph(params[0]); }
  if (name == "wheel") { arity(1); return wheel_graph(params[0]); }
  if (name == "staircase") { arity(1); return staircase_graph(params[0]); }
  if (name == "edgeless") { arity(1); return edgeless_graph(params[0]); }
  if (name == "whiskered_complete") { arity(2); return whiskered_complete(params[0], params[1]); }
  if (name == "complete_multipartite") {
    if (params.empty())
      throw std::invalid_argument("family 'complete_multipartite': need part sizes");
    return complete_multipartite(params);
  }
  throw std::invalid_argument("unknown graph family '" + name + "'");
}

}  // namespace edgealg
