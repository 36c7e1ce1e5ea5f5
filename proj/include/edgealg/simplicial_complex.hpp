#pragma once

// Abstract simplicial complexes on ground set {0, ..., n-1}, stored by their
// facets (inclusion-maximal faces) as bitmasks.  The empty complex {} (no
// faces at all, the "void" complex) is representable and distinct from the
// complex {∅} whose only face is the empty set.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "edgealg/graph.hpp"

namespace edgealg {

struct SimplicialComplex {
  int n = 0;
  // inclusion-maximal faces, sorted by (cardinality, mask value);
  // {0} alone encodes the complex {∅}, an empty list encodes the void complex
  std::vector<std::uint64_t> facets;

  bool is_void() const { return facets.empty(); }

  bool operator==(const SimplicialComplex&) const = default;
};

namespace detail {

inline void sort_faces(std::vector<std::uint64_t>& faces) {
  std::sort(faces.begin(), faces.end(), [](std::uint64_t a, std::uint64_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
}

inline std::vector<std::uint64_t> maximal_masks(std::vector<std::uint64_t> faces) {
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  std::vector<std::uint64_t> out;
  for (std::uint64_t f : faces) {
    bool dominated = false;
    for (std::uint64_t g : faces)
      if (g != f && (f & ~g) == 0) {
        dominated = true;
        break;
      }
    if (!dominated) out.push_back(f);
  }
  sort_faces(out);
  return out;
}

}  // namespace detail

// Builds the complex generated by the given faces (downward closure).
inline SimplicialComplex make_complex(int n, const std::vector<std::vector<int>>& faces) {
  if (n < 0 || n > kMaxVertices)
    throw std::invalid_argument("make_complex: ground set size out of range [0, 63]");
  std::vector<std::uint64_t> masks;
  for (const auto& f : faces) {
    std::uint64_t m = 0;
    for (int v : f) {
      if (v < 0 || v >= n) throw std::invalid_argument("make_complex: vertex out of range");
      m |= std::uint64_t{1} << v;
    }
    masks.push_back(m);
  }
  return SimplicialComplex{n, detail::maximal_masks(std::move(masks))};
}

// Independence complex Ind(G): faces are the independent sets of G.
inline SimplicialComplex independence_complex(const Graph& g) {
  return SimplicialComplex{g.n, maximal_independent_set_masks(g)};
}

// Restriction to a vertex subset: all faces contained in `keep`.
inline SimplicialComplex restrict_complex(const SimplicialComplex& c, std::uint64_t keep) {
  std::vector<std::uint64_t> cut;
  cut.reserve(c.facets.size());
  for (std::uint64_t f : c.facets) cut.push_back(f & keep);
  return SimplicialComplex{c.n, detail::maximal_masks(std::move(cut))};
}

inline SimplicialComplex restrict_complex(const SimplicialComplex& c, const std::vector<int>& keep) {
  return restrict_complex(c, detail::verts_to_mask(keep));
}

// Every face (including the empty face), sorted by (cardinality, mask).
// The void complex yields an empty list.
inline std::vector<std::uint64_t> all_faces(const SimplicialComplex& c) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t f : c.facets) {
    // enumerate all submasks of f, empty face included
    std::uint64_t s = f;
    while (true) {
      seen.insert(s);
      if (s == 0) break;
      s = (s - 1) & f;
    }
  }
  std::vector<std::uint64_t> out(seen.begin(), seen.end());
  detail::sort_faces(out);
  return out;
}

// Dimension: max facet size minus one.  {∅} has dimension -1; rejects void.
inline int complex_dim(const SimplicialComplex& c) {
  if (c.is_void()) throw std::invalid_argument("complex_dim: void complex has no dimension");
  int d = -1;
  for (std::uint64_t f : c.facets) d = std::max(d, std::popcount(f) - 1);
  return d;
}

// f-vector (f_{-1}, f_0, ..., f_dim); entry k counts faces of cardinality k.
// The void complex yields an empty vector.
inline std::vector<long long> f_vector(const SimplicialComplex& c) {
  if (c.is_void()) return {};
  std::vector<long long> f(static_cast<std::size_t>(complex_dim(c) + 2), 0);
  for (std::uint64_t face : all_faces(c)) ++f[static_cast<std::size_t>(std::popcount(face))];
  return f;
}

}  // namespace edgealg
