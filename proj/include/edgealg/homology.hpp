#pragma once

// Reduced simplicial homology ranks over a chosen coefficient field, computed
// from the augmented chain complex via exact boundary-matrix ranks:
//
//   dim H~_{c-1} = #faces(card c) - rank d_c - rank d_{c+1}
//
// where d_c maps the span of cardinality-c faces to cardinality-(c-1) faces
// and d_0 is the augmentation.  The complex {∅} has H~_{-1} = k and nothing
// else; the void complex has no well-defined reduced homology and is
// rejected.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "edgealg/exact_rank.hpp"
#include "edgealg/field.hpp"
#include "edgealg/simplicial_complex.hpp"

namespace edgealg {

struct HomologyProfile {
  // ranks[c] = dim H~_{c-1}; index 0 corresponds to degree -1
  std::vector<long long> ranks;

  long long rank(int degree) const {
    const int c = degree + 1;
    if (c < 0 || c >= static_cast<int>(ranks.size())) return 0;
    return ranks[static_cast<std::size_t>(c)];
  }

  bool all_zero() const {
    return std::all_of(ranks.begin(), ranks.end(), [](long long r) { return r == 0; });
  }
};

namespace detail {

// Boundary matrices of the augmented chain complex of a downward-closed face
// list (sorted by cardinality then mask).  counts[c] is the number of faces
// of cardinality c; mats[c-1] is the matrix of d_c for c >= 1.
struct ChainComplex {
  std::vector<int> counts;
  std::vector<IntMatrix> mats;
};

inline void build_chain_complex(const std::vector<std::uint64_t>& faces, ChainComplex& out) {
  out.counts.clear();
  out.mats.clear();
  if (faces.empty())
    throw std::invalid_argument("build_chain_complex: void complex rejected");
  if (faces.front() != 0)
    throw std::logic_error("build_chain_complex: face list must contain the empty face");
  // group boundaries: faces are sorted by (cardinality, mask)
  std::vector<std::size_t> start;  // start[c] = first index with cardinality c
  int top = std::popcount(faces.back());
  start.assign(static_cast<std::size_t>(top + 2), faces.size());
  for (std::size_t i = faces.size(); i-- > 0;)
    start[static_cast<std::size_t>(std::popcount(faces[i]))] = i;
  // a sorted, downward-closed list has contiguous cardinality blocks; verify
  for (int c = 0; c <= top; ++c)
    if (start[static_cast<std::size_t>(c)] > start[static_cast<std::size_t>(c + 1)])
      throw std::logic_error("build_chain_complex: face list not sorted by cardinality");
  out.counts.resize(static_cast<std::size_t>(top + 1));
  for (int c = 0; c <= top; ++c)
    out.counts[static_cast<std::size_t>(c)] =
        static_cast<int>(start[static_cast<std::size_t>(c + 1)] - start[static_cast<std::size_t>(c)]);
  out.mats.resize(static_cast<std::size_t>(top));
  for (int c = 1; c <= top; ++c) {
    const std::size_t lo_prev = start[static_cast<std::size_t>(c - 1)];
    const std::size_t lo = start[static_cast<std::size_t>(c)];
    const int rows = out.counts[static_cast<std::size_t>(c - 1)];
    const int cols = out.counts[static_cast<std::size_t>(c)];
    IntMatrix& m = out.mats[static_cast<std::size_t>(c - 1)];
    m = IntMatrix(rows, cols);
    const auto row_begin = faces.begin() + static_cast<std::ptrdiff_t>(lo_prev);
    const auto row_end = faces.begin() + static_cast<std::ptrdiff_t>(lo);
    for (int j = 0; j < cols; ++j) {
      const std::uint64_t face = faces[lo + static_cast<std::size_t>(j)];
      int sign = 1, pos = 0;
      for (std::uint64_t m2 = face; m2 != 0; m2 &= m2 - 1, ++pos) {
        const std::uint64_t sub = face ^ (m2 & -m2);
        const auto it = std::lower_bound(row_begin, row_end, sub);
        if (it == row_end || *it != sub)
          throw std::logic_error("build_chain_complex: face list not downward closed");
        m.at(static_cast<int>(it - row_begin), j) = sign;
        sign = -sign;
      }
    }
  }
}

inline HomologyProfile profile_from_chain(const ChainComplex& cc, const FieldTag& field) {
  const int top = static_cast<int>(cc.counts.size()) - 1;
  std::vector<int> rk(static_cast<std::size_t>(top + 2), 0);  // rk[c] = rank d_c, rk[0] unused
  for (int c = 1; c <= top; ++c)
    rk[static_cast<std::size_t>(c)] = matrix_rank(cc.mats[static_cast<std::size_t>(c - 1)], field);
  HomologyProfile h;
  h.ranks.resize(static_cast<std::size_t>(top + 1));
  for (int c = 0; c <= top; ++c)
    h.ranks[static_cast<std::size_t>(c)] = cc.counts[static_cast<std::size_t>(c)] -
                                           rk[static_cast<std::size_t>(c)] -
                                           rk[static_cast<std::size_t>(c + 1)];
  // degree -1 adjustment: the augmentation has the empty face as its target,
  // and rank d_0 = 0, so H~_{-1} = 1 - rank d_1 falls out of counts[0] = 1
  return h;
}

}  // namespace detail

// Reduced homology ranks from an explicit face list (must be downward closed,
// sorted by (cardinality, mask), and contain the empty face).
inline HomologyProfile homology_of_faces(const std::vector<std::uint64_t>& faces,
                                         const FieldTag& field) {
  detail::ChainComplex cc;
  detail::build_chain_complex(faces, cc);
  return detail::profile_from_chain(cc, field);
}

inline HomologyProfile reduced_homology_ranks(const SimplicialComplex& c, const FieldTag& field) {
  if (c.is_void())
    throw std::invalid_argument("reduced_homology_ranks: void complex rejected");
  return homology_of_faces(all_faces(c), field);
}

}  // namespace edgealg
