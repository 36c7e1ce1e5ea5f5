#pragma once

// Monomial ideals in Z[x_0, ..., x_{n-1}], represented by their unique
// minimal generating sets (antichains under divisibility), kept sorted in a
// graded lexicographic order.  All arithmetic is exact on integer exponent
// vectors; no Groebner machinery is needed because every ideal here is
// monomial.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "edgealg/graph.hpp"

namespace edgealg {

struct Monomial {
  std::vector<int> e;  // exponents, one per variable

  int degree() const { return std::accumulate(e.begin(), e.end(), 0); }

  bool operator==(const Monomial&) const = default;
};

// a divides b
inline bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.e.size(); ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

inline Monomial mon_lcm(const Monomial& a, const Monomial& b) {
  Monomial m = a;
  for (std::size_t i = 0; i < m.e.size(); ++i) m.e[i] = std::max(m.e[i], b.e[i]);
  return m;
}

inline Monomial mon_product(const Monomial& a, const Monomial& b) {
  Monomial m = a;
  for (std::size_t i = 0; i < m.e.size(); ++i) m.e[i] += b.e[i];
  return m;
}

// Graded order: by total degree, then lexicographically with x_0 > x_1 > ...
// (within a degree, the monomial with the lexicographically larger exponent
// vector comes first, so x_0 x_1 precedes x_1 x_2).
inline bool grlex_less(const Monomial& a, const Monomial& b) {
  const int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return a.e > b.e;
}

struct MonomialIdeal {
  int n = 0;
  std::vector<Monomial> gens;  // minimal generators, grlex-sorted

  bool is_zero() const { return gens.empty(); }

  bool operator==(const MonomialIdeal&) const = default;
};

// Discards generators divisible by another; deduplicates; sorts.
inline std::vector<Monomial> minimal_generators(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), grlex_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (auto& g : gens) {
    // only earlier monomials can divide g (a proper divisor has smaller
    // degree, hence smaller grlex position), and every divisor among them
    // is itself preceded by some kept divisor, so checking `out` suffices
    bool redundant = false;
    for (const auto& kept : out)
      if (divides(kept, g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(std::move(g));
  }
  return out;
}

// Canonical constructor: validates exponents, minimalizes, sorts.
// The empty generator list gives the zero ideal; the constant monomial is
// rejected (the unit ideal is outside the model).
inline MonomialIdeal make_ideal(int n, std::vector<Monomial> gens) {
  if (n < 0 || n > kMaxVertices)
    throw std::invalid_argument("make_ideal: variable count out of range [0, 63]");
  for (const auto& g : gens) {
    if (static_cast<int>(g.e.size()) != n)
      throw std::invalid_argument("make_ideal: exponent vector length mismatch");
    for (int v : g.e)
      if (v < 0) throw std::invalid_argument("make_ideal: negative exponent");
    if (g.degree() == 0)
      throw std::invalid_argument("make_ideal: constant generator rejected (unit ideal)");
  }
  return MonomialIdeal{n, minimal_generators(std::move(gens))};
}

inline bool ideal_contains(const MonomialIdeal& i, const Monomial& m) {
  for (const auto& g : i.gens)
    if (divides(g, m)) return true;
  return false;
}

inline bool is_squarefree(const MonomialIdeal& i) {
  for (const auto& g : i.gens)
    for (int v : g.e)
      if (v > 1) return false;
  return true;
}

// ---------------------------------------------------------------------------
// constructions

inline MonomialIdeal edge_ideal(const Graph& g) {
  std::vector<Monomial> gens;
  for (const auto& [u, v] : g.edges) {
    Monomial m{std::vector<int>(static_cast<std::size_t>(g.n), 0)};
    m.e[static_cast<std::size_t>(u)] = 1;
    m.e[static_cast<std::size_t>(v)] = 1;
    gens.push_back(std::move(m));
  }
  return make_ideal(g.n, std::move(gens));
}

// Prime generated by the variables indexed by a vertex set.
inline MonomialIdeal variable_prime(const std::vector<int>& verts, int n) {
  std::vector<Monomial> gens;
  for (int v : verts) {
    Monomial m{std::vector<int>(static_cast<std::size_t>(n), 0)};
    m.e.at(static_cast<std::size_t>(v)) = 1;
    gens.push_back(std::move(m));
  }
  return make_ideal(n, std::move(gens));
}

inline MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.n != b.n) throw std::invalid_argument("ideal_sum: variable count mismatch");
  std::vector<Monomial> gens = a.gens;
  gens.insert(gens.end(), b.gens.begin(), b.gens.end());
  return make_ideal(a.n, std::move(gens));
}

inline MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.n != b.n) throw std::invalid_argument("ideal_product: variable count mismatch");
  std::vector<Monomial> gens;
  for (const auto& x : a.gens)
    for (const auto& y : b.gens) gens.push_back(mon_product(x, y));
  return make_ideal(a.n, std::move(gens));
}

inline MonomialIdeal ideal_power(const MonomialIdeal& a, int s) {
  if (s < 1) throw std::invalid_argument("ideal_power: need s >= 1");
  MonomialIdeal acc = a;
  for (int k = 1; k < s; ++k) acc = ideal_product(acc, a);
  return acc;
}

// Intersection of monomial ideals: pairwise lcms of generators, minimalized.
inline MonomialIdeal ideal_intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.n != b.n) throw std::invalid_argument("ideal_intersect: variable count mismatch");
  std::vector<Monomial> gens;
  for (const auto& x : a.gens)
    for (const auto& y : b.gens) gens.push_back(mon_lcm(x, y));
  return make_ideal(a.n, std::move(gens));
}

// s-th power of the prime of a vertex cover C: all degree-s monomials in the
// variables of C.
inline MonomialIdeal cover_prime_power(const std::vector<int>& cover, int s, int n) {
  if (s < 1) throw std::invalid_argument("cover_prime_power: need s >= 1");
  if (cover.empty())
    throw std::invalid_argument("cover_prime_power: empty cover gives the unit ideal");
  std::vector<Monomial> gens;
  Monomial cur{std::vector<int>(static_cast<std::size_t>(n), 0)};
  std::function<void(std::size_t, int)> rec = [&](std::size_t k, int left) {
    if (k + 1 == cover.size()) {
      cur.e.at(static_cast<std::size_t>(cover[k])) = left;
      gens.push_back(cur);
      cur.e.at(static_cast<std::size_t>(cover[k])) = 0;
      return;
    }
    for (int t = 0; t <= left; ++t) {
      cur.e.at(static_cast<std::size_t>(cover[k])) = t;
      rec(k + 1, left - t);
    }
    cur.e.at(static_cast<std::size_t>(cover[k])) = 0;
  };
  rec(0, s);
  return make_ideal(n, std::move(gens));
}

// ---------------------------------------------------------------------------
// transversals (for symbolic powers of arbitrary squarefree ideals)

// Minimal transversals of a set system: vertex sets meeting every member,
// minimal under inclusion.  Exhaustive over 2^n, intended for small n.
inline std::vector<std::vector<int>> minimal_transversals(
    const std::vector<std::vector<int>>& sets, int n) {
  if (n < 0 || n > 24)
    throw std::invalid_argument("minimal_transversals: ground set too large");
  std::vector<std::uint64_t> masks;
  for (const auto& s : sets) {
    std::uint64_t m = detail::verts_to_mask(s);
    if (m == 0) throw std::invalid_argument("minimal_transversals: empty set has no transversal");
    masks.push_back(m);
  }
  std::vector<std::vector<int>> out;
  for (std::uint64_t t = 0; t < (std::uint64_t{1} << n); ++t) {
    bool hits_all = true;
    for (std::uint64_t m : masks)
      if ((m & t) == 0) {
        hits_all = false;
        break;
      }
    if (!hits_all) continue;
    // minimal iff every chosen vertex is the unique hit of some member
    bool minimal = true;
    for (std::uint64_t vm = t; vm != 0 && minimal; vm &= vm - 1) {
      const std::uint64_t without = t ^ (vm & -vm);
      bool private_hit = false;
      for (std::uint64_t m : masks)
        if ((m & without) == 0) {
          private_hit = true;
          break;
        }
      minimal = private_hit;
    }
    if (minimal) out.push_back(detail::mask_to_verts(t));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// symbolic powers

namespace detail {

// Intersects prime powers over the given covers, smallest covers first.
inline MonomialIdeal intersect_cover_powers(std::vector<std::vector<int>> covers, int s, int n) {
  std::stable_sort(covers.begin(), covers.end(),
                   [](const std::vector<int>& a, const std::vector<int>& b) {
                     return a.size() != b.size() ? a.size() < b.size() : a < b;
                   });
  MonomialIdeal acc = cover_prime_power(covers.front(), s, n);
  for (std::size_t k = 1; k < covers.size(); ++k)
    acc = ideal_intersect(acc, cover_prime_power(covers[k], s, n));
  return acc;
}

}  // namespace detail

// Independent route: enumerate exponent vectors in {0..s}^n (every minimal
// generator of the intersection has entries <= s), keep those lying in every
// cover prime power, and extract the minimal ones in graded order.
inline MonomialIdeal symbolic_power_by_enumeration(const Graph& g, int s) {
  if (!g.has_edge())
    throw std::invalid_argument("symbolic_power_by_enumeration: graph has no edge");
  if (s < 1) throw std::invalid_argument("symbolic_power_by_enumeration: need s >= 1");
  double size = 1;
  for (int i = 0; i < g.n; ++i) size *= s + 1;
  if (size > 1048576.0)
    throw std::invalid_argument("symbolic_power_by_enumeration: search space too large");
  const auto cs = minimal_vertex_covers(g);
  std::vector<Monomial> candidates;
  Monomial cur{std::vector<int>(static_cast<std::size_t>(g.n), 0)};
  std::function<void(int)> rec = [&](int var) {
    if (var == g.n) {
      for (const auto& c : cs.covers) {
        int deg_on_cover = 0;
        for (int v : c) deg_on_cover += cur.e[static_cast<std::size_t>(v)];
        if (deg_on_cover < s) return;
      }
      candidates.push_back(cur);
      return;
    }
    for (int t = 0; t <= s; ++t) {
      cur.e[static_cast<std::size_t>(var)] = t;
      rec(var + 1);
    }
    cur.e[static_cast<std::size_t>(var)] = 0;
  };
  rec(0);
  std::sort(candidates.begin(), candidates.end(), grlex_less);
  std::vector<Monomial> mins;
  for (auto& m : candidates) {
    bool covered = false;
    for (const auto& g2 : mins)
      if (divides(g2, m)) {
        covered = true;
        break;
      }
    if (!covered) mins.push_back(std::move(m));
  }
  return make_ideal(g.n, std::move(mins));
}

// s-th symbolic power of an edge ideal: the intersection of the s-th powers
// of its minimal-cover primes.  On small instances the result is re-derived
// by direct enumeration and the two routes are required to agree.
inline MonomialIdeal symbolic_power(const Graph& g, int s) {
  if (!g.has_edge()) throw std::invalid_argument("symbolic_power: graph has no edge");
  if (s < 1) throw std::invalid_argument("symbolic_power: need s >= 1");
  const auto cs = minimal_vertex_covers(g);
  MonomialIdeal result = detail::intersect_cover_powers(cs.covers, s, g.n);
  double size = 1;
  for (int i = 0; i < g.n; ++i) size *= s + 1;
  if (size <= 262144.0) {
    if (!(result == symbolic_power_by_enumeration(g, s)))
      throw std::logic_error("symbolic_power: intersection and enumeration routes disagree");
  }
  return result;
}

// s-th symbolic power of an arbitrary squarefree monomial ideal, via the
// minimal transversals of its generator supports.
inline MonomialIdeal symbolic_power_squarefree(const MonomialIdeal& i, int s) {
  if (i.is_zero()) throw std::invalid_argument("symbolic_power_squarefree: zero ideal");
  if (!is_squarefree(i))
    throw std::invalid_argument("symbolic_power_squarefree: ideal must be squarefree");
  if (s < 1) throw std::invalid_argument("symbolic_power_squarefree: need s >= 1");
  std::vector<std::vector<int>> supports;
  for (const auto& g : i.gens) {
    std::vector<int> s2;
    for (std::size_t v = 0; v < g.e.size(); ++v)
      if (g.e[v] > 0) s2.push_back(static_cast<int>(v));
    supports.push_back(std::move(s2));
  }
  return detail::intersect_cover_powers(minimal_transversals(supports, i.n), s, i.n);
}

// ---------------------------------------------------------------------------
// printing (for reports and error messages)

inline std::string monomial_to_string(const Monomial& m) {
  if (m.degree() == 0) return "1";
  std::string out;
  for (std::size_t v = 0; v < m.e.size(); ++v) {
    if (m.e[v] == 0) continue;
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(v);
    if (m.e[v] > 1) out += "^" + std::to_string(m.e[v]);
  }
  return out;
}

}  // namespace edgealg
