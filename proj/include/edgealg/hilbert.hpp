#pragma once

// Hilbert series of edge-ideal quotients.  For a squarefree quotient the
// series is read off the f-vector of the independence complex:
//
//   H(t) = sum_k f_{k-1} t^k / (1-t)^k
//        = h(t) / (1-t)^d   with   h(t) = sum_k f_{k-1} t^k (1-t)^{d-k},
//
// d the Krull dimension.  The numerator h is stored with trailing zeros
// trimmed; h(0) = 1 always, and h(1) equals the multiplicity.

#include <stdexcept>
#include <string>
#include <vector>

#include "edgealg/graph.hpp"
#include "edgealg/simplicial_complex.hpp"

namespace edgealg {

using Poly = std::vector<long long>;  // coefficient list, index = power of t

inline void poly_trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Poly poly_add(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t k = 0; k < a.size(); ++k) out[k] += a[k];
  for (std::size_t k = 0; k < b.size(); ++k) out[k] += b[k];
  poly_trim(out);
  return out;
}

inline Poly poly_scale(Poly a, long long c) {
  for (auto& v : a) v *= c;
  poly_trim(a);
  return a;
}

inline Poly poly_sub(const Poly& a, const Poly& b) { return poly_add(a, poly_scale(b, -1)); }

inline Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  poly_trim(out);
  return out;
}

// (1 - t)^k with exact binomial coefficients
inline Poly one_minus_t_pow(int k) {
  if (k < 0) throw std::invalid_argument("one_minus_t_pow: need k >= 0");
  Poly out{1};
  for (int step = 0; step < k; ++step) out = poly_mul(out, Poly{1, -1});
  return out;
}

inline long long poly_eval_one(const Poly& p) {
  long long s = 0;
  for (long long v : p) s += v;
  return s;
}

inline std::string poly_to_string(const Poly& p) {
  std::string out = "[";
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (k > 0) out += ", ";
    out += std::to_string(p[k]);
  }
  return out + "]";
}

// Hilbert series numerator/denominator pair h(t) / (1-t)^d.
struct HilbertSeries {
  Poly h;
  int d = 0;

  long long multiplicity() const { return poly_eval_one(h); }
  int degree() const { return static_cast<int>(h.size()) - 1; }

  bool operator==(const HilbertSeries&) const = default;
};

inline HilbertSeries hilbert_series(const Graph& g) {
  if (!g.has_edge()) throw std::invalid_argument("hilbert_series: graph has no edge");
  const auto f = f_vector(independence_complex(g));
  const int d = static_cast<int>(f.size()) - 1;  // largest independent set
  Poly h;
  for (int k = 0; k <= d; ++k) {
    Poly term = poly_scale(one_minus_t_pow(d - k), f[static_cast<std::size_t>(k)]);
    term.insert(term.begin(), static_cast<std::size_t>(k), 0);  // multiply by t^k
    h = poly_add(h, term);
  }
  poly_trim(h);
  if (h.empty() || h.front() != 1)
    throw std::logic_error("hilbert_series: numerator must have constant term 1");
  return HilbertSeries{std::move(h), d};
}

}  // namespace edgealg
