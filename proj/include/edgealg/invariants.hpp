#pragma once

// One-call invariant bundle for an edge-ideal quotient S/I(G): regularity,
// projective dimension, depth, Krull dimension, height, multiplicity,
// Hilbert series, induced matching number, and derived flags.
//
// Homological data is computed over a primary field (default Q) and, when
// requested, shadowed over F_2; `field_agreement` records whether regularity
// and projective dimension coincide across the two fields.

#include <optional>
#include <stdexcept>
#include <vector>

#include "edgealg/betti.hpp"
#include "edgealg/field.hpp"
#include "edgealg/graph.hpp"
#include "edgealg/hilbert.hpp"

namespace edgealg {

struct InvariantReport {
  FieldTag field;                     // primary coefficient field
  int reg = 0;                        // regularity of S/I
  int pd = 0;                         // projective dimension of S/I
  int depth = 0;
  int dim = 0;                        // Krull dimension of S/I
  int height = 0;                     // height of I
  long long multiplicity = 0;
  HilbertSeries h;
  int nu = 0;                         // induced matching number of G
  bool cohen_macaulay = false;        // depth == dim
  bool linear_resolution = false;
  std::optional<bool> field_agreement;  // set when the F_2 shadow ran
};

inline InvariantReport invariant_report(const Graph& g,
                                        const FieldTag& field = FieldTag::rationals(),
                                        bool shadow_f2 = true,
                                        const CostGate& gate = default_cost_gate()) {
  if (!g.has_edge())
    throw std::invalid_argument("invariant_report: graph has no edge (unit/zero cases excluded)");
  std::vector<FieldTag> fields{field};
  const bool shadow = shadow_f2 && !(field == FieldTag::prime(2));
  if (shadow) fields.push_back(FieldTag::prime(2));
  const auto tables = detail::betti_by_subsets_multi(g, fields, gate);
  const auto& t = tables.front();

  InvariantReport r;
  r.field = field;
  r.reg = regularity(t, RegView::quotient);
  r.pd = projective_dimension(t);
  r.depth = depth_from_table(t);
  const auto covers = minimal_vertex_covers(g);
  r.height = covers.height;
  r.dim = g.n - covers.height;
  r.multiplicity = covers.min_count;
  r.h = hilbert_series(g);
  r.nu = induced_matching_number(g);
  r.cohen_macaulay = r.depth == r.dim;
  r.linear_resolution = has_linear_resolution(t);
  if (shadow) {
    const auto& t2 = tables.back();
    r.field_agreement = regularity(t2, RegView::quotient) == r.reg &&
                        projective_dimension(t2) == r.pd;
  } else if (field == FieldTag::prime(2) && shadow_f2) {
    r.field_agreement = true;  // shadow field coincides with the primary field
  }
  return r;
}

}  // namespace edgealg
