#pragma once

#include <vector>

#include "iwagraph/char_series.hpp"
#include "iwagraph/ffq.hpp"
#include "iwagraph/multigraph.hpp"

namespace iwagraph {

/// Two-vertex multigraph X_{p,q,r}^{e,g}: p loops at v1, q loops at v2,
/// r = e + g joining edges of which e are oriented v1->v2 and g are v2->v1
/// in the section. Voltage layout (a_1..a_p, b_1..b_e, c_1..c_g, d_1..d_q),
/// normalized by b_1 = 0 (the spanning tree is the first b-edge).
struct TwoVertexShape {
  long p = 0, q = 0, r = 1, e = 1, g = 0;

  long t() const { return p + q + r - 1; }
  void validate() const;
};

struct TwoVertexGraph {
  Multigraph graph;
  SpanningTree tree;  // the first v1->v2 edge
};

TwoVertexGraph build_two_vertex(const TwoVertexShape& shape);

// beta_2 = (sum_{i>=2} b_i - sum c_j)^2 - r*(sum a^2 + sum_{i>=2} b^2 + sum c^2 + sum d^2).
// Requires b_1 = 0; evaluates regardless of admissibility.
Int beta2_two_vertex(const TwoVertexShape& shape, const std::vector<Int>& alpha);

// The associated quadratic form Q_{p,e,g,q} over F_ell in t variables.
QuadraticFormFl qform_two_vertex(const TwoVertexShape& shape, long ell);

// eta((-1)^(t/2) * disc) used by the even-t nondegenerate branch.
int two_vertex_eta(const TwoVertexShape& shape, long ell);

// Exact Prob(mu=0, lambda=1) over admissible voltage classes.
Rat prob_two_vertex_mu0_lambda1(const TwoVertexShape& shape, long ell);

}  // namespace iwagraph
