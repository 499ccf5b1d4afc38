#pragma once

#include <map>
#include <utility>
#include <vector>

#include "iwagraph/char_series.hpp"
#include "iwagraph/invariants.hpp"
#include "iwagraph/multigraph.hpp"

namespace iwagraph {

// K_u with the canonical section e_{i,j} (i < j), edges in lexicographic
// order (1-based pairs (1,2),(1,3),...).
Multigraph build_complete(int u);

// Section index of edge {i,j} in the canonical order (0-based i < j).
int complete_edge_index(int u, int i, int j);

// Voltage vectors in canonical edge order.
std::vector<Int> single_voltage_values(int u, const Int& a);  // a_{1,2} = a
std::vector<Int> star_voltage_values(int u, const Int& a);    // a_{1,j} = a, 2 <= j <= u-1

// mu = ord_ell((u-2) u^(u-3)), lambda = 1 (closed forms; require ell coprime
// to a and u >= 3).
MuLambda single_voltage_invariants(const Int& u, const Int& a, const Int& ell);
MuLambda star_voltage_invariants(const Int& u, const Int& a, const Int& ell);

// Closed-form det M(1+T) as Laurent polynomials in x, for cross-checks.
LaurentPoly single_voltage_closed_det(int u, long a);
LaurentPoly star_voltage_closed_det(int u, long a);

/// Linked pairs of K_u section edges: unordered pairs of distinct edges
/// sharing exactly one vertex. Pi holds the "chain" pairs (shared vertex is
/// the max of one edge and the min of the other), Pi_c the rest.
struct LinkedPairSets {
  int u;
  std::vector<std::pair<int, int>> pi;    // section-index pairs
  std::vector<std::pair<int, int>> pi_c;
};

LinkedPairSets linked_pairs(int u);

struct Beta2Check {
  Int formula_value;  // -(u-2)u^(u-3) sum a^2 + 2u^(u-3)(sum_PiC - sum_Pi)
  Int exact_value;    // T^2 coefficient of det M(1+T)
  bool verified;      // formula_value == exact_value
  bool conjectural;   // u > 7: the formula is only suggested by computation
};

// a_matrix: upper-triangular values a_{i,j} (1-based, i<j) keyed by (i,j).
Beta2Check beta2_linked_pair(int u, const std::map<std::pair<int, int>, Int>& a_matrix);

enum class CompleteAssignment { single, star };

struct DensityResult {
  Rat empirical;
  Rat theoretical;
  Int matching;  // number of u in [3, x_max] with the requested invariants
  long x_max;
};

// Density of u <= x_max with (mu_u, lambda_u) = (mu0, lambda0), using the
// closed-form mu_u = ord_ell(u-2) + (u-3) ord_ell(u); lambda_u = 1 always.
DensityResult complete_density(const Int& ell, long mu0, long lambda0,
                               CompleteAssignment assignment, long x_max);

}  // namespace iwagraph
