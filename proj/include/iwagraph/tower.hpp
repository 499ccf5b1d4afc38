#pragma once

#include <vector>

#include "iwagraph/char_series.hpp"
#include "iwagraph/multigraph.hpp"

namespace iwagraph {

inline constexpr long kDefaultResourceCap = 1200;  // derived-graph vertex limit

/// Derived cover X(Z/ell^n, S, alpha_/n). Vertex (v, a) has index v*ell^n + a;
/// section edge k with residue r spawns ell^n undirected edges
/// (o, s) -> (t, s + r mod ell^n) in lexicographic (k, s) order.
struct DerivedGraph {
  long level = 0;
  Multigraph graph;
};

DerivedGraph derive(const Multigraph& g, const VoltageAssignment& v, long level,
                    long resource_cap = kDefaultResourceCap);

// Theorem-backed admissibility: voltages must vanish on the tree's section
// (VoltageNonzeroOnTree otherwise); true iff some off-tree value is a unit.
// DisconnectedGraph when the base graph is not connected.
bool is_admissible(const Multigraph& g, const VoltageAssignment& v, const SpanningTree& tree);

struct KappaLevel {
  long level;
  Int kappa;
  long ord_ell;
};

// kappa_n and ord_ell(kappa_n) for 0 <= n <= n_max via exact Matrix-Tree on
// each derived cover. ResourceCap when a level exceeds the vertex limit.
std::vector<KappaLevel> kappa_sequence(const Multigraph& g, const VoltageAssignment& v,
                                       long n_max, long resource_cap = kDefaultResourceCap);

}  // namespace iwagraph
