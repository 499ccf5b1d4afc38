#include "iwagraph/tower.hpp"

#include "iwagraph/errors.hpp"

namespace iwagraph {

DerivedGraph derive(const Multigraph& g, const VoltageAssignment& v, long level,
                    long resource_cap) {
  if (level < 0) fail(Errc::validation, "tower level must be >= 0");
  if (static_cast<int>(v.values.size()) != g.undirected_edge_count())
    fail(Errc::validation, "voltage vector length must equal the undirected edge count");
  Int cells = pow_int(v.ell, static_cast<unsigned long>(level));
  Int vertices = cells * g.vertex_count();
  if (vertices > resource_cap)
    fail(Errc::resource_cap, "derived graph would have " + vertices.get_str() +
                                 " vertices (cap " + std::to_string(resource_cap) + ")");
  const long n_cells = cells.get_si();
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(g.undirected_edge_count()) * n_cells);
  for (int k = 0; k < g.undirected_edge_count(); ++k) {
    auto [o, t] = g.endpoints(k);
    long r = padic_residue(v.values[k], v.ell, level).get_si();
    for (long s = 0; s < n_cells; ++s) {
      edges.emplace_back(static_cast<int>(o * n_cells + s),
                         static_cast<int>(t * n_cells + (s + r) % n_cells));
    }
  }
  return DerivedGraph{level, Multigraph(static_cast<int>(vertices.get_si()), std::move(edges))};
}

bool is_admissible(const Multigraph& g, const VoltageAssignment& v, const SpanningTree& tree) {
  if (!g.is_connected()) fail(Errc::disconnected_graph, "base graph must be connected");
  if (static_cast<int>(v.values.size()) != g.undirected_edge_count())
    fail(Errc::validation, "voltage vector length must equal the undirected edge count");
  for (int k : tree.edge_ids) {
    if (v.values[k].rep != 0)
      fail(Errc::voltage_nonzero_on_tree,
           "voltage must vanish on the spanning tree (edge " + std::to_string(k + 1) + ")");
  }
  for (int k = 0; k < g.undirected_edge_count(); ++k) {
    if (!tree.in_tree.empty() && tree.in_tree[k]) continue;
    if (padic_is_unit(v.values[k], v.ell)) return true;
  }
  return false;
}

std::vector<KappaLevel> kappa_sequence(const Multigraph& g, const VoltageAssignment& v,
                                       long n_max, long resource_cap) {
  std::vector<KappaLevel> out;
  out.reserve(static_cast<std::size_t>(n_max) + 1);
  for (long n = 0; n <= n_max; ++n) {
    DerivedGraph d = derive(g, v, n, resource_cap);
    Int kappa = d.graph.spanning_tree_count();
    out.push_back(KappaLevel{n, kappa, val_ell(kappa, v.ell)});
  }
  return out;
}

}  // namespace iwagraph
