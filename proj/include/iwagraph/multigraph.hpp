#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "iwagraph/numeric.hpp"

namespace iwagraph {

/// Finite multigraph with parallel edges and loops, encoded as a list of
/// undirected edges. Each undirected edge k spawns the directed pair
/// (2k, 2k+1) with 2k carrying the listed orientation; the inversion
/// involution is 2k <-> 2k+1, fixed-point free by construction. The section
/// S is the list of even directed ids in listed order.
class Multigraph {
 public:
  Multigraph(int vertex_count, std::vector<std::pair<int, int>> undirected_edges);

  int vertex_count() const { return vertex_count_; }
  int undirected_edge_count() const { return static_cast<int>(edges_.size()); }
  int directed_edge_count() const { return 2 * undirected_edge_count(); }

  int origin(int directed_id) const;
  int terminus(int directed_id) const;
  int inverse(int directed_id) const { return directed_id ^ 1; }

  // Undirected endpoints of edge k, in listed (section) orientation.
  std::pair<int, int> endpoints(int undirected_id) const { return edges_[undirected_id]; }
  bool is_loop(int undirected_id) const;

  int valency(int vertex) const;  // number of directed edges with this origin

  bool is_connected() const;
  int euler_characteristic() const;  // |V| - |E| (undirected)

  std::vector<std::vector<Int>> laplacian() const;    // Q = D - A
  std::vector<std::vector<Int>> adjacency() const;    // loops count twice on the diagonal
  Int spanning_tree_count() const;                    // Matrix-Tree; DisconnectedGraph if not connected

 private:
  int vertex_count_;
  std::vector<std::pair<int, int>> edges_;
};

/// Spanning tree as a set of undirected edge ids.
struct SpanningTree {
  std::vector<int> edge_ids;
  std::vector<bool> in_tree;  // indexed by undirected edge id
};

// Lexicographically-first BFS spanning tree from vertex 0, restricted to edges
// accepted by `usable` (all edges when empty). Empty optional when the usable
// edges do not span.
std::optional<SpanningTree> bfs_spanning_tree(const Multigraph& g,
                                              const std::vector<bool>& usable = {});

}  // namespace iwagraph
