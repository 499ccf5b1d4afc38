#include "iwagraph/multigraph.hpp"

#include <queue>

#include "iwagraph/errors.hpp"

namespace iwagraph {

Multigraph::Multigraph(int vertex_count, std::vector<std::pair<int, int>> undirected_edges)
    : vertex_count_(vertex_count), edges_(std::move(undirected_edges)) {
  if (vertex_count_ <= 0) fail(Errc::validation, "multigraph needs at least one vertex");
  for (const auto& [a, b] : edges_) {
    if (a < 0 || a >= vertex_count_ || b < 0 || b >= vertex_count_)
      fail(Errc::validation, "edge endpoint out of range");
  }
}

int Multigraph::origin(int directed_id) const {
  const auto& e = edges_[directed_id >> 1];
  return (directed_id & 1) ? e.second : e.first;
}

int Multigraph::terminus(int directed_id) const {
  const auto& e = edges_[directed_id >> 1];
  return (directed_id & 1) ? e.first : e.second;
}

bool Multigraph::is_loop(int undirected_id) const {
  return edges_[undirected_id].first == edges_[undirected_id].second;
}

int Multigraph::valency(int vertex) const {
  int v = 0;
  for (const auto& [a, b] : edges_) {
    if (a == vertex) ++v;
    if (b == vertex) ++v;
  }
  return v;
}

bool Multigraph::is_connected() const {
  std::vector<bool> seen(vertex_count_, false);
  std::queue<int> q;
  seen[0] = true;
  q.push(0);
  std::vector<std::vector<int>> adj(vertex_count_);
  for (const auto& [a, b] : edges_) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  int reached = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : adj[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        q.push(w);
      }
    }
  }
  return reached == vertex_count_;
}

int Multigraph::euler_characteristic() const { return vertex_count_ - undirected_edge_count(); }

std::vector<std::vector<Int>> Multigraph::adjacency() const {
  std::vector<std::vector<Int>> a(vertex_count_, std::vector<Int>(vertex_count_, 0));
  for (const auto& [u, v] : edges_) {
    if (u == v) {
      a[u][u] += 2;
    } else {
      a[u][v] += 1;
      a[v][u] += 1;
    }
  }
  return a;
}

std::vector<std::vector<Int>> Multigraph::laplacian() const {
  auto q = adjacency();
  for (int i = 0; i < vertex_count_; ++i) {
    for (auto& entry : q[i]) entry = -entry;
    q[i][i] += valency(i);
  }
  return q;
}

Int Multigraph::spanning_tree_count() const {
  if (!is_connected()) fail(Errc::disconnected_graph, "spanning_tree_count needs a connected graph");
  if (vertex_count_ == 1) return 1;
  auto q = laplacian();
  std::vector<std::vector<Int>> minor(vertex_count_ - 1);
  for (int i = 1; i < vertex_count_; ++i)
    minor[i - 1].assign(q[i].begin() + 1, q[i].end());
  return det_bareiss(minor);
}

std::optional<SpanningTree> bfs_spanning_tree(const Multigraph& g, const std::vector<bool>& usable) {
  const int u = g.vertex_count();
  SpanningTree tree;
  tree.in_tree.assign(g.undirected_edge_count(), false);
  std::vector<bool> seen(u, false);
  std::queue<int> q;
  seen[0] = true;
  q.push(0);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int k = 0; k < g.undirected_edge_count(); ++k) {
      if (!usable.empty() && !usable[k]) continue;
      auto [a, b] = g.endpoints(k);
      int other;
      if (a == v)
        other = b;
      else if (b == v)
        other = a;
      else
        continue;
      if (seen[other]) continue;
      seen[other] = true;
      tree.edge_ids.push_back(k);
      tree.in_tree[k] = true;
      q.push(other);
    }
  }
  for (bool s : seen)
    if (!s) return std::nullopt;
  return tree;
}

}  // namespace iwagraph
