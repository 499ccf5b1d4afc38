#include "iwagraph/two_vertex.hpp"

#include "iwagraph/errors.hpp"

namespace iwagraph {

void TwoVertexShape::validate() const {
  if (p < 0 || q < 0) fail(Errc::validation, "loop counts must be >= 0");
  if (r < 1) fail(Errc::validation, "need at least one joining edge (r >= 1)");
  if (e < 1) fail(Errc::validation, "the section must orient at least one edge v1->v2 (e >= 1)");
  if (e + g != r) fail(Errc::validation, "e + g must equal r");
}

TwoVertexGraph build_two_vertex(const TwoVertexShape& shape) {
  shape.validate();
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(shape.p + shape.r + shape.q));
  for (long i = 0; i < shape.p; ++i) edges.emplace_back(0, 0);
  for (long i = 0; i < shape.e; ++i) edges.emplace_back(0, 1);
  for (long i = 0; i < shape.g; ++i) edges.emplace_back(1, 0);
  for (long i = 0; i < shape.q; ++i) edges.emplace_back(1, 1);
  Multigraph g(2, std::move(edges));
  SpanningTree tree;
  tree.in_tree.assign(g.undirected_edge_count(), false);
  int first_b = static_cast<int>(shape.p);
  tree.edge_ids.push_back(first_b);
  tree.in_tree[first_b] = true;
  return TwoVertexGraph{std::move(g), std::move(tree)};
}

Int beta2_two_vertex(const TwoVertexShape& shape, const std::vector<Int>& alpha) {
  shape.validate();
  if (static_cast<long>(alpha.size()) != shape.p + shape.r + shape.q)
    fail(Errc::validation, "voltage vector length must be p + r + q");
  if (alpha[static_cast<std::size_t>(shape.p)] != 0)
    fail(Errc::validation, "b_1 must be 0 (voltage vanishes on the spanning tree)");
  Int linear = 0, squares = 0;
  for (long i = 0; i < shape.p; ++i) squares += alpha[i] * alpha[i];
  for (long i = 1; i < shape.e; ++i) {
    const Int& b = alpha[shape.p + i];
    linear += b;
    squares += b * b;
  }
  for (long j = 0; j < shape.g; ++j) {
    const Int& c = alpha[shape.p + shape.e + j];
    linear -= c;
    squares += c * c;
  }
  for (long k = 0; k < shape.q; ++k) {
    const Int& d = alpha[shape.p + shape.r + k];
    squares += d * d;
  }
  return linear * linear - shape.r * squares;
}

QuadraticFormFl qform_two_vertex(const TwoVertexShape& shape, long ell) {
  shape.validate();
  const long t = shape.t();
  if (t < 1) fail(Errc::validation, "quadratic form needs t >= 1");
  std::vector<long> c(static_cast<std::size_t>(t), 0);
  for (long i = 0; i < shape.e - 1; ++i) c[static_cast<std::size_t>(shape.p + i)] = 1;
  for (long j = 0; j < shape.g; ++j) c[static_cast<std::size_t>(shape.p + shape.e - 1 + j)] = -1;
  std::vector<std::vector<long>> m(static_cast<std::size_t>(t),
                                   std::vector<long>(static_cast<std::size_t>(t), 0));
  for (long i = 0; i < t; ++i)
    for (long j = 0; j < t; ++j) {
      long v = c[i] * c[j] - (i == j ? shape.r : 0);
      m[i][j] = v;
    }
  return QuadraticFormFl::from_matrix(ell, std::move(m));
}

int two_vertex_eta(const TwoVertexShape& shape, long ell) {
  Diagonalization d = diagonalize(qform_two_vertex(shape, ell));
  const long t = shape.t();
  if (t % 2 != 0 || d.rank != t) return 0;
  int sign = quadratic_character(Int((t / 2) % 2 == 0 ? 1 : -1), Int(ell));
  return sign * d.eta_disc;
}

Rat prob_two_vertex_mu0_lambda1(const TwoVertexShape& shape, long ell) {
  shape.validate();
  if (!is_odd_prime(Int(ell))) fail(Errc::validation, "ell must be an odd prime");
  const long t = shape.t();
  if (t < 1) fail(Errc::validation, "probability needs t >= 1");
  const Int L(ell);
  Int denom = pow_int(L, static_cast<unsigned long>(t)) - 1;
  Int g_count;
  if (shape.r % ell == 0 || t % 2 == 1) {
    g_count = pow_int(L, static_cast<unsigned long>(t - 1)) - 1;
  } else {
    int eta = two_vertex_eta(shape, ell);
    g_count = pow_int(L, static_cast<unsigned long>(t - 1)) +
              eta * (L - 1) * pow_int(L, static_cast<unsigned long>(t / 2 - 1)) - 1;
  }
  Rat frac(g_count, denom);
  frac.canonicalize();
  return Rat(1) - frac;
}

}  // namespace iwagraph
