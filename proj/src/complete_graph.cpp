#include "iwagraph/complete_graph.hpp"

#include <algorithm>

#include "iwagraph/errors.hpp"

namespace iwagraph {

Multigraph build_complete(int u) {
  if (u < 2) fail(Errc::validation, "complete graph needs u >= 2");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(u) * (u - 1) / 2);
  for (int i = 0; i < u; ++i)
    for (int j = i + 1; j < u; ++j) edges.emplace_back(i, j);
  return Multigraph(u, std::move(edges));
}

int complete_edge_index(int u, int i, int j) {
  if (i >= j || i < 0 || j >= u) fail(Errc::validation, "edge index needs 0 <= i < j < u");
  // edges (0,1..u-1),(1,2..u-1),...
  return i * (2 * u - i - 1) / 2 + (j - i - 1);
}

std::vector<Int> single_voltage_values(int u, const Int& a) {
  std::vector<Int> vals(static_cast<std::size_t>(u) * (u - 1) / 2, Int(0));
  vals[static_cast<std::size_t>(complete_edge_index(u, 0, 1))] = a;
  return vals;
}

std::vector<Int> star_voltage_values(int u, const Int& a) {
  std::vector<Int> vals(static_cast<std::size_t>(u) * (u - 1) / 2, Int(0));
  for (int j = 1; j <= u - 2; ++j)
    vals[static_cast<std::size_t>(complete_edge_index(u, 0, j))] = a;
  return vals;
}

namespace {
MuLambda closed_form_mu(const Int& u, const Int& a, const Int& ell) {
  if (!is_odd_prime(ell)) fail(Errc::validation, "ell must be an odd prime");
  if (a % ell == 0) fail(Errc::validation, "requires ell coprime to a");
  if (u < 3) fail(Errc::validation, "closed form requires u >= 3");
  long mu = val_ell(u - 2, ell);
  long vu = val_ell(u, ell);
  if (vu > 0 && u > 3) {
    Int extra = (u - 3) * vu;
    if (!extra.fits_slong_p()) fail(Errc::resource_cap, "mu out of range");
    mu += extra.get_si();
  }
  return MuLambda{mu, 1, Certificate::exact, true};
}
}  // namespace

MuLambda single_voltage_invariants(const Int& u, const Int& a, const Int& ell) {
  return closed_form_mu(u, a, ell);
}

MuLambda star_voltage_invariants(const Int& u, const Int& a, const Int& ell) {
  return closed_form_mu(u, a, ell);
}

LaurentPoly single_voltage_closed_det(int u, long a) {
  // -(u-2)u^(u-3) (x^a - 1)^2 x^(-a)
  Int scale = -(Int(u) - 2) * pow_int(Int(u), static_cast<unsigned long>(u - 3));
  LaurentPoly base = LaurentPoly::monomial(1, a) - LaurentPoly::constant(1);
  return (base * base * LaurentPoly::monomial(1, -a)) * LaurentPoly::constant(scale);
}

LaurentPoly star_voltage_closed_det(int u, long a) {
  // (u-2)u^(u-3) (2 - x^a - x^(-a))
  Int scale = (Int(u) - 2) * pow_int(Int(u), static_cast<unsigned long>(u - 3));
  LaurentPoly body = LaurentPoly::constant(2) - LaurentPoly::monomial(1, a) -
                     LaurentPoly::monomial(1, -a);
  return body * LaurentPoly::constant(scale);
}

LinkedPairSets linked_pairs(int u) {
  LinkedPairSets sets;
  sets.u = u;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < u; ++i)
    for (int j = i + 1; j < u; ++j) edges.emplace_back(i, j);
  for (std::size_t s = 0; s < edges.size(); ++s) {
    for (std::size_t t = s + 1; t < edges.size(); ++t) {
      auto [i, j] = edges[s];
      auto [k, l] = edges[t];
      int shared = -1, count = 0;
      for (int v : {i, j})
        for (int w : {k, l})
          if (v == w) {
            shared = v;
            ++count;
          }
      if (count != 1) continue;
      bool chain = (shared == j && shared == k) || (shared == l && shared == i);
      auto pair = std::make_pair(static_cast<int>(s), static_cast<int>(t));
      (chain ? sets.pi : sets.pi_c).push_back(pair);
    }
  }
  return sets;
}

Beta2Check beta2_linked_pair(int u, const std::map<std::pair<int, int>, Int>& a_matrix) {
  if (u < 3) fail(Errc::validation, "beta2 check needs u >= 3");
  std::vector<Int> vals(static_cast<std::size_t>(u) * (u - 1) / 2, Int(0));
  for (const auto& [ij, a] : a_matrix) {
    auto [i, j] = ij;
    vals[static_cast<std::size_t>(complete_edge_index(u, i - 1, j - 1))] = a;
  }
  Int sum_sq = 0;
  for (const auto& a : vals) sum_sq += a * a;
  LinkedPairSets sets = linked_pairs(u);
  Int pi_sum = 0, pic_sum = 0;
  for (auto [s, t] : sets.pi) pi_sum += vals[static_cast<std::size_t>(s)] * vals[static_cast<std::size_t>(t)];
  for (auto [s, t] : sets.pi_c) pic_sum += vals[static_cast<std::size_t>(s)] * vals[static_cast<std::size_t>(t)];
  Int upow = pow_int(Int(u), static_cast<unsigned long>(u - 3));
  Beta2Check check;
  check.formula_value = -(Int(u) - 2) * upow * sum_sq + 2 * upow * (pic_sum - pi_sum);
  // beta_2 is plain polynomial algebra on det M(1+T): no Euler-characteristic
  // guard applies (K_3 has chi = 0 but a perfectly good determinant)
  LaurentPoly det =
      det_laurent(voltage_matrix(build_complete(u), VoltageAssignment::exact(Int(3), vals)));
  if (det.is_zero()) {
    check.exact_value = 0;
  } else {
    long shift = std::max(0L, -det.min_exp());
    TruncatedSeries s;
    s.ell = 3;
    s.coeffs = det.shifted(shift).expand_at_one_plus_T();
    s.degree_cap = static_cast<long>(s.coeffs.size()) - 1;
    s.unit_shift = shift;
    check.exact_value = s.prefix_of_target(2)[2];
  }
  check.verified = check.formula_value == check.exact_value;
  check.conjectural = u > 7;
  return check;
}

DensityResult complete_density(const Int& ell, long mu0, long lambda0,
                               CompleteAssignment assignment, long x_max) {
  (void)assignment;  // single and star share the same closed-form invariants
  if (!is_odd_prime(ell)) fail(Errc::validation, "ell must be an odd prime");
  if (x_max < 3) fail(Errc::validation, "x_max must be >= 3");
  DensityResult result;
  result.x_max = x_max;
  result.matching = 0;
  if (lambda0 != 1) {
    result.theoretical = Rat(0);
    result.empirical = Rat(0);
    return result;
  }
  // u = 2 has no admissible tower (no off-tree edge); count u in [3, x_max]
  long ell_l = ell.get_si();
  for (long u = 3; u <= x_max; ++u) {
    long mu = 0;
    long w = u - 2;
    while (w % ell_l == 0) {
      w /= ell_l;
      ++mu;
    }
    if (u % ell_l == 0 && u > 3) {
      long vu = 0;
      long y = u;
      while (y % ell_l == 0) {
        y /= ell_l;
        ++vu;
      }
      mu += (u - 3) * vu;
    }
    if (mu == mu0) ++result.matching;
  }
  result.empirical = Rat(result.matching, Int(x_max));
  result.empirical.canonicalize();
  if (mu0 == 0)
    result.theoretical = Rat(ell - 2, ell);
  else
    result.theoretical = Rat(ell - 1, pow_int(ell, static_cast<unsigned long>(mu0 + 1)));
  result.theoretical.canonicalize();
  return result;
}

}  // namespace iwagraph
