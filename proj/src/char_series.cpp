#include "iwagraph/char_series.hpp"

#include <algorithm>

#include "iwagraph/errors.hpp"

namespace iwagraph {

VoltageAssignment VoltageAssignment::exact(Int ell, const std::vector<Int>& vals) {
  VoltageAssignment v;
  v.ell = std::move(ell);
  v.values.reserve(vals.size());
  for (const auto& a : vals) v.values.emplace_back(a);
  return v;
}

bool VoltageAssignment::all_exact() const {
  return std::all_of(values.begin(), values.end(), [](const PadicInt& p) { return p.exact(); });
}

namespace {

void check_sizes(const Multigraph& g, const VoltageAssignment& v) {
  if (static_cast<int>(v.values.size()) != g.undirected_edge_count())
    fail(Errc::validation, "voltage vector length must equal the undirected edge count");
  if (!is_odd_prime(v.ell)) fail(Errc::validation, "ell must be an odd prime >= 3");
}

long to_long(const Int& a) {
  if (!a.fits_slong_p()) fail(Errc::resource_cap, "voltage exponent too large");
  return a.get_si();
}

}  // namespace

std::vector<std::vector<LaurentPoly>> voltage_matrix(const Multigraph& g,
                                                     const VoltageAssignment& v) {
  check_sizes(g, v);
  if (!v.all_exact())
    fail(Errc::non_integer_voltage, "voltage_matrix needs exact integer voltages");
  const int u = g.vertex_count();
  std::vector<std::vector<LaurentPoly>> m(u, std::vector<LaurentPoly>(u));
  for (int i = 0; i < u; ++i) m[i][i] = LaurentPoly::constant(g.valency(i));
  for (int k = 0; k < g.undirected_edge_count(); ++k) {
    auto [o, t] = g.endpoints(k);
    long a = to_long(v.values[k].rep);
    m[o][t] = m[o][t] - LaurentPoly::monomial(1, a);
    m[t][o] = m[t][o] - LaurentPoly::monomial(1, -a);
  }
  return m;
}

CharSeries char_poly_exact(const Multigraph& g, const VoltageAssignment& v) {
  if (g.euler_characteristic() == 0)
    fail(Errc::zero_euler_characteristic, "chi(X) = 0: characteristic series undefined");
  auto m = voltage_matrix(g, v);
  LaurentPoly det = det_laurent(m);
  if (det.is_zero())
    fail(Errc::zero_series, "det M(x) is identically zero (inadmissible voltage?)");

  CharSeries r;
  r.laurent = det;
  long shift = std::max(0L, -det.min_exp());
  LaurentPoly poly = det.shifted(shift);
  TruncatedSeries s;
  s.ell = v.ell;
  s.coeffs = poly.expand_at_one_plus_T();
  s.degree_cap = static_cast<long>(s.coeffs.size()) - 1;
  s.unit_shift = shift;
  r.expansion = std::move(s);
  return r;
}

TruncatedSeries binomial_series(const PadicInt& a, long degree_cap, const Int& ell) {
  TruncatedSeries s = one_plus_T_power(ell, a.rep, degree_cap);
  if (!a.exact()) {
    long loss = 0;
    Int f = factorial(static_cast<unsigned long>(degree_cap));
    loss = val_ell(f, ell);
    long p = *a.precision - loss;
    if (p <= 0)
      fail(Errc::precision_exhausted,
           "binomial series loses all precision at degree " + std::to_string(degree_cap));
    s.precision = p;
    s.reduce();
  }
  return s;
}

TruncatedSeries char_series_truncated(const Multigraph& g, const VoltageAssignment& v,
                                      long degree_cap, std::optional<long> precision_cap) {
  check_sizes(g, v);
  if (precision_cap && *precision_cap <= 0)
    fail(Errc::precision_exhausted, "requested precision must be positive");
  if (g.euler_characteristic() == 0)
    fail(Errc::zero_euler_characteristic, "chi(X) = 0: characteristic series undefined");
  const int u = g.vertex_count();
  std::vector<std::vector<TruncatedSeries>> m(
      u, std::vector<TruncatedSeries>(u, series_zero(v.ell, degree_cap)));
  for (int i = 0; i < u; ++i) m[i][i] = series_constant(v.ell, g.valency(i), degree_cap);
  for (int k = 0; k < g.undirected_edge_count(); ++k) {
    auto [o, t] = g.endpoints(k);
    const PadicInt& a = v.values[k];
    PadicInt neg(-a.rep);
    neg.precision = a.precision;
    TruncatedSeries fwd = binomial_series(a, degree_cap, v.ell);
    TruncatedSeries bwd = binomial_series(neg, degree_cap, v.ell);
    m[o][t] = m[o][t].add(fwd.scaled(-1));
    m[t][o] = m[t][o].add(bwd.scaled(-1));
  }
  if (u > 16) fail(Errc::resource_cap, "truncated determinant limited to 16x16");
  // subset-DP cofactor expansion, as for the Laurent path
  std::vector<TruncatedSeries> dp(1u << u);
  dp[0] = series_constant(v.ell, 1, degree_cap);
  for (std::uint32_t set = 1; set < (1u << u); ++set) {
    const int row = __builtin_popcount(set) - 1;
    TruncatedSeries acc = series_zero(v.ell, degree_cap);
    int parity = 0;
    for (std::uint32_t bits = set; bits; bits &= bits - 1) {
      const int col = __builtin_ctz(bits);
      TruncatedSeries term = m[row][col].mul(dp[set & ~(1u << col)]);
      acc = acc.add(((row + parity) % 2 == 0) ? term : term.scaled(-1));
      ++parity;
    }
    dp[set] = std::move(acc);
  }
  TruncatedSeries det = dp[(1u << u) - 1];
  if (precision_cap && (!det.precision || *det.precision > *precision_cap)) {
    det.precision = *precision_cap;
    det.reduce();
  }
  return det;
}

long default_exact_degree(const VoltageAssignment& v) {
  Int sum = 0;
  for (const auto& p : v.values) sum += abs(p.rep);
  Int d = 2 * sum + 2;
  long dl = d.fits_slong_p() ? d.get_si() : 1L << 30;
  return std::max(dl, 8L);
}

}  // namespace iwagraph
