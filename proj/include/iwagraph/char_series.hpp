#pragma once

#include <vector>

#include "iwagraph/laurent.hpp"
#include "iwagraph/multigraph.hpp"
#include "iwagraph/padic.hpp"
#include "iwagraph/series.hpp"

namespace iwagraph {

/// Voltage assignment on the section S of a multigraph: one value per
/// undirected edge, aligned with the graph's edge order; the listed
/// orientation carries alpha(s), its inverse -alpha(s).
struct VoltageAssignment {
  Int ell;
  std::vector<PadicInt> values;

  static VoltageAssignment exact(Int ell, const std::vector<Int>& vals);
  bool all_exact() const;
};

/// Result of the exact characteristic-series computation.
/// laurent = det M(x); expansion = exact T-expansion of x^B det M(x) where
/// B (= expansion.unit_shift) clears negative exponents, so
/// f(T) = (1+T)^(-B) * expansion.
struct CharSeries {
  LaurentPoly laurent;
  TruncatedSeries expansion;

  std::vector<Int> f_prefix(long degree) const { return expansion.prefix_of_target(degree); }
};

// M(x) = D - (sum_{s:i(s)=(vi,vj)} x^alpha(s) + sum_{s:i(s)=(vj,vi)} x^-alpha(s)).
// NonIntegerVoltage unless every value is exact.
std::vector<std::vector<LaurentPoly>> voltage_matrix(const Multigraph& g,
                                                     const VoltageAssignment& v);

// f(T) = det M(1+T) through the exact Laurent path.
// ZeroEulerCharacteristic when chi(X)=0; ZeroSeries when det M is identically 0.
CharSeries char_poly_exact(const Multigraph& g, const VoltageAssignment& v);

// (1+T)^a for a general p-adic exponent, to degree D. For finite input
// precision P' the output precision is P' - val_ell(D!) (PrecisionExhausted
// when that is <= 0).
TruncatedSeries binomial_series(const PadicInt& a, long degree_cap, const Int& ell);

// Truncated-series determinant path for genuinely ell-adic voltages. The
// output precision is the minimum effective precision over the matrix
// entries, optionally capped at precision_cap.
TruncatedSeries char_series_truncated(const Multigraph& g, const VoltageAssignment& v,
                                      long degree_cap,
                                      std::optional<long> precision_cap = std::nullopt);

// Default complete-expansion degree for exact integer voltages.
long default_exact_degree(const VoltageAssignment& v);

}  // namespace iwagraph
