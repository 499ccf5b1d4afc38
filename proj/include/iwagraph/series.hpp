#pragma once

#include <optional>
#include <vector>

#include "iwagraph/numeric.hpp"

namespace iwagraph {

/// Power series in T truncated at degree_cap, coefficients beta_0..beta_D.
/// When `precision` is set the coefficients are meaningful (and stored
/// reduced) mod ell^precision; otherwise they are exact and, for results of
/// the exact Laurent path, complete.
///
/// `unit_shift` records that this series is (1+T)^unit_shift * f(T) for the
/// quantity f of interest; the factor is a series unit, so mu/lambda are
/// those of f. prefix_of_target() undoes it.
struct TruncatedSeries {
  Int ell;
  std::vector<Int> coeffs;  // ascending from T^0
  long degree_cap = 0;
  std::optional<long> precision;  // nullopt = exact
  long unit_shift = 0;

  bool exact() const { return !precision.has_value(); }
  bool is_zero() const;
  Int coeff(long n) const;

  void reduce();  // reduce coefficients mod ell^precision when finite

  TruncatedSeries add(const TruncatedSeries& o) const;
  TruncatedSeries mul(const TruncatedSeries& o) const;
  TruncatedSeries scaled(const Int& c) const;
  TruncatedSeries truncated(long new_cap) const;

  // Coefficients beta_0..beta_D of f itself: multiply by (1+T)^(-unit_shift).
  std::vector<Int> prefix_of_target(long degree) const;
};

TruncatedSeries series_zero(const Int& ell, long degree_cap);
TruncatedSeries series_constant(const Int& ell, Int c, long degree_cap);

// (1+T)^b as a truncated series for an exact integer exponent.
TruncatedSeries one_plus_T_power(const Int& ell, const Int& b, long degree_cap);

}  // namespace iwagraph
