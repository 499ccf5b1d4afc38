#pragma once

#include <optional>

#include "iwagraph/numeric.hpp"

namespace iwagraph {

/// Element of Z_ell, either exact (an integer representative with no
/// precision loss) or known modulo ell^precision.
struct PadicInt {
  Int rep;
  std::optional<long> precision;  // nullopt = exact

  PadicInt() : rep(0) {}
  explicit PadicInt(Int r) : rep(std::move(r)) {}
  PadicInt(Int r, long prec) : rep(std::move(r)), precision(prec) {}

  bool exact() const { return !precision.has_value(); }
};

// Exact values compare by representative; mod-ell^P values modulo ell^min(P).
bool padic_equal(const PadicInt& a, const PadicInt& b, const Int& ell);

// Non-negative residue mod ell^n; PrecisionExhausted when the stored
// precision cannot resolve it.
Int padic_residue(const PadicInt& a, const Int& ell, long n);

bool padic_is_unit(const PadicInt& a, const Int& ell);
bool padic_is_zero_exactly(const PadicInt& a);

// Quadratic character eta(a) in {-1, 0, +1}, eta(0) = 0.
int quadratic_character(const Int& a, const Int& ell);

}  // namespace iwagraph
