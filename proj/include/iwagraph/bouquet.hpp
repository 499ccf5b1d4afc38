#pragma once

#include <vector>

#include "iwagraph/char_series.hpp"
#include "iwagraph/invariants.hpp"
#include "iwagraph/multigraph.hpp"

namespace iwagraph {

/// Bouquet X_t with an integer voltage vector.
struct BouquetVoltage {
  Int ell;
  std::vector<Int> alpha;

  long t() const { return static_cast<long>(alpha.size()); }
  bool admissible() const;
  Multigraph to_multigraph() const;
  VoltageAssignment to_voltage() const { return VoltageAssignment::exact(ell, alpha); }
};

// p_i = sum_k alpha_k^(2i) for i = 1..i_max, exact.
std::vector<Int> power_sums(const BouquetVoltage& bv, long i_max);

// Both necessary conditions for mu > 0: the unit-coordinate count and every
// quadratic-residue-class count r_x are multiples of ell. false certifies
// mu = 0; true decides nothing (see the (1,1,2) counterexample).
bool mu_positive_necessary(const BouquetVoltage& bv);

// Exact mu for integer voltages: minimal coefficient valuation of
// sum_s P_|alpha(s)|(X) over the shifted Chebyshev basis.
long mu_exact_integer(const BouquetVoltage& bv);

enum class LambdaClass { lambda_eq_2k_minus_1, less, undetermined };

// Power-sum classifier valid in the range 2k-1 < ell-1 (RangeError outside).
LambdaClass lambda_classifier_small(const BouquetVoltage& bv, long k);

// t = ell^(n1+1) + ell^n1 loops, alpha = (1,...,1, ell^n2,...,ell^n2);
// exact invariants downstream are (mu, lambda) = (n1, 2*ell^n2 - 1).
BouquetVoltage arb_large_voltage(const Int& ell, long n1, long n2);

/// Coefficients d_1(a)..d_a(a) of the shifted Chebyshev polynomial
/// P_a(X) = 2 - 2 T_a(1 - X/2).
struct ChebyshevData {
  long a;
  std::vector<Int> coeffs;  // coeffs[k-1] = d_k(a)
  Int d(long k) const { return (k >= 1 && k <= a) ? coeffs[static_cast<std::size_t>(k - 1)] : Int(0); }
};

ChebyshevData chebyshev_shifted(long a, long k_max = -1);

// f(T) = sum_k f_{alpha_k}(T) through the exact Laurent path (1x1 shortcut).
CharSeries bouquet_char_series(const BouquetVoltage& bv);

// (mu, lambda) from the exact series.
MuLambda bouquet_invariants(const BouquetVoltage& bv);

}  // namespace iwagraph
