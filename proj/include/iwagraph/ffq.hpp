#pragma once

#include <vector>

#include "iwagraph/numeric.hpp"

namespace iwagraph {

/// Quadratic form Q(x) = sum a_ij x_i x_j over F_ell, a_ij = a_ji, ell odd.
struct QuadraticFormFl {
  long ell;
  int n;
  std::vector<std::vector<long>> a;  // symmetric, entries in [0, ell)

  static QuadraticFormFl from_matrix(long ell, std::vector<std::vector<long>> m);
  long evaluate(const std::vector<long>& x) const;
  bool is_zero_form() const;
};

struct Diagonalization {
  std::vector<long> diag;  // nonzero entries first is NOT guaranteed; zeros allowed
  int rank;                // number of nonzero diagonal entries
  int eta_disc;            // eta(reduced discriminant) in {-1,+1}; 0 when rank = 0
};

// Congruence diagonalization in odd characteristic.
Diagonalization diagonalize(const QuadraticFormFl& q);

// N(Q = 0) over F_ell^n, closed form from rank and reduced discriminant.
// ZeroForm when the matrix vanishes.
Int count_zeros(const QuadraticFormFl& q);

// N(Q = b) for nondegenerate Q in even dimension.
// OddDimension / DegenerateForm guards.
Int count_level_set(const QuadraticFormFl& q, long b);

// Warning's lower bound ell^(n-d) for a zero-constant-term system with
// degree sum d < n (DegreeTooLarge otherwise).
Int warning_lower_bound(const std::vector<long>& degrees, long n, const Int& ell);

}  // namespace iwagraph
