#pragma once

#include <vector>

#include "iwagraph/numeric.hpp"

namespace iwagraph {

/// Exact integer Laurent polynomial in x: coeffs_[i] multiplies x^(min_exp_+i).
/// Normalized so leading/trailing coefficients are nonzero unless zero overall.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long min_exp, std::vector<Int> coeffs);

  static LaurentPoly zero() { return {}; }
  static LaurentPoly constant(Int c);
  static LaurentPoly monomial(const Int& c, long exp);

  bool is_zero() const { return coeffs_.empty(); }
  long min_exp() const { return min_exp_; }
  long max_exp() const { return min_exp_ + static_cast<long>(coeffs_.size()) - 1; }
  Int coeff(long exp) const;
  const std::vector<Int>& raw_coeffs() const { return coeffs_; }

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  bool operator==(const LaurentPoly& o) const = default;

  LaurentPoly shifted(long delta) const;      // * x^delta
  LaurentPoly substituted_inverse() const;    // x -> x^(-1)
  Int evaluate_at_one() const;

  // Coefficients of p(1+T) in T, ascending from T^0; requires min_exp >= 0.
  std::vector<Int> expand_at_one_plus_T() const;

 private:
  void normalize();
  long min_exp_ = 0;
  std::vector<Int> coeffs_;
};

/// Row-cleared polynomial determinant of a square Laurent matrix:
/// returns det(m) exactly (as a Laurent polynomial), using per-row clearance
/// x^{b_i} and a subset-DP cofactor expansion over Z[x].
LaurentPoly det_laurent(const std::vector<std::vector<LaurentPoly>>& m);

}  // namespace iwagraph
