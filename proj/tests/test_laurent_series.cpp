#include "doctest.h"
#include "iwagraph/char_series.hpp"
#include "iwagraph/errors.hpp"
#include "iwagraph/laurent.hpp"
#include "iwagraph/series.hpp"
#include "test_util.hpp"

using namespace iwagraph;

TEST_CASE("laurent arithmetic and normalization") {
  LaurentPoly a = LaurentPoly::monomial(2, -1) + LaurentPoly::constant(3);  // 2x^-1 + 3
  LaurentPoly b = LaurentPoly::monomial(1, 1) - LaurentPoly::constant(3);   // x - 3
  LaurentPoly prod = a * b;
  CHECK(prod.coeff(-1) == -6);
  CHECK(prod.coeff(0) == 2 - 9);
  CHECK(prod.coeff(1) == 3);
  CHECK((a - a).is_zero());
  CHECK(prod.min_exp() == -1);
  CHECK(prod.max_exp() == 1);
}

TEST_CASE("substituted_inverse reverses exponents") {
  LaurentPoly p = LaurentPoly::monomial(5, 2) + LaurentPoly::monomial(-1, -3);
  LaurentPoly q = p.substituted_inverse();
  CHECK(q.coeff(-2) == 5);
  CHECK(q.coeff(3) == -1);
  CHECK(q.substituted_inverse() == p);
}

TEST_CASE("expand_at_one_plus_T") {
  // (x - 1)^2 = T^2 at x = 1+T
  LaurentPoly p = (LaurentPoly::monomial(1, 1) - LaurentPoly::constant(1));
  auto coeffs = (p * p).expand_at_one_plus_T();
  CHECK(coeffs == std::vector<Int>{0, 0, 1});
  // x^3 -> 1 + 3T + 3T^2 + T^3
  auto cube = LaurentPoly::monomial(1, 3).expand_at_one_plus_T();
  CHECK(cube == std::vector<Int>{1, 3, 3, 1});
}

TEST_CASE("binomial series examples") {
  auto s1 = binomial_series(PadicInt(Int(1)), 4, 5);
  CHECK(s1.coeffs == std::vector<Int>{1, 1, 0, 0, 0});
  auto sm1 = binomial_series(PadicInt(Int(-1)), 3, 5);
  CHECK(sm1.coeffs == std::vector<Int>{1, -1, 1, -1});
}

TEST_CASE("f_1 assembly: 2 - (1+T) - (1+T)^{-1} = -(1+T)^{-1} T^2") {
  const Int ell(5);
  long d = 12;
  auto lhs = series_constant(ell, 2, d)
                 .add(one_plus_T_power(ell, 1, d).scaled(-1))
                 .add(one_plus_T_power(ell, -1, d).scaled(-1));
  // -(1+T)^{-1} T^2
  auto rhs = one_plus_T_power(ell, -1, d).scaled(-1);
  std::vector<Int> shifted(static_cast<std::size_t>(d) + 1, Int(0));
  for (long n = 2; n <= d; ++n) shifted[static_cast<std::size_t>(n)] = rhs.coeff(n - 2);
  rhs.coeffs = shifted;
  for (long n = 0; n <= d; ++n) CHECK(lhs.coeff(n) == rhs.coeff(n));
}

TEST_CASE("binomial series precision bookkeeping") {
  PadicInt coarse(Int(7), 3);  // known mod 5^3
  auto s = binomial_series(coarse, 4, 5);
  CHECK(s.precision.has_value());
  CHECK(*s.precision == 3);  // val_5(4!) = 0
  PadicInt shallow(Int(7), 1);
  CHECK_THROWS_AS(binomial_series(shallow, 5, 5), Error);  // val_5(5!) = 1 eats it
}

TEST_CASE("prefix_of_target undoes the cleared unit") {
  // series = (1+T)^3 * T^2, unit_shift = 3: target is T^2
  const Int ell(3);
  TruncatedSeries s = one_plus_T_power(ell, 3, 8);
  std::vector<Int> shifted(9, Int(0));
  for (long n = 2; n <= 8; ++n) shifted[static_cast<std::size_t>(n)] = s.coeff(n - 2);
  s.coeffs = shifted;
  s.unit_shift = 3;
  auto prefix = s.prefix_of_target(6);
  CHECK(prefix == std::vector<Int>{0, 0, 1, 0, 0, 0, 0});
}
