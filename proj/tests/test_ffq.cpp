#include "iwagraph/ffq.hpp"

#include "doctest.h"
#include "iwagraph/errors.hpp"
#include "iwagraph/stats.hpp"
#include "test_util.hpp"

using namespace iwagraph;

namespace {

QuadraticFormFl sum_of_squares(long ell, int n) {
  std::vector<std::vector<long>> m(n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return QuadraticFormFl::from_matrix(ell, std::move(m));
}

QuadraticFormFl random_form(std::mt19937_64& r, long ell, int n) {
  std::vector<std::vector<long>> m(n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      long v = test::rand_range(r, 0, ell - 1);
      m[i][j] = v;
      m[j][i] = v;
    }
  return QuadraticFormFl::from_matrix(ell, std::move(m));
}

}  // namespace

TEST_CASE("diagonalization: rank and discriminant class") {
  SUBCASE("x^2 + y^2 over F_5") {
    Diagonalization d = diagonalize(sum_of_squares(5, 2));
    CHECK(d.rank == 2);
    CHECK(d.eta_disc == 1);
  }
  SUBCASE("rank-1 square of a linear form (y - z)^2") {
    // matrix of (y - z)^2 in 3 variables (x unused)
    std::vector<std::vector<long>> m = {{0, 0, 0}, {0, 1, -1}, {0, -1, 1}};
    Diagonalization d = diagonalize(QuadraticFormFl::from_matrix(7, std::move(m)));
    CHECK(d.rank == 1);
  }
  SUBCASE("round-trip through a random congruence transform") {
    auto r = test::rng(17);
    for (int trial = 0; trial < 30; ++trial) {
      long ell = (trial % 2) ? 5 : 7;
      int n = static_cast<int>(test::rand_range(r, 2, 4));
      QuadraticFormFl q = random_form(r, ell, n);
      if (q.is_zero_form()) continue;
      Diagonalization d = diagonalize(q);
      // congruence preserves the zero count
      std::vector<std::vector<long>> diag_m(n, std::vector<long>(n, 0));
      for (int i = 0; i < n; ++i) diag_m[i][i] = d.diag[static_cast<std::size_t>(i)];
      auto diag_q = QuadraticFormFl::from_matrix(ell, std::move(diag_m));
      CHECK(test::brute_force_count_zeros(q) == test::brute_force_count_zeros(diag_q));
    }
  }
}

TEST_CASE("count_zeros examples") {
  CHECK(count_zeros(sum_of_squares(5, 2)) == 9);
  CHECK(count_zeros(sum_of_squares(3, 3)) == 9);  // 8 nonzero solutions + origin
  // odd rank always gives ell^(n-1)
  std::vector<std::vector<long>> m = {{1, 0, 0}, {0, 2, 0}, {0, 0, 3}};
  CHECK(count_zeros(QuadraticFormFl::from_matrix(5, std::move(m))) == 25);
  CHECK_THROWS_AS(count_zeros(QuadraticFormFl::from_matrix(5, {{0, 0}, {0, 0}})), Error);
}

TEST_CASE("count_level_set examples") {
  CHECK(count_level_set(sum_of_squares(5, 2), 1) == 4);
  CHECK(count_level_set(sum_of_squares(5, 2), 0) == 9);
  std::vector<std::vector<long>> m = {{1, 0}, {0, -1}};
  CHECK(count_level_set(QuadraticFormFl::from_matrix(3, std::move(m)), 1) == 2);
  CHECK_THROWS_AS(count_level_set(sum_of_squares(5, 3), 1), Error);  // odd dimension
  std::vector<std::vector<long>> deg = {{1, 0}, {0, 0}};
  CHECK_THROWS_AS(count_level_set(QuadraticFormFl::from_matrix(5, std::move(deg)), 1), Error);
}

TEST_CASE("closed-form counts match exhaustive enumeration on random forms") {
  auto r = test::rng(29);
  int done = 0;
  while (done < 60) {
    long ell = std::vector<long>{3, 5, 7}[static_cast<std::size_t>(test::rand_range(r, 0, 2))];
    int n = static_cast<int>(test::rand_range(r, 1, 4));
    QuadraticFormFl q = random_form(r, ell, n);
    if (q.is_zero_form()) continue;
    ++done;
    CHECK(count_zeros(q) == test::brute_force_count_zeros(q));
    Diagonalization d = diagonalize(q);
    if (n % 2 == 0 && d.rank == n) {
      long b = test::rand_range(r, 0, ell - 1);
      CHECK(count_level_set(q, b) == test::brute_force_count_zeros(q, b));
    }
  }
}

TEST_CASE("warning lower bound") {
  // the k=3, t=10 bouquet system: degree sum d = 2 + 4 = 6, bound ell^(n-d)
  CHECK(warning_lower_bound({2, 4}, 10, 11) == pow_int(11, 4));
  CHECK(warning_lower_bound({2}, 3, 3) == 3);
  CHECK_THROWS_AS(warning_lower_bound({2, 2}, 4, 5), Error);
}

TEST_CASE("warning divisibility: N = 0 mod ell on random zero-constant systems") {
  auto r = test::rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    long ell = (trial % 2) ? 3 : 5;
    int n = static_cast<int>(test::rand_range(r, 3, 5));
    // one random quadratic form plus an optional linear form, d < n
    QuadraticFormFl q = random_form(r, ell, n);
    bool with_linear = n >= 4 && test::rand_range(r, 0, 1) == 1;
    std::vector<long> lin(static_cast<std::size_t>(n), 0);
    if (with_linear)
      for (int i = 0; i < n; ++i) lin[static_cast<std::size_t>(i)] = test::rand_range(r, 0, ell - 1);
    Int count = 0;
    std::vector<long> x(static_cast<std::size_t>(n), 0);
    while (true) {
      long lv = 0;
      for (int i = 0; i < n; ++i) lv = (lv + lin[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(i)]) % ell;
      if (q.evaluate(x) == 0 && lv == 0) count += 1;
      int i = 0;
      while (i < n && x[static_cast<std::size_t>(i)] == ell - 1) x[static_cast<std::size_t>(i++)] = 0;
      if (i == n) break;
      ++x[static_cast<std::size_t>(i)];
    }
    CHECK(count % ell == 0);
    long d = 2 + (with_linear ? 1 : 0);
    if (d < n) CHECK(count >= warning_lower_bound(with_linear ? std::vector<long>{2, 1} : std::vector<long>{2}, n, ell));
  }
}

TEST_CASE("count_zeros reproduces the (mu=0, lambda=1) complement counts") {
  for (long ell : {3L, 5L, 7L, 11L, 13L}) {
    for (int t = 2; t <= 8; ++t) {
      Int g = count_zeros(sum_of_squares(ell, t)) - 1;  // drop the zero vector
      CHECK(g == bouquet_g_count(ell, t));
    }
  }
}
