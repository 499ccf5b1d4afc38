#include "iwagraph/bouquet.hpp"

#include <map>

#include "doctest.h"
#include "iwagraph/errors.hpp"
#include "test_util.hpp"

using namespace iwagraph;

TEST_CASE("power sums") {
  BouquetVoltage a{Int(3), {Int(1), Int(1), Int(2)}};
  CHECK(power_sums(a, 1)[0] == 6);
  BouquetVoltage b{Int(3), {Int(1), Int(8), Int(10)}};
  CHECK(power_sums(b, 1)[0] == 165);
  BouquetVoltage c{Int(5), {Int(0), Int(0), Int(1)}};
  auto p = power_sums(c, 4);
  for (const auto& v : p) CHECK(v == 1);
}

TEST_CASE("necessary conditions for mu > 0") {
  CHECK(mu_positive_necessary({Int(3), {Int(1), Int(1), Int(2)}}));   // yet mu = 0
  CHECK(!mu_positive_necessary({Int(3), {Int(1), Int(2)}}));          // count 2, not 0 mod 3
  CHECK(mu_positive_necessary({Int(3), {Int(1), Int(1), Int(1), Int(3)}}));
}

TEST_CASE("exact mu for integer voltages") {
  CHECK(mu_exact_integer(arb_large_voltage(3, 1, 1)) == 1);
  CHECK(mu_exact_integer({Int(3), {Int(1), Int(1), Int(2)}}) == 0);
  BouquetVoltage fives{Int(5), {}};
  for (int i = 0; i < 5; ++i) fives.alpha.emplace_back(1);
  for (int i = 0; i < 5; ++i) fives.alpha.emplace_back(2);
  CHECK(mu_exact_integer(fives) >= 1);
}

TEST_CASE("mu > 0 iff every |alpha| multiplicity is divisible by ell (exhaustive small cases)") {
  // multisets of |values| <= ell^2 of size t <= 4, for ell in {3, 5}
  for (long ell : {3L, 5L}) {
    const long vmax = ell * ell;
    for (long t = 2; t <= 4; ++t) {
      std::vector<long> values(static_cast<std::size_t>(t), 0);
      std::function<void(long, long)> rec = [&](long pos, long min_v) {
        if (pos == t) {
          BouquetVoltage bv{Int(ell), {}};
          std::map<long, long> multiplicities;
          bool unit = false;
          for (long v : values) {
            bv.alpha.emplace_back(v);
            if (v != 0) ++multiplicities[v];
            if (v % ell != 0) unit = true;
          }
          if (!unit) return;
          bool all_divisible = true;
          for (const auto& [value, count] : multiplicities)
            if (count % ell != 0) all_divisible = false;
          CHECK((mu_exact_integer(bv) > 0) == all_divisible);
          return;
        }
        for (long v = min_v; v <= vmax; ++v) {
          values[static_cast<std::size_t>(pos)] = v;
          rec(pos + 1, v);
        }
      };
      rec(0, 0);
    }
  }
}

TEST_CASE("power-sum lambda classifier") {
  SUBCASE("ell=5, alpha=(1,2): not lambda=1, then lambda=3 at k=2") {
    BouquetVoltage bv{Int(5), {Int(1), Int(2)}};
    CHECK(lambda_classifier_small(bv, 1) == LambdaClass::undetermined);  // p1 = 5
    CHECK(lambda_classifier_small(bv, 2) == LambdaClass::lambda_eq_2k_minus_1);
  }
  SUBCASE("ell>=5, alpha=(1,0,...,0): lambda=1") {
    BouquetVoltage bv{Int(7), {Int(1), Int(0), Int(0)}};
    CHECK(lambda_classifier_small(bv, 1) == LambdaClass::lambda_eq_2k_minus_1);
  }
  SUBCASE("ell=7, alpha=(1,2,3,1): p1=15 is a unit, lambda=1") {
    BouquetVoltage bv{Int(7), {Int(1), Int(2), Int(3), Int(1)}};
    CHECK(lambda_classifier_small(bv, 1) == LambdaClass::lambda_eq_2k_minus_1);
    CHECK(lambda_classifier_small(bv, 2) == LambdaClass::less);
    MuLambda exact = bouquet_invariants(bv);
    CHECK(exact.mu == 0);
    CHECK(exact.lambda == 1);
  }
  SUBCASE("range guard: 2k-1 >= ell-1 refused") {
    BouquetVoltage bv{Int(5), {Int(1), Int(2)}};
    CHECK_THROWS_AS(lambda_classifier_small(bv, 3), Error);
  }
}

TEST_CASE("classifier agrees with the exact series when determinate") {
  auto r = test::rng(303);
  for (int trial = 0; trial < 200; ++trial) {
    long ell = (trial % 2 == 0) ? 7 : 11;
    long t = test::rand_range(r, 2, 4);
    BouquetVoltage bv{Int(ell), {}};
    for (long i = 0; i < t; ++i) bv.alpha.emplace_back(test::rand_range(r, -8, 8));
    if (!bv.admissible()) continue;
    MuLambda exact = bouquet_invariants(bv);
    for (long k = 1; 2 * k - 1 < ell - 1; ++k) {
      LambdaClass cls = lambda_classifier_small(bv, k);
      if (cls == LambdaClass::lambda_eq_2k_minus_1) {
        CHECK(exact.mu == 0);
        CHECK(exact.lambda == 2 * k - 1);
      } else if (cls == LambdaClass::less) {
        CHECK(exact.lambda < 2 * k - 1);
      }
    }
  }
}

TEST_CASE("arbitrarily-large voltage construction") {
  BouquetVoltage a = arb_large_voltage(3, 0, 1);
  CHECK(a.t() == 4);
  CHECK(a.alpha == std::vector<Int>{1, 1, 1, 3});
  BouquetVoltage b = arb_large_voltage(3, 1, 1);
  CHECK(b.t() == 12);
  BouquetVoltage c = arb_large_voltage(5, 0, 1);
  CHECK(c.t() == 6);
  MuLambda ml = bouquet_invariants(c);
  CHECK(ml.mu == 0);
  CHECK(ml.lambda == 9);
  CHECK_THROWS_AS(arb_large_voltage(3, 0, 0), Error);
}

TEST_CASE("shifted Chebyshev polynomials") {
  ChebyshevData p1 = chebyshev_shifted(1);
  CHECK(p1.d(1) == 1);
  ChebyshevData p2 = chebyshev_shifted(2);
  CHECK(p2.d(1) == 4);
  CHECK(p2.d(2) == -1);
  for (long n = 1; n <= 9; ++n) CHECK(chebyshev_shifted(n).d(n) == ((n % 2 == 1) ? 1 : -1));

  // (d_{b_i}(b_j)) is unimodular for distinct positive b's
  auto det_for = [](const std::vector<long>& b) {
    std::vector<std::vector<Int>> m(b.size(), std::vector<Int>(b.size()));
    for (std::size_t i = 0; i < b.size(); ++i) {
      for (std::size_t j = 0; j < b.size(); ++j) m[i][j] = chebyshev_shifted(b[j]).d(b[i]);
    }
    return det_bareiss(m);
  };
  CHECK(abs(det_for({1, 2, 3})) == 1);
  CHECK(abs(det_for({2, 5, 7, 9})) == 1);
  CHECK(abs(det_for({1, 4, 6})) == 1);
}

TEST_CASE("ell > t forces mu = 0 and lambda < 2t (1000 random vectors per pair)") {
  auto r = test::rng(505);
  for (auto [ell, t] : {std::pair<long, long>{5, 3}, {7, 4}, {11, 5}}) {
    for (int trial = 0; trial < 1000; ++trial) {
      BouquetVoltage bv{Int(ell), {}};
      for (long i = 0; i < t; ++i) bv.alpha.emplace_back(test::rand_range(r, -30, 30));
      if (!bv.admissible()) bv.alpha[0] = 1;
      MuLambda ml = bouquet_invariants(bv);
      CHECK(ml.mu == 0);
      CHECK(ml.lambda < 2 * t);
    }
  }
}

TEST_CASE("beta_2 = -sum of squares") {
  auto r = test::rng(404);
  for (int trial = 0; trial < 50; ++trial) {
    long t = test::rand_range(r, 2, 6);
    BouquetVoltage bv{Int(5), {}};
    Int sum = 0;
    for (long i = 0; i < t; ++i) {
      bv.alpha.emplace_back(test::rand_range(r, -9, 9));
      sum += bv.alpha.back() * bv.alpha.back();
    }
    if (!bv.admissible()) continue;
    CHECK(bouquet_char_series(bv).f_prefix(2)[2] == -sum);
  }
}
