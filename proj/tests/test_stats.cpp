#include "iwagraph/stats.hpp"

#include <sstream>

#include "doctest.h"
#include "iwagraph/errors.hpp"
#include "test_util.hpp"

using namespace iwagraph;

namespace {
Rat rat(Int num, Int den) {
  Rat r(std::move(num), std::move(den));
  r.canonicalize();
  return r;
}
}  // namespace

TEST_CASE("closed-form bouquet probabilities") {
  CHECK(closed_form_bouquet(3, 2) == Rat(1));
  CHECK(closed_form_bouquet(5, 2) == Rat(2, 3));
  CHECK(closed_form_bouquet(3, 3) == Rat(9, 13));
}

TEST_CASE("closed form equals exhaustive enumeration on small cases") {
  for (long ell : {3L, 5L}) {
    for (long t = 2; t <= 4; ++t) {
      auto e = bouquet_enumerate(Int(ell), t);
      Rat measured(e.tallies[{0, 1}], e.total);
      measured.canonicalize();
      CHECK(measured == closed_form_bouquet(Int(ell), t));
      CHECK(e.total == pow_int(ell, static_cast<unsigned long>(t)) - 1);
    }
  }
}

TEST_CASE("multiset-weighted enumeration equals a naive odometer sweep") {
  for (auto [ell, t] : {std::pair<long, long>{3, 3}, {5, 2}, {3, 4}}) {
    auto fast = bouquet_enumerate(Int(ell), t);
    // independent odometer over residue vectors
    std::map<MuLambdaKey, Int> tallies;
    Int total = 0;
    std::vector<long> digits(static_cast<std::size_t>(t), 0);
    while (true) {
      std::size_t i = 0;
      while (i < digits.size() && digits[i] == ell - 1) digits[i++] = 0;
      if (i == digits.size()) break;
      ++digits[i];
      std::vector<Int> rep;
      for (long d : digits) rep.emplace_back(d);
      MuLambda ml = classify_bouquet_class(Int(ell), rep);
      tallies[{ml.mu, ml.lambda}] += 1;
      total += 1;
    }
    CHECK(fast.total == total);
    CHECK(fast.tallies.size() == tallies.size());
    for (const auto& [key, count] : tallies) CHECK(fast.tallies[key] == count);
  }
}

TEST_CASE("t=2 and t=3 propositions") {
  SUBCASE("t=2: lambda in {1,3} with the stated split") {
    for (long ell : {3L, 5L, 7L, 13L}) {
      auto e = bouquet_enumerate(Int(ell), 2);
      Rat p1(e.tallies[{0, 1}], e.total);
      p1.canonicalize();
      if (ell % 4 == 3) {
        CHECK(p1 == Rat(1));
      } else {
        Rat p3(e.tallies[{0, 3}], e.total);
        p3.canonicalize();
        CHECK(p1 == rat(Int(ell) - 1, Int(ell) + 1));
        CHECK(p3 == rat(2, Int(ell) + 1));
      }
      for (const auto& [key, count] : e.tallies) CHECK(key.mu == 0);
    }
  }
  SUBCASE("t=3, ell=5 (2 mod 3): no lambda=5 stratum") {
    auto e = bouquet_enumerate(Int(5), 3);
    Rat p1(e.tallies[{0, 1}], e.total);
    Rat p3(e.tallies[{0, 3}], e.total);
    p1.canonicalize();
    p3.canonicalize();
    CHECK(p1 == rat(25, 31));
    CHECK(p3 == rat(6, 31));
    CHECK(e.tallies.find({0, 5}) == e.tallies.end());
  }
  SUBCASE("t=3, ell=7 (1 mod 3): lambda=5 stratum of size 8(ell-1)") {
    auto e = bouquet_enumerate(Int(7), 3);
    CHECK(e.tallies[{0, 5}] == 48);
    CHECK(e.tallies[{0, 3}] == 0);
  }
}

TEST_CASE("mu > 0 strata: bound holds and vanishes for ell > t") {
  SUBCASE("no mu>0 classes when ell > t") {
    auto e = bouquet_enumerate(Int(5), 3);
    for (const auto& [key, count] : e.tallies) CHECK(key.mu == 0);
  }
  SUBCASE("ell=3, t=3: exactly (1,1,1) and (2,2,2) have mu > 0") {
    auto e = bouquet_enumerate(Int(3), 3);
    Int mu_pos = 0;
    for (const auto& [key, count] : e.tallies)
      if (key.mu > 0) mu_pos += count;
    CHECK(mu_pos == 2);
    CHECK(mu_positive_upper_bound(Int(3), 3) == rat(8, 26));
    Rat measured(mu_pos, e.total);
    measured.canonicalize();
    CHECK(measured <= mu_positive_upper_bound(Int(3), 3));
  }
  SUBCASE("every lambda tally is odd") {
    for (auto [ell, t] : {std::pair<long, long>{3, 4}, {5, 3}, {7, 2}}) {
      auto e = bouquet_enumerate(Int(ell), t);
      for (const auto& [key, count] : e.tallies) CHECK(key.lambda % 2 == 1);
    }
  }
}

TEST_CASE("mu>0 bound at t=500 matches the exact table values") {
  CHECK(to_decimal_string(mu_positive_upper_bound(3, 500), 15) == "0.333333333333333");
  CHECK(to_decimal_string(mu_positive_upper_bound(7, 500), 15) == "0.00291545189520489");
}

TEST_CASE("lambda-small bound") {
  CHECK(lambda_small_bound(11, 10, 3) ==
        rat(pow_int(11, 10) - pow_int(11, 4), pow_int(11, 10) - 1));
  CHECK(lambda_small_bound(5, 3, 2) == rat(30, 31));
  // empirical Prob(mu=0, lambda < 3) for ell=5, t=3 is 25/31 <= 30/31
  auto e = bouquet_enumerate(Int(5), 3);
  Rat p1(e.tallies[{0, 1}], e.total);
  p1.canonicalize();
  CHECK(p1 <= lambda_small_bound(5, 3, 2));
  CHECK_THROWS_AS(lambda_small_bound(5, 3, 3), Error);
  CHECK_THROWS_AS(lambda_small_bound(3, 10, 2), Error);
}

TEST_CASE("vary-t density") {
  SUBCASE("t_max follows the exact rational power comparison") {
    VaryTResult v = vary_t_density(3, 20, 1, 2);
    CHECK(v.t_max == 4);
    double dist = std::abs(v.ratio.get_d() - 2.0 / 3.0);
    CHECK(dist < 0.15);
  }
  SUBCASE("target value") {
    VaryTResult v = vary_t_density(5, 50, 2, 5);
    CHECK(v.target == Rat(4, 5));
  }
  SUBCASE("delta outside (0,1) is refused") {
    CHECK_THROWS_AS(vary_t_density(3, 20, 1, 1), Error);
    CHECK_THROWS_AS(vary_t_density(3, 20, 3, 2), Error);
  }
}

TEST_CASE("enumeration cap") {
  CHECK_THROWS_AS(bouquet_enumerate(Int(13), 6, 1, Int(1000)), Error);
}

TEST_CASE("tallies sum to the enumeration and sample sizes") {
  auto e = bouquet_enumerate(Int(7), 3);
  Int sum = 0;
  for (const auto& [key, count] : e.tallies) sum += count;
  CHECK(sum == e.total);
  auto tv = two_vertex_enumerate({1, 1, 2, 1, 1}, 5);
  sum = 0;
  for (const auto& [key, count] : tv.tallies) sum += count;
  CHECK(sum == tv.total);
  auto mc = monte_carlo_bouquet(Int(5), 3, 4000, 9);
  sum = 0;
  for (const auto& [key, count] : mc.tallies) sum += count;
  CHECK(sum == mc.samples);
}

TEST_CASE("depth-2 enumeration refines classes consistently") {
  // (mu, lambda) = (0, 1) and (0, 3) are determined mod ell, so the depth-2
  // fractions must match depth 1 exactly
  auto d1 = bouquet_enumerate(Int(5), 2, 1);
  auto d2 = bouquet_enumerate(Int(5), 2, 2);
  CHECK(d2.total == pow_int(25, 2) - pow_int(5, 2));
  for (auto key : {MuLambdaKey{0, 1}, MuLambdaKey{0, 3}}) {
    Rat f1(d1.tallies[key], d1.total);
    Rat f2(d2.tallies[key], d2.total);
    f1.canonicalize();
    f2.canonicalize();
    CHECK(f1 == f2);
  }
}

TEST_CASE("monte carlo determinism and closeness") {
  auto mc1 = monte_carlo_bouquet(Int(13), 6, 20000, 42);
  auto mc2 = monte_carlo_bouquet(Int(13), 6, 20000, 42, /*threads=*/4);
  CHECK(mc1.tallies == mc2.tallies);  // worker count cannot change the result
  Int hits = mc1.tallies[{0, 1}];
  auto [lo, hi] = wilson_interval_95(hits, Int(20000));
  double theo = closed_form_bouquet(Int(13), 6).get_d();
  CHECK(lo <= theo);
  CHECK(theo <= hi);

  auto tv1 = monte_carlo_two_vertex({2, 1, 2, 2, 0}, 7, 5000, 7);
  auto tv2 = monte_carlo_two_vertex({2, 1, 2, 2, 0}, 7, 5000, 7, 3);
  CHECK(tv1.tallies == tv2.tallies);
  auto [lo2, hi2] = wilson_interval_95(tv1.tallies[{0, 1}], Int(5000));
  double theo2 = prob_two_vertex_mu0_lambda1({2, 1, 2, 2, 0}, 7).get_d();
  CHECK(lo2 <= theo2);
  CHECK(theo2 <= hi2);
}

TEST_CASE("CSV output shape") {
  StatReport report;
  StatRow row;
  row.family = "bouquet";
  row.ell = 5;
  row.params = "t=2";
  row.mu = 0;
  row.lambda = 1;
  row.count = 16;
  row.total = 24;
  row.empirical = Rat(2, 3);
  row.theoretical = Rat(2, 3);
  report.rows.push_back(row);
  std::ostringstream out;
  report.write_csv(out);
  CHECK(out.str() ==
        "family,ell,params,mu,lambda,count,total,empirical_num,empirical_den,"
        "theoretical_num,theoretical_den,bound_num,bound_den,seed\n"
        "bouquet,5,t=2,0,1,16,24,2,3,2,3,,,\n");
}

TEST_CASE("decimal formatting") {
  CHECK(to_decimal_string(Rat(1, 3), 15) == "0.333333333333333");
  CHECK(to_decimal_string(Rat(2, 3), 4) == "0.6667");
  CHECK(to_decimal_string(Rat(1, 25), 2) == "0.040");
  CHECK(to_decimal_string(Rat(9995, 100), 3) == "100");
  CHECK(to_decimal_string(Rat(1, 100000000), 3) == "1.00e-8");
}
