#include "iwagraph/stats.hpp"

#include <cmath>
#include <functional>
#include <ostream>
#include <thread>

#include "iwagraph/errors.hpp"

namespace iwagraph {

void StatReport::write_csv(std::ostream& out) const {
  out << "family,ell,params,mu,lambda,count,total,empirical_num,empirical_den,"
         "theoretical_num,theoretical_den,bound_num,bound_den,seed\n";
  for (const auto& r : rows) {
    out << r.family << ',' << r.ell.get_str() << ',' << r.params << ',';
    if (r.mu) out << *r.mu;
    out << ',';
    if (r.lambda) out << *r.lambda;
    out << ',' << r.count.get_str() << ',' << r.total.get_str() << ','
        << r.empirical.get_num().get_str() << ',' << r.empirical.get_den().get_str() << ',';
    if (r.theoretical)
      out << r.theoretical->get_num().get_str() << ',' << r.theoretical->get_den().get_str();
    else
      out << ',';
    out << ',';
    if (r.bound)
      out << r.bound->get_num().get_str() << ',' << r.bound->get_den().get_str();
    else
      out << ',';
    out << ',';
    if (r.seed) out << *r.seed;
    out << '\n';
  }
  for (const auto& r : rows) {
    if (r.wilson95) {
      char buf[128];
      std::snprintf(buf, sizeof(buf), "# wilson95 family=%s mu=%ld lambda=%ld lo=%.6f hi=%.6f\n",
                    r.family.c_str(), r.mu.value_or(-1), r.lambda.value_or(-1),
                    r.wilson95->first, r.wilson95->second);
      out << buf;
    }
  }
}

Int bouquet_g_count(const Int& ell, long t) {
  if (t % 2 == 0) {
    long exp = (t / 2) * ((ell.get_si() - 1) / 2);
    int sign = exp % 2 == 0 ? 1 : -1;
    return pow_int(ell, static_cast<unsigned long>(t - 1)) +
           sign * (ell - 1) * pow_int(ell, static_cast<unsigned long>(t / 2 - 1)) - 1;
  }
  return pow_int(ell, static_cast<unsigned long>(t - 1)) - 1;
}

Rat closed_form_bouquet(const Int& ell, long t) {
  if (!is_odd_prime(ell)) fail(Errc::validation, "ell must be an odd prime");
  if (t < 2) fail(Errc::validation, "bouquet statistics need t >= 2");
  Rat frac(bouquet_g_count(ell, t), pow_int(ell, static_cast<unsigned long>(t)) - 1);
  frac.canonicalize();
  return Rat(1) - frac;
}

Rat mu_positive_upper_bound(const Int& ell, long t) {
  if (!is_odd_prime(ell)) fail(Errc::validation, "ell must be an odd prime");
  const long l = ell.get_si();
  const long m = (l - 1) / 2;
  const long imax = t / l;
  // inner(i) = (i*l)! [y^i] E(y)^m with E(y) = sum_k y^k / (k*l)!
  std::vector<Rat> e(static_cast<std::size_t>(imax) + 1);
  for (long k = 0; k <= imax; ++k)
    e[static_cast<std::size_t>(k)] = Rat(1, factorial(static_cast<unsigned long>(k * l)));
  std::vector<Rat> p(static_cast<std::size_t>(imax) + 1, Rat(0));
  p[0] = 1;
  for (long rep = 0; rep < m; ++rep) {
    std::vector<Rat> q(static_cast<std::size_t>(imax) + 1, Rat(0));
    for (long a = 0; a <= imax; ++a) {
      if (p[static_cast<std::size_t>(a)] == 0) continue;
      for (long b = 0; a + b <= imax; ++b)
        q[static_cast<std::size_t>(a + b)] +=
            p[static_cast<std::size_t>(a)] * e[static_cast<std::size_t>(b)];
    }
    p = std::move(q);
  }
  Rat total(0);
  for (long i = 1; i <= imax; ++i) {
    Rat inner = p[static_cast<std::size_t>(i)] * Rat(factorial(static_cast<unsigned long>(i * l)));
    total += Rat(pow_int(2, static_cast<unsigned long>(i * l)) *
                 binomial(Int(t), static_cast<unsigned long>(i * l))) *
             inner;
  }
  total /= Rat(pow_int(ell, static_cast<unsigned long>(t)) - 1);
  total.canonicalize();
  return total;
}

Rat lambda_small_bound(const Int& ell, long t, long k) {
  if (!is_odd_prime(ell)) fail(Errc::validation, "ell must be an odd prime");
  if (k <= 1 || 2 * k - 1 >= ell || k * (k - 1) >= t)
    fail(Errc::hypothesis_violated, "needs k > 1, 2k-1 < ell and k(k-1) < t");
  Int lt = pow_int(ell, static_cast<unsigned long>(t));
  Int drop = pow_int(ell, static_cast<unsigned long>(t - k * (k - 1)));
  Rat bound(lt - drop, lt - 1);
  bound.canonicalize();
  return bound;
}

// --- bouquet enumeration ---------------------------------------------------

MuLambda classify_bouquet_class(const Int& ell, const std::vector<Int>& rep) {
  BouquetVoltage bv{ell, rep};
  const long m = (ell.get_si() - 1) / 2;
  std::vector<Int> p = power_sums(bv, m);
  for (long k = 1; k <= m; ++k) {
    if (p[static_cast<std::size_t>(k - 1)] % ell != 0)
      return MuLambda{0, 2 * k - 1, Certificate::exact, true};
  }
  // power sums vanish identically mod ell; resolve by the exact series
  return bouquet_invariants(bv);
}

namespace {

// weighted iteration over value-multisets of size t drawn from [0, modulus)
void for_each_multiset(long modulus, long t, const std::function<void(const std::vector<long>&, const Int&)>& fn) {
  std::vector<long> counts(static_cast<std::size_t>(modulus), 0);
  Int t_fact = factorial(static_cast<unsigned long>(t));
  std::function<void(long, long)> rec = [&](long value, long remaining) {
    if (value == modulus - 1) {
      counts[static_cast<std::size_t>(value)] = remaining;
      Int weight = t_fact;
      for (long v = 0; v < modulus; ++v) {
        long c = counts[static_cast<std::size_t>(v)];
        if (c > 1) {
          Int f = factorial(static_cast<unsigned long>(c));
          mpz_divexact(weight.get_mpz_t(), weight.get_mpz_t(), f.get_mpz_t());
        }
      }
      fn(counts, weight);
      return;
    }
    for (long c = 0; c <= remaining; ++c) {
      counts[static_cast<std::size_t>(value)] = c;
      rec(value + 1, remaining - c);
    }
  };
  rec(0, t);
}

}  // namespace

EnumerationResult bouquet_enumerate(const Int& ell, long t, long depth, const Int& class_cap) {
  if (!is_odd_prime(ell)) fail(Errc::validation, "ell must be an odd prime");
  if (t < 2) fail(Errc::validation, "bouquet enumeration needs t >= 2");
  if (depth < 1) fail(Errc::validation, "depth must be >= 1");
  Int classes = pow_int(pow_int(ell, static_cast<unsigned long>(depth)),
                        static_cast<unsigned long>(t));
  if (classes > class_cap)
    fail(Errc::enumeration_cap, "enumeration of " + classes.get_str() + " classes exceeds cap");
  const long modulus_l = pow_int(ell, static_cast<unsigned long>(depth)).get_si();
  const long ell_l = ell.get_si();

  EnumerationResult result;
  for_each_multiset(modulus_l, t, [&](const std::vector<long>& counts, const Int& weight) {
    bool admissible = false;
    for (long v = 0; v < modulus_l && !admissible; ++v)
      if (counts[static_cast<std::size_t>(v)] > 0 && v % ell_l != 0) admissible = true;
    if (!admissible) return;
    std::vector<Int> rep;
    rep.reserve(static_cast<std::size_t>(t));
    for (long v = 0; v < modulus_l; ++v)
      for (long c = 0; c < counts[static_cast<std::size_t>(v)]; ++c) rep.emplace_back(v);
    MuLambda ml = classify_bouquet_class(ell, rep);
    result.tallies[MuLambdaKey{ml.mu, ml.lambda}] += weight;
    result.total += weight;
  });
  return result;
}

EnumerationResult two_vertex_enumerate(const TwoVertexShape& shape, long ell,
                                       const Int& class_cap) {
  shape.validate();
  const long t = shape.t();
  if (t < 1) fail(Errc::validation, "two-vertex enumeration needs t >= 1");
  Int classes = pow_int(Int(ell), static_cast<unsigned long>(t));
  if (classes > class_cap)
    fail(Errc::enumeration_cap, "enumeration of " + classes.get_str() + " classes exceeds cap");
  TwoVertexGraph built = build_two_vertex(shape);

  EnumerationResult result;
  std::vector<long> a0(static_cast<std::size_t>(t), 0);
  std::vector<Int> alpha(static_cast<std::size_t>(shape.p + shape.r + shape.q), Int(0));
  while (true) {
    // advance odometer; the all-zero vector is skipped as inadmissible
    long i = 0;
    while (i < t && a0[static_cast<std::size_t>(i)] == ell - 1) {
      a0[static_cast<std::size_t>(i)] = 0;
      ++i;
    }
    if (i == t) break;
    ++a0[static_cast<std::size_t>(i)];

    // alpha = (a_1..a_p, 0, b_2..b_e, c_1..c_g, d_1..d_q)
    for (long j = 0; j < shape.p; ++j) alpha[static_cast<std::size_t>(j)] = a0[static_cast<std::size_t>(j)];
    alpha[static_cast<std::size_t>(shape.p)] = 0;
    for (long j = 0; j < t - shape.p; ++j)
      alpha[static_cast<std::size_t>(shape.p + 1 + j)] = a0[static_cast<std::size_t>(shape.p + j)];
    // beta_2 a unit certifies (mu, lambda) = (0, 1); otherwise run the series
    if (beta2_two_vertex(shape, alpha) % ell != 0) {
      result.tallies[MuLambdaKey{0, 1}] += 1;
    } else {
      CharSeries cs = char_poly_exact(built.graph, VoltageAssignment::exact(Int(ell), alpha));
      MuLambda ml = mu_lambda(cs.expansion);
      result.tallies[MuLambdaKey{ml.mu, ml.lambda}] += 1;
    }
    result.total += 1;
  }
  return result;
}

// --- vary-t density ----------------------------------------------------------

VaryTResult vary_t_density(const Int& ell, long x, long delta_num, long delta_den) {
  if (!is_odd_prime(ell)) fail(Errc::validation, "ell must be an odd prime");
  if (delta_num <= 0 || delta_den <= 0 || delta_num >= delta_den)
    fail(Errc::validation, "delta must lie in the open interval (0,1)");
  if (x < 2) fail(Errc::validation, "x must be >= 2");
  // t_max = max t with t^delta_den <= x^delta_num
  Int x_pow = pow_int(Int(x), static_cast<unsigned long>(delta_num));
  long t_max = 1;
  while (pow_int(Int(t_max + 1), static_cast<unsigned long>(delta_den)) <= x_pow) ++t_max;

  const long l = ell.get_si();
  // exact per-residue lattice counts #{a in [-x, x] : a = r mod ell}
  auto fdiv = [](long a, long b) {
    long q = a / b;
    if (a % b != 0 && (a < 0) != (b < 0)) --q;
    return q;
  };
  std::vector<Int> box(static_cast<std::size_t>(l));
  for (long r = 0; r < l; ++r)
    box[static_cast<std::size_t>(r)] = Int(fdiv(x - r, l) + fdiv(x + r, l) + 1);

  VaryTResult result;
  result.t_max = t_max;
  result.admissible_count = 0;
  result.matching_count = 0;
  for (long t = 2; t <= t_max; ++t) {
    // DP over sum of squares mod ell, weighted by lattice counts
    std::vector<Int> dp(static_cast<std::size_t>(l), Int(0));
    dp[0] = 1;
    for (long step = 0; step < t; ++step) {
      std::vector<Int> next(static_cast<std::size_t>(l), Int(0));
      for (long s = 0; s < l; ++s) {
        if (dp[static_cast<std::size_t>(s)] == 0) continue;
        for (long r = 0; r < l; ++r)
          next[static_cast<std::size_t>((s + r * r) % l)] +=
              dp[static_cast<std::size_t>(s)] * box[static_cast<std::size_t>(r)];
      }
      dp = std::move(next);
    }
    for (long s = 1; s < l; ++s) result.matching_count += dp[static_cast<std::size_t>(s)];
    result.admissible_count += pow_int(Int(2 * x + 1), static_cast<unsigned long>(t)) -
                               pow_int(Int(2 * (x / l) + 1), static_cast<unsigned long>(t));
  }
  result.ratio = Rat(result.matching_count, result.admissible_count);
  result.ratio.canonicalize();
  result.target = Rat(ell - 1, ell);
  result.target.canonicalize();
  return result;
}

// --- Monte Carlo ----------------------------------------------------------

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// unbiased residue in [0, bound) from a per-sample deterministic stream
long draw_residue(std::uint64_t& state, long bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % static_cast<std::uint64_t>(bound);
  while (true) {
    std::uint64_t v = splitmix64(state);
    if (v < limit) return static_cast<long>(v % static_cast<std::uint64_t>(bound));
  }
}

template <typename Classify>
MonteCarloResult run_mc(long samples, std::uint64_t seed, int threads, long t, long ell_l,
                        bool skip_all_divisible, Classify classify) {
  if (samples < 1) fail(Errc::validation, "need at least one sample");
  if (threads < 1) fail(Errc::validation, "threads must be >= 1");
  const int workers = static_cast<int>(std::min<long>(threads, samples));
  std::vector<std::map<MuLambdaKey, Int>> partial(static_cast<std::size_t>(workers));
  auto work = [&](int w) {
    std::vector<Int> rep(static_cast<std::size_t>(t));
    for (long i = w; i < samples; i += workers) {
      // per-sample stream keyed by (seed, i): deterministic for any worker count
      std::uint64_t state = seed ^ (0x675C7B9224D1BD1DULL * static_cast<std::uint64_t>(i + 1));
      while (true) {
        bool admissible = false;
        for (long j = 0; j < t; ++j) {
          long v = draw_residue(state, ell_l);
          rep[static_cast<std::size_t>(j)] = v;
          if (v != 0) admissible = true;
        }
        if (!skip_all_divisible || admissible) break;
      }
      MuLambdaKey key = classify(rep);
      partial[static_cast<std::size_t>(w)][key] += 1;
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }
  MonteCarloResult result;
  result.samples = samples;
  result.seed = seed;
  for (const auto& m : partial)
    for (const auto& [k, v] : m) result.tallies[k] += v;
  return result;
}

}  // namespace

MonteCarloResult monte_carlo_bouquet(const Int& ell, long t, long samples, std::uint64_t seed,
                                     int threads) {
  if (!is_odd_prime(ell)) fail(Errc::validation, "ell must be an odd prime");
  if (t < 2) fail(Errc::validation, "bouquet sampling needs t >= 2");
  const long ell_l = ell.get_si();
  return run_mc(samples, seed, threads, t, ell_l, true, [&](const std::vector<Int>& rep) {
    MuLambda ml = classify_bouquet_class(ell, rep);
    return MuLambdaKey{ml.mu, ml.lambda};
  });
}

MonteCarloResult monte_carlo_two_vertex(const TwoVertexShape& shape, long ell, long samples,
                                        std::uint64_t seed, int threads) {
  shape.validate();
  if (shape.t() < 1) fail(Errc::validation, "two-vertex sampling needs t >= 1");
  TwoVertexGraph built = build_two_vertex(shape);
  return run_mc(samples, seed, threads, shape.t(), ell, true, [&](const std::vector<Int>& a0) {
    std::vector<Int> alpha(static_cast<std::size_t>(shape.p + shape.r + shape.q), Int(0));
    for (long j = 0; j < shape.p; ++j) alpha[static_cast<std::size_t>(j)] = a0[static_cast<std::size_t>(j)];
    for (long j = 0; j < shape.t() - shape.p; ++j)
      alpha[static_cast<std::size_t>(shape.p + 1 + j)] = a0[static_cast<std::size_t>(shape.p + j)];
    CharSeries cs = char_poly_exact(built.graph, VoltageAssignment::exact(Int(ell), alpha));
    MuLambda ml = mu_lambda(cs.expansion);
    return MuLambdaKey{ml.mu, ml.lambda};
  });
}

std::pair<double, double> wilson_interval_95(const Int& successes, const Int& total) {
  const double z = 1.959963984540054;
  double n = total.get_d();
  double p = successes.get_d() / n;
  double z2 = z * z;
  double center = (p + z2 / (2 * n)) / (1 + z2 / n);
  double half = z * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n)) / (1 + z2 / n);
  return {center - half, center + half};
}

}  // namespace iwagraph
