#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "iwagraph/bouquet.hpp"
#include "iwagraph/two_vertex.hpp"

namespace iwagraph {

struct StatRow {
  std::string family;
  Int ell;
  std::string params;
  std::optional<long> mu;
  std::optional<long> lambda;
  Int count = 0;
  Int total = 0;
  Rat empirical = Rat(0);
  std::optional<Rat> theoretical;
  std::optional<Rat> bound;
  std::optional<std::uint64_t> seed;
  std::optional<std::pair<double, double>> wilson95;  // Monte Carlo only
};

struct StatReport {
  std::vector<StatRow> rows;
  void write_csv(std::ostream& out) const;
};

// --- closed forms and bounds -------------------------------------------

// Number of nonzero residue vectors with sum of squares = 0 (Eq. g(ell,t)).
Int bouquet_g_count(const Int& ell, long t);

// Prob(mu=0, lambda=1) for the bouquet X_t.
Rat closed_form_bouquet(const Int& ell, long t);

// Exact combinatorial upper bound for Prob(mu>0).
Rat mu_positive_upper_bound(const Int& ell, long t);

// (1 - ell^-t)^-1 (1 - ell^-k(k-1)); HypothesisViolated unless
// 2k-1 < ell, k(k-1) < t, k > 1.
Rat lambda_small_bound(const Int& ell, long t, long k);

// --- enumeration ---------------------------------------------------------

struct MuLambdaKey {
  long mu;
  long lambda;
  bool operator<(const MuLambdaKey& o) const {
    return mu != o.mu ? mu < o.mu : lambda < o.lambda;
  }
  bool operator==(const MuLambdaKey& o) const = default;
};

struct EnumerationResult {
  std::map<MuLambdaKey, Int> tallies;
  Int total = 0;  // number of admissible residue classes
};

// Exhaustive classification of admissible residue classes mod ell^depth for
// the bouquet X_t, by the integer representative in [0, ell^depth)^t.
// Power-sum shortcut where Lemma-certified, exact series otherwise.
// EnumerationCap when ell^(depth*t) exceeds class_cap.
EnumerationResult bouquet_enumerate(const Int& ell, long t, long depth = 1,
                                    const Int& class_cap = Int(100000000));

// Same for the two-vertex family over alpha_0 in (Z/ell)^t \ {0}.
EnumerationResult two_vertex_enumerate(const TwoVertexShape& shape, long ell,
                                       const Int& class_cap = Int(100000000));

// (mu, lambda) of a single bouquet residue class via its representative.
MuLambda classify_bouquet_class(const Int& ell, const std::vector<Int>& rep);

// --- vary-t density ------------------------------------------------------

struct VaryTResult {
  Rat ratio;
  Rat target;  // 1 - 1/ell
  long t_max;
  Int admissible_count;
  Int matching_count;
};

// Exact lattice-count ratio #T_{<=x}(0,1,ell) / #A_{<=x}(ell) with
// t = 2..floor(x^delta); delta in (0,1) as an exact rational p/q.
VaryTResult vary_t_density(const Int& ell, long x, long delta_num, long delta_den);

// --- Monte Carlo ---------------------------------------------------------

struct MonteCarloResult {
  std::map<MuLambdaKey, Int> tallies;
  long samples = 0;
  std::uint64_t seed = 0;
};

MonteCarloResult monte_carlo_bouquet(const Int& ell, long t, long samples,
                                     std::uint64_t seed, int threads = 1);
MonteCarloResult monte_carlo_two_vertex(const TwoVertexShape& shape, long ell, long samples,
                                        std::uint64_t seed, int threads = 1);

std::pair<double, double> wilson_interval_95(const Int& successes, const Int& total);

}  // namespace iwagraph
