#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "iwagraph/series.hpp"

namespace iwagraph {

enum class Certificate { exact, prefix };

struct MuLambda {
  long mu = 0;
  long lambda = 1;
  Certificate certificate = Certificate::exact;
  // false only on the prefix path with a mu>0 candidate; such a result must
  // be cross-validated against tree counts before being reported
  bool certified = true;
};

// Weierstrass data from the characteristic series.
// Exact series: mu = min coefficient valuation, lambda+1 = first index
// attaining it. Prefix series: a unit coefficient certifies mu=0 and
// lambda = n-1 at the first unit index n; otherwise the prefix minimum is a
// candidate and UncertifiedMu is raised unless allow_uncertified.
MuLambda mu_lambda(const TruncatedSeries& series, bool allow_uncertified = false);

struct NuFit {
  long nu = 0;
  long n0 = 1;
};

// nu_n := ord_ell(kappa_n) - mu*ell^n - lambda*n must be constant on a tail
// n >= n0 >= 1 with at least three checked levels; n0 minimal. NotStabilized
// otherwise. Cross-validates a prefix mu: a wrong mu cannot stabilize.
NuFit nu_fit(long mu, long lambda, const Int& ell, std::span<const long> kappa_ords);

struct IwasawaInvariants {
  long mu = 0;
  long lambda = 1;
  std::optional<long> nu;
  std::optional<long> n0;
  Certificate certificate = Certificate::exact;
  // PREFIX certificates carry the coefficient precision P and window degree D
  std::optional<std::pair<long, long>> prefix_window;

  std::string certificate_string() const;
};

}  // namespace iwagraph
