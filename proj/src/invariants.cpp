#include "iwagraph/invariants.hpp"

#include <algorithm>

#include "iwagraph/errors.hpp"

namespace iwagraph {

std::string IwasawaInvariants::certificate_string() const {
  if (certificate == Certificate::exact) return "EXACT";
  if (prefix_window)
    return "PREFIX(P=" + std::to_string(prefix_window->first) +
           ",D=" + std::to_string(prefix_window->second) + ")";
  return "PREFIX";
}

MuLambda mu_lambda(const TruncatedSeries& series, bool allow_uncertified) {
  if (series.is_zero()) fail(Errc::zero_series, "characteristic series is zero in its window");

  if (series.exact()) {
    long best = kInfiniteValuation;
    long first = -1;
    for (long n = 0; n < static_cast<long>(series.coeffs.size()); ++n) {
      long v = val_ell(series.coeffs[static_cast<std::size_t>(n)], series.ell);
      if (v < best) {
        best = v;
        first = n;
      }
    }
    return MuLambda{best, first - 1, Certificate::exact, true};
  }

  // prefix path
  for (long n = 0; n < static_cast<long>(series.coeffs.size()); ++n) {
    if (series.coeffs[static_cast<std::size_t>(n)] % series.ell != 0)
      return MuLambda{0, n - 1, Certificate::prefix, true};
  }
  long best = kInfiniteValuation;
  long first = -1;
  for (long n = 0; n < static_cast<long>(series.coeffs.size()); ++n) {
    long v = val_ell(series.coeffs[static_cast<std::size_t>(n)], series.ell);
    if (v < best) {
      best = v;
      first = n;
    }
  }
  if (!allow_uncertified)
    fail(Errc::uncertified_mu,
         "prefix series suggests mu = " + std::to_string(best) +
             " but a finite prefix cannot certify it; cross-validate against tree counts");
  return MuLambda{best, first - 1, Certificate::prefix, false};
}

NuFit nu_fit(long mu, long lambda, const Int& ell, std::span<const long> kappa_ords) {
  const long n_max = static_cast<long>(kappa_ords.size()) - 1;
  if (n_max < 1) fail(Errc::not_stabilized, "nu_fit needs at least levels 0..1");
  std::vector<Int> residual(kappa_ords.size());
  for (long n = 0; n <= n_max; ++n)
    residual[static_cast<std::size_t>(n)] =
        Int(kappa_ords[static_cast<std::size_t>(n)]) -
        Int(mu) * pow_int(ell, static_cast<unsigned long>(n)) - Int(lambda) * n;
  long n0 = n_max;
  while (n0 > 1 && residual[static_cast<std::size_t>(n0 - 1)] ==
                       residual[static_cast<std::size_t>(n_max)])
    --n0;
  if (residual[static_cast<std::size_t>(n0)] != residual[static_cast<std::size_t>(n_max)])
    fail(Errc::not_stabilized, "no constant tail in ord_ell(kappa_n) - mu*ell^n - lambda*n");
  if (n_max - n0 + 1 < 3)
    fail(Errc::not_stabilized,
         "constant tail too short (need >= 3 checked levels at or beyond n0)");
  const Int& nu = residual[static_cast<std::size_t>(n_max)];
  if (!nu.fits_slong_p()) fail(Errc::validation, "nu out of range");
  return NuFit{nu.get_si(), n0};
}

}  // namespace iwagraph
