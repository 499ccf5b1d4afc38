#include "iwagraph/series.hpp"

#include <algorithm>

#include "iwagraph/errors.hpp"

namespace iwagraph {

namespace {
std::optional<long> min_precision(const std::optional<long>& a, const std::optional<long>& b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}
}  // namespace

bool TruncatedSeries::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Int& c) { return c == 0; });
}

Int TruncatedSeries::coeff(long n) const {
  if (n < 0 || n >= static_cast<long>(coeffs.size())) return 0;
  return coeffs[static_cast<std::size_t>(n)];
}

void TruncatedSeries::reduce() {
  if (!precision) return;
  if (*precision <= 0) fail(Errc::precision_exhausted, "series precision exhausted");
  Int mod = pow_int(ell, static_cast<unsigned long>(*precision));
  for (auto& c : coeffs) mpz_mod(c.get_mpz_t(), c.get_mpz_t(), mod.get_mpz_t());
}

TruncatedSeries TruncatedSeries::add(const TruncatedSeries& o) const {
  TruncatedSeries r;
  r.ell = ell;
  r.degree_cap = std::min(degree_cap, o.degree_cap);
  r.precision = min_precision(precision, o.precision);
  r.unit_shift = unit_shift;  // caller keeps shifts aligned
  r.coeffs.assign(static_cast<std::size_t>(r.degree_cap) + 1, Int(0));
  for (long n = 0; n <= r.degree_cap; ++n) r.coeffs[n] = coeff(n) + o.coeff(n);
  r.reduce();
  return r;
}

TruncatedSeries TruncatedSeries::mul(const TruncatedSeries& o) const {
  TruncatedSeries r;
  r.ell = ell;
  r.degree_cap = std::min(degree_cap, o.degree_cap);
  r.precision = min_precision(precision, o.precision);
  r.unit_shift = unit_shift + o.unit_shift;
  r.coeffs.assign(static_cast<std::size_t>(r.degree_cap) + 1, Int(0));
  for (long i = 0; i <= r.degree_cap && i < static_cast<long>(coeffs.size()); ++i) {
    if (coeffs[i] == 0) continue;
    long jmax = std::min<long>(r.degree_cap - i, static_cast<long>(o.coeffs.size()) - 1);
    for (long j = 0; j <= jmax; ++j) {
      if (o.coeffs[j] == 0) continue;
      r.coeffs[i + j] += coeffs[i] * o.coeffs[j];
    }
  }
  r.reduce();
  return r;
}

TruncatedSeries TruncatedSeries::scaled(const Int& c) const {
  TruncatedSeries r = *this;
  for (auto& v : r.coeffs) v *= c;
  r.reduce();
  return r;
}

TruncatedSeries TruncatedSeries::truncated(long new_cap) const {
  TruncatedSeries r = *this;
  r.degree_cap = std::min(degree_cap, new_cap);
  if (static_cast<long>(r.coeffs.size()) > r.degree_cap + 1)
    r.coeffs.resize(static_cast<std::size_t>(r.degree_cap) + 1);
  return r;
}

std::vector<Int> TruncatedSeries::prefix_of_target(long degree) const {
  TruncatedSeries f = *this;
  if (unit_shift != 0) {
    // exact-path series are complete polynomials, so the unit factor may be
    // applied at any requested degree
    long cap = exact() ? degree : std::min(degree, degree_cap);
    TruncatedSeries unit = one_plus_T_power(ell, Int(-unit_shift), cap);
    unit.precision = precision;
    TruncatedSeries self = *this;
    self.degree_cap = cap;
    self.unit_shift = 0;
    f = self.mul(unit);
  }
  std::vector<Int> out(static_cast<std::size_t>(degree) + 1, Int(0));
  for (long n = 0; n <= degree; ++n) out[static_cast<std::size_t>(n)] = f.coeff(n);
  return out;
}

TruncatedSeries series_zero(const Int& ell, long degree_cap) {
  TruncatedSeries s;
  s.ell = ell;
  s.degree_cap = degree_cap;
  s.coeffs.assign(static_cast<std::size_t>(degree_cap) + 1, Int(0));
  return s;
}

TruncatedSeries series_constant(const Int& ell, Int c, long degree_cap) {
  TruncatedSeries s = series_zero(ell, degree_cap);
  s.coeffs[0] = std::move(c);
  return s;
}

TruncatedSeries one_plus_T_power(const Int& ell, const Int& b, long degree_cap) {
  TruncatedSeries s = series_zero(ell, degree_cap);
  for (long n = 0; n <= degree_cap; ++n)
    s.coeffs[static_cast<std::size_t>(n)] = binomial(b, static_cast<unsigned long>(n));
  return s;
}

}  // namespace iwagraph
