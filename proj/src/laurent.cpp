#include "iwagraph/laurent.hpp"

#include <algorithm>

#include "iwagraph/errors.hpp"

namespace iwagraph {

LaurentPoly::LaurentPoly(long min_exp, std::vector<Int> coeffs)
    : min_exp_(min_exp), coeffs_(std::move(coeffs)) {
  normalize();
}

LaurentPoly LaurentPoly::constant(Int c) { return LaurentPoly(0, {std::move(c)}); }

LaurentPoly LaurentPoly::monomial(const Int& c, long exp) { return LaurentPoly(exp, {c}); }

void LaurentPoly::normalize() {
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    min_exp_ = 0;
    return;
  }
  std::size_t tail = coeffs_.size();
  while (coeffs_[tail - 1] == 0) --tail;
  if (lead > 0 || tail < coeffs_.size()) {
    coeffs_ = std::vector<Int>(coeffs_.begin() + lead, coeffs_.begin() + tail);
    min_exp_ += static_cast<long>(lead);
  }
}

Int LaurentPoly::coeff(long exp) const {
  long idx = exp - min_exp_;
  if (idx < 0 || idx >= static_cast<long>(coeffs_.size())) return 0;
  return coeffs_[idx];
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  long lo = std::min(min_exp_, o.min_exp_);
  long hi = std::max(max_exp(), o.max_exp());
  std::vector<Int> c(static_cast<std::size_t>(hi - lo + 1), Int(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[min_exp_ - lo + i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[o.min_exp_ - lo + i] += o.coeffs_[i];
  return LaurentPoly(lo, std::move(c));
}

LaurentPoly LaurentPoly::operator-() const {
  std::vector<Int> c(coeffs_);
  for (auto& v : c) v = -v;
  return LaurentPoly(min_exp_, std::move(c));
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  if (is_zero() || o.is_zero()) return zero();
  std::vector<Int> c(coeffs_.size() + o.coeffs_.size() - 1, Int(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
      if (o.coeffs_[j] == 0) continue;
      c[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  return LaurentPoly(min_exp_ + o.min_exp_, std::move(c));
}

LaurentPoly LaurentPoly::shifted(long delta) const {
  if (is_zero()) return zero();
  return LaurentPoly(min_exp_ + delta, coeffs_);
}

LaurentPoly LaurentPoly::substituted_inverse() const {
  if (is_zero()) return zero();
  std::vector<Int> c(coeffs_.rbegin(), coeffs_.rend());
  return LaurentPoly(-max_exp(), std::move(c));
}

Int LaurentPoly::evaluate_at_one() const {
  Int s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

std::vector<Int> LaurentPoly::expand_at_one_plus_T() const {
  if (is_zero()) return {};
  if (min_exp_ < 0) fail(Errc::validation, "expand_at_one_plus_T needs a polynomial");
  // Horner in (1+T): r <- r*(1+T) + c_k, highest exponent first.
  std::size_t deg = static_cast<std::size_t>(max_exp());
  std::vector<Int> r(deg + 1, Int(0));
  std::size_t len = 0;  // meaningful prefix of r
  for (long k = max_exp(); k >= 0; --k) {
    // r *= (1+T)
    for (std::size_t i = len; i > 0; --i) r[i] += r[i - 1];
    if (len < deg + 1) ++len;
    r[0] += coeff(k);
  }
  return r;
}

LaurentPoly det_laurent(const std::vector<std::vector<LaurentPoly>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return LaurentPoly::constant(1);
  if (n > 20) fail(Errc::resource_cap, "laurent determinant limited to 20x20");
  // Clear denominators per row so the DP runs over plain polynomials.
  long total_shift = 0;
  std::vector<std::vector<LaurentPoly>> p(n, std::vector<LaurentPoly>(n));
  for (std::size_t i = 0; i < n; ++i) {
    long row_min = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (!m[i][j].is_zero()) row_min = std::min(row_min, m[i][j].min_exp());
    long b = -row_min;
    total_shift += b;
    for (std::size_t j = 0; j < n; ++j) p[i][j] = m[i][j].shifted(b);
  }
  // Subset DP: dp[S] = det of submatrix (first popcount(S) rows, columns S).
  std::vector<LaurentPoly> dp(1u << n);
  dp[0] = LaurentPoly::constant(1);
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    const int row = __builtin_popcount(s) - 1;
    LaurentPoly acc;
    int parity = 0;
    for (std::uint32_t bits = s; bits; bits &= bits - 1) {
      const int col = __builtin_ctz(bits);
      const LaurentPoly& entry = p[row][col];
      if (!entry.is_zero() && !dp[s & ~(1u << col)].is_zero()) {
        LaurentPoly term = entry * dp[s & ~(1u << col)];
        acc = ((row + parity) % 2 == 0) ? acc + term : acc - term;
      }
      ++parity;
    }
    dp[s] = std::move(acc);
  }
  return dp[(1u << n) - 1].shifted(-total_shift);
}

}  // namespace iwagraph
