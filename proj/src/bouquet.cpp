#include "iwagraph/bouquet.hpp"

#include <map>

#include "iwagraph/errors.hpp"

namespace iwagraph {

bool BouquetVoltage::admissible() const {
  for (const auto& a : alpha)
    if (a % ell != 0) return true;
  return false;
}

Multigraph BouquetVoltage::to_multigraph() const {
  std::vector<std::pair<int, int>> loops(alpha.size(), {0, 0});
  return Multigraph(1, std::move(loops));
}

std::vector<Int> power_sums(const BouquetVoltage& bv, long i_max) {
  std::vector<Int> out;
  out.reserve(static_cast<std::size_t>(i_max));
  std::vector<Int> pw(bv.alpha.size());
  for (std::size_t k = 0; k < bv.alpha.size(); ++k) pw[k] = 1;
  for (long i = 1; i <= i_max; ++i) {
    Int s = 0;
    for (std::size_t k = 0; k < bv.alpha.size(); ++k) {
      pw[k] *= bv.alpha[k] * bv.alpha[k];
      s += pw[k];
    }
    out.push_back(s);
  }
  return out;
}

bool mu_positive_necessary(const BouquetVoltage& bv) {
  if (!bv.admissible()) fail(Errc::inadmissible_voltage, "voltage is not admissible");
  const Int& ell = bv.ell;
  long units = 0;
  std::map<Int, long> residue_class_counts;  // r_x for x in Q_ell
  for (const auto& a : bv.alpha) {
    Int r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), ell.get_mpz_t());
    if (r == 0) continue;
    ++units;
    ++residue_class_counts[(r * r) % ell];
  }
  if (units % ell != 0) return false;
  for (const auto& [x, r_x] : residue_class_counts)
    if (r_x % ell != 0) return false;
  return true;
}

ChebyshevData chebyshev_shifted(long a, long k_max) {
  if (a < 1) fail(Errc::range_error, "chebyshev_shifted needs a >= 1");
  // U_n := 2 T_n(1 - X/2) satisfies U_0 = 2, U_1 = 2 - X,
  // U_{n+1} = (2 - X) U_n - U_{n-1} over Z[X]; P_a = 2 - U_a.
  std::vector<Int> prev{2};          // U_0
  std::vector<Int> cur{2, -1};       // U_1
  for (long n = 1; n < a; ++n) {
    std::vector<Int> next(cur.size() + 1, Int(0));
    for (std::size_t i = 0; i < cur.size(); ++i) {
      next[i] += 2 * cur[i];
      next[i + 1] -= cur[i];
    }
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  const std::vector<Int>& u = (a == 0) ? prev : cur;
  ChebyshevData data;
  data.a = a;
  long top = (k_max < 0) ? a : std::min(a, k_max);
  data.coeffs.reserve(static_cast<std::size_t>(top));
  for (long k = 1; k <= top; ++k)
    data.coeffs.push_back(k < static_cast<long>(u.size()) ? Int(-u[static_cast<std::size_t>(k)])
                                                          : Int(0));
  return data;
}

long mu_exact_integer(const BouquetVoltage& bv) {
  if (!bv.admissible()) fail(Errc::inadmissible_voltage, "voltage is not admissible");
  // sum of P_|alpha_k|(X); P_a = P_{-a}, P_0 = 0
  std::vector<Int> acc;
  for (const auto& a : bv.alpha) {
    Int b = abs(a);
    if (b == 0) continue;
    if (!b.fits_slong_p()) fail(Errc::resource_cap, "voltage too large");
    ChebyshevData p = chebyshev_shifted(b.get_si());
    if (acc.size() < p.coeffs.size()) acc.resize(p.coeffs.size(), Int(0));
    for (std::size_t i = 0; i < p.coeffs.size(); ++i) acc[i] += p.coeffs[i];
  }
  long mu = kInfiniteValuation;
  for (const auto& c : acc) mu = std::min(mu, val_ell(c, bv.ell));
  return mu;
}

LambdaClass lambda_classifier_small(const BouquetVoltage& bv, long k) {
  if (k < 1 || 2 * k - 1 >= bv.ell - 1)
    fail(Errc::range_error, "power-sum classifier requires 2k-1 < ell-1");
  std::vector<Int> p = power_sums(bv, k);
  for (long i = 1; i < k; ++i)
    if (p[static_cast<std::size_t>(i - 1)] % bv.ell != 0) return LambdaClass::less;
  return (p[static_cast<std::size_t>(k - 1)] % bv.ell != 0)
             ? LambdaClass::lambda_eq_2k_minus_1
             : LambdaClass::undetermined;
}

BouquetVoltage arb_large_voltage(const Int& ell, long n1, long n2) {
  if (n1 < 0 || n2 < 1) fail(Errc::range_error, "arb_large_voltage needs n1 >= 0, n2 >= 1");
  Int ones = pow_int(ell, static_cast<unsigned long>(n1 + 1));
  Int highs = pow_int(ell, static_cast<unsigned long>(n1));
  BouquetVoltage bv;
  bv.ell = ell;
  Int value = pow_int(ell, static_cast<unsigned long>(n2));
  for (Int i = 0; i < ones; ++i) bv.alpha.emplace_back(1);
  for (Int i = 0; i < highs; ++i) bv.alpha.push_back(value);
  return bv;
}

CharSeries bouquet_char_series(const BouquetVoltage& bv) {
  if (bv.t() == 1)
    fail(Errc::zero_euler_characteristic, "chi(X_1) = 0: the one-loop bouquet is excluded");
  return char_poly_exact(bv.to_multigraph(), bv.to_voltage());
}

MuLambda bouquet_invariants(const BouquetVoltage& bv) {
  return mu_lambda(bouquet_char_series(bv).expansion);
}

}  // namespace iwagraph
