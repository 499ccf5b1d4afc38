#include "iwagraph/ffq.hpp"

#include <numeric>

#include "iwagraph/errors.hpp"
#include "iwagraph/padic.hpp"

namespace iwagraph {

namespace {
long mod_pos(long v, long ell) {
  long r = v % ell;
  return r < 0 ? r + ell : r;
}
}  // namespace

QuadraticFormFl QuadraticFormFl::from_matrix(long ell, std::vector<std::vector<long>> m) {
  if (!is_odd_prime(Int(ell))) fail(Errc::validation, "ell must be an odd prime");
  const int n = static_cast<int>(m.size());
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(m[i].size()) != n) fail(Errc::validation, "matrix must be square");
    for (int j = 0; j < n; ++j) m[i][j] = mod_pos(m[i][j], ell);
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (m[i][j] != m[j][i]) fail(Errc::validation, "matrix must be symmetric");
  return QuadraticFormFl{ell, n, std::move(m)};
}

long QuadraticFormFl::evaluate(const std::vector<long>& x) const {
  long s = 0;
  for (int i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < n; ++j) s = (s + a[i][j] % ell * (x[i] * x[j] % ell)) % ell;
  }
  return mod_pos(s, ell);
}

bool QuadraticFormFl::is_zero_form() const {
  for (const auto& row : a)
    for (long v : row)
      if (v != 0) return false;
  return true;
}

Diagonalization diagonalize(const QuadraticFormFl& q) {
  const long ell = q.ell;
  const int n = q.n;
  auto m = q.a;

  // congruence ops: S -> E^t S E realized row+column-wise
  auto add_into = [&](int dst, int src, long c) {  // x_dst += c * x_src  (E adds col)
    for (int j = 0; j < n; ++j) m[dst][j] = mod_pos(m[dst][j] + c * m[src][j], ell);
    for (int i = 0; i < n; ++i) m[i][dst] = mod_pos(m[i][dst] + c * m[i][src], ell);
  };
  auto swap_vars = [&](int i, int j) {
    std::swap(m[i], m[j]);
    for (int r = 0; r < n; ++r) std::swap(m[r][i], m[r][j]);
  };

  for (int k = 0; k < n; ++k) {
    if (m[k][k] == 0) {
      int pivot = -1;
      for (int i = k; i < n && pivot < 0; ++i)
        if (m[i][i] != 0) pivot = i;
      if (pivot >= 0) {
        if (pivot != k) swap_vars(k, pivot);
      } else {
        // no nonzero diagonal entry; find an off-diagonal one and fold it in
        int bi = -1, bj = -1;
        for (int i = k; i < n && bi < 0; ++i)
          for (int j = i + 1; j < n; ++j)
            if (m[i][j] != 0) {
              bi = i;
              bj = j;
              break;
            }
        if (bi < 0) break;  // remaining block is zero
        if (bi != k) swap_vars(k, bi);
        add_into(k, bj == k ? bi : bj, 1);  // m[k][k] becomes 2*a_ij != 0 (ell odd)
      }
    }
    if (m[k][k] == 0) break;  // nothing left to pivot on
    // clear row/column k below
    Int inv;
    mpz_invert(inv.get_mpz_t(), Int(m[k][k]).get_mpz_t(), Int(ell).get_mpz_t());
    long pinv = inv.get_si();
    for (int i = k + 1; i < n; ++i) {
      if (m[i][k] == 0) continue;
      long c = mod_pos(-(m[i][k] * pinv % ell), ell);
      add_into(i, k, c);
    }
  }

  Diagonalization d;
  d.diag.resize(static_cast<std::size_t>(n));
  long disc = 1;
  d.rank = 0;
  for (int i = 0; i < n; ++i) {
    d.diag[static_cast<std::size_t>(i)] = m[i][i];
    if (m[i][i] != 0) {
      ++d.rank;
      disc = disc * m[i][i] % ell;
    }
  }
  d.eta_disc = (d.rank == 0) ? 0 : quadratic_character(Int(disc), Int(ell));
  return d;
}

Int count_zeros(const QuadraticFormFl& q) {
  if (q.is_zero_form()) fail(Errc::zero_form, "count_zeros needs a nonzero form");
  Diagonalization d = diagonalize(q);
  const Int ell(q.ell);
  Int base = pow_int(ell, static_cast<unsigned long>(q.n - 1));
  if (d.rank % 2 != 0) return base;
  int eta = quadratic_character(Int((d.rank / 2) % 2 == 0 ? 1 : -1), ell) * d.eta_disc;
  return base + (ell - 1) * pow_int(ell, static_cast<unsigned long>(q.n - d.rank / 2 - 1)) * eta;
}

Int count_level_set(const QuadraticFormFl& q, long b) {
  if (q.n % 2 != 0) fail(Errc::odd_dimension, "count_level_set requires even dimension");
  Diagonalization d = diagonalize(q);
  if (d.rank != q.n) fail(Errc::degenerate_form, "count_level_set requires a nondegenerate form");
  const Int ell(q.ell);
  long v = (mod_pos(b, q.ell) == 0) ? q.ell - 1 : -1;
  int eta = quadratic_character(Int((q.n / 2) % 2 == 0 ? 1 : -1), ell) * d.eta_disc;
  return pow_int(ell, static_cast<unsigned long>(q.n - 1)) +
         Int(v) * pow_int(ell, static_cast<unsigned long>((q.n - 2) / 2)) * eta;
}

Int warning_lower_bound(const std::vector<long>& degrees, long n, const Int& ell) {
  long d = std::accumulate(degrees.begin(), degrees.end(), 0L);
  if (d >= n) fail(Errc::degree_too_large, "degree sum must be smaller than the variable count");
  return pow_int(ell, static_cast<unsigned long>(n - d));
}

}  // namespace iwagraph
