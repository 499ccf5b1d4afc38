#include "iwagraph/padic.hpp"

#include <algorithm>

#include "iwagraph/errors.hpp"

namespace iwagraph {

namespace {
Int mod_pos(const Int& a, const Int& m) {
  Int r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}
}  // namespace

bool padic_equal(const PadicInt& a, const PadicInt& b, const Int& ell) {
  if (a.exact() && b.exact()) return a.rep == b.rep;
  long p = kInfiniteValuation;
  if (a.precision) p = std::min(p, *a.precision);
  if (b.precision) p = std::min(p, *b.precision);
  Int mod = pow_int(ell, static_cast<unsigned long>(p));
  return mod_pos(a.rep, mod) == mod_pos(b.rep, mod);
}

Int padic_residue(const PadicInt& a, const Int& ell, long n) {
  if (!a.exact() && *a.precision < n)
    fail(Errc::precision_exhausted, "residue mod ell^" + std::to_string(n) +
                                        " exceeds stored precision");
  return mod_pos(a.rep, pow_int(ell, static_cast<unsigned long>(n)));
}

bool padic_is_unit(const PadicInt& a, const Int& ell) {
  if (!a.exact() && *a.precision < 1)
    fail(Errc::precision_exhausted, "unit test needs precision >= 1");
  return a.rep % ell != 0;
}

bool padic_is_zero_exactly(const PadicInt& a) { return a.exact() && a.rep == 0; }

int quadratic_character(const Int& a, const Int& ell) {
  Int r = mod_pos(a, ell);
  if (r == 0) return 0;
  Int e = (ell - 1) / 2;
  Int p;
  mpz_powm(p.get_mpz_t(), r.get_mpz_t(), e.get_mpz_t(), ell.get_mpz_t());
  return p == 1 ? 1 : -1;
}

}  // namespace iwagraph
