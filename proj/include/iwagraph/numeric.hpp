#pragma once

#include <gmpxx.h>

#include <limits>
#include <string>
#include <vector>

namespace iwagraph {

using Int = mpz_class;
using Rat = mpq_class;

// Valuation of 0 (no finite ord_ell exists).
inline constexpr long kInfiniteValuation = std::numeric_limits<long>::max();

// Largest e with ell^e | n; kInfiniteValuation for n = 0.
long val_ell(const Int& n, const Int& ell);

Int pow_int(const Int& base, unsigned long exp);
Int factorial(unsigned long n);
Int binomial(const Int& a, unsigned long n);  // C(a, n), a may be negative
Int binomial_uu(unsigned long n, unsigned long k);

bool is_odd_prime(const Int& ell);

// Fraction-free (Bareiss) determinant over Z; destroys m.
Int det_bareiss(std::vector<std::vector<Int>>& m);

// Decimal expansion of a non-negative rational with `sig` significant digits
// (round half away from zero), in plain or scientific form matching magnitude.
std::string to_decimal_string(const Rat& value, int sig);

Rat rat_pow(const Rat& base, long exp);  // exp may be negative

}  // namespace iwagraph
