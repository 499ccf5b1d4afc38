#include "iwagraph/numeric.hpp"

#include <cstdlib>
#include <sstream>

#include "iwagraph/errors.hpp"

namespace iwagraph {

long val_ell(const Int& n, const Int& ell) {
  if (n == 0) return kInfiniteValuation;
  Int reduced;
  return static_cast<long>(mpz_remove(reduced.get_mpz_t(), n.get_mpz_t(), ell.get_mpz_t()));
}

Int pow_int(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Int binomial(const Int& a, unsigned long n) {
  Int r;
  mpz_bin_ui(r.get_mpz_t(), a.get_mpz_t(), n);
  return r;
}

Int binomial_uu(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

bool is_odd_prime(const Int& ell) {
  if (ell < 3 || ell % 2 == 0) return false;
  return mpz_probab_prime_p(ell.get_mpz_t(), 40) != 0;
}

Int det_bareiss(std::vector<std::vector<Int>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t pivot = k;
      while (pivot < n && m[pivot][k] == 0) ++pivot;
      if (pivot == n) return 0;
      std::swap(m[k], m[pivot]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : Int(-m[n - 1][n - 1]);
}

std::string to_decimal_string(const Rat& value, int sig) {
  if (value < 0) return "-" + to_decimal_string(Rat(-value), sig);
  if (value == 0) return "0";
  const Int& num = value.get_num();
  const Int& den = value.get_den();
  auto value_at_least = [&](long exp) {  // value >= 10^exp ?
    if (exp >= 0) return num >= den * pow_int(10, static_cast<unsigned long>(exp));
    return num * pow_int(10, static_cast<unsigned long>(-exp)) >= den;
  };
  // exponent e with 10^e <= value < 10^(e+1)
  long e = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 10));
  while (!value_at_least(e)) --e;
  while (value_at_least(e + 1)) ++e;
  // digits = round(value / 10^(e - sig + 1))
  long shift = sig - 1 - e;
  Int scaled_num = num;
  Int scaled_den = den;
  if (shift >= 0) {
    scaled_num *= pow_int(10, static_cast<unsigned long>(shift));
  } else {
    scaled_den *= pow_int(10, static_cast<unsigned long>(-shift));
  }
  Int q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), scaled_num.get_mpz_t(), scaled_den.get_mpz_t());
  if (2 * r >= scaled_den) q += 1;
  std::string digits = q.get_str();
  if (static_cast<int>(digits.size()) > sig) {  // rounding overflowed, e.g. 99.95 -> 100
    ++e;
    digits.pop_back();
  }
  while (static_cast<int>(digits.size()) < sig) digits.insert(digits.begin(), '0');

  std::ostringstream out;
  if (e >= -4 && e < sig + 4) {
    if (e >= 0) {
      std::string head = digits.substr(0, static_cast<std::size_t>(e) + 1);
      std::string tail = digits.substr(static_cast<std::size_t>(e) + 1);
      out << head;
      if (!tail.empty()) out << "." << tail;
    } else {
      out << "0.";
      for (long i = 0; i < -e - 1; ++i) out << '0';
      out << digits;
    }
  } else {
    out << digits.substr(0, 1);
    if (digits.size() > 1) out << "." << digits.substr(1);
    out << "e" << e;
  }
  return out.str();
}

Rat rat_pow(const Rat& base, long exp) {
  if (exp == 0) return Rat(1);
  Rat b = base;
  if (exp < 0) {
    if (base == 0) fail(Errc::validation, "zero to a negative power");
    b = Rat(base.get_den(), base.get_num());
    exp = -exp;
  }
  Rat r(1);
  while (exp > 0) {
    if (exp & 1) r *= b;
    b *= b;
    exp >>= 1;
  }
  r.canonicalize();
  return r;
}

}  // namespace iwagraph
