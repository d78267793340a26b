// Exact arbitrary-precision integers and rationals, backed by GMP.
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace sympow {

using Int = mpz_class;
using Rat = mpq_class;

// n/d in canonical form (gcd 1, positive denominator).
inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Int int_gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int int_lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

inline Int int_pow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline bool is_integral(const Rat& r) { return r.get_den() == 1; }

inline Int to_int(const Rat& r) {
  if (!is_integral(r)) throw std::domain_error("to_int: non-integral rational " + r.get_str());
  return r.get_num();
}

inline long mod_inverse(long a, long m) {
  if (m <= 0) throw std::invalid_argument("mod_inverse: modulus must be positive");
  Int inv;
  Int am = ((a % m) + m) % m;
  Int mm = m;
  if (mpz_invert(inv.get_mpz_t(), am.get_mpz_t(), mm.get_mpz_t()) == 0)
    throw std::domain_error("mod_inverse: not invertible");
  return inv.get_si();
}

inline long euler_phi(long e) {
  if (e < 1) throw std::invalid_argument("euler_phi: argument must be >= 1");
  long phi = e, n = e;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      phi -= phi / p;
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) phi -= phi / n;
  return phi;
}

}  // namespace sympow
