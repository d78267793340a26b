#include "sympow/gf.hpp"

#include <numeric>
#include <stdexcept>

namespace sympow {

namespace {

// Polynomials over F_p as coefficient vectors, lowest degree first.
using PolyP = std::vector<long>;

void trim(PolyP& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

PolyP mul_mod(const PolyP& a, const PolyP& b, const PolyP& modulus, long p) {
  PolyP r(a.size() + b.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  trim(r);
  // reduce modulo the monic modulus
  const long dm = static_cast<long>(modulus.size()) - 1;
  while (static_cast<long>(r.size()) - 1 >= dm) {
    long d = static_cast<long>(r.size()) - 1;
    long lead = r.back();
    for (long i = 0; i <= dm; ++i) {
      long idx = d - dm + i;
      r[static_cast<size_t>(idx)] =
          ((r[static_cast<size_t>(idx)] - lead * modulus[static_cast<size_t>(i)]) % p + p) % p;
    }
    trim(r);
  }
  return r;
}

long encode(const PolyP& a, long p) {
  long v = 0;
  for (size_t i = a.size(); i-- > 0;) v = v * p + a[i];
  return v;
}

PolyP decode(long v, long p, long m) {
  PolyP a(static_cast<size_t>(m), 0);
  for (long i = 0; i < m; ++i) {
    a[static_cast<size_t>(i)] = v % p;
    v /= p;
  }
  trim(a);
  return a;
}

bool poly_is_irreducible(const PolyP& f, long p,
                         const std::vector<PolyP>& lower_irreducibles) {
  // trial division by all known irreducibles of degree <= deg(f)/2
  const long df = static_cast<long>(f.size()) - 1;
  for (const PolyP& g : lower_irreducibles) {
    const long dg = static_cast<long>(g.size()) - 1;
    if (dg > df / 2) continue;
    // remainder of f by monic g
    PolyP r = f;
    while (static_cast<long>(r.size()) - 1 >= dg) {
      long d = static_cast<long>(r.size()) - 1;
      long lead = r.back();
      for (long i = 0; i <= dg; ++i) {
        long idx = d - dg + i;
        r[static_cast<size_t>(idx)] =
            ((r[static_cast<size_t>(idx)] - lead * g[static_cast<size_t>(i)]) % p + p) % p;
      }
      trim(r);
    }
    if (r.empty()) return false;
  }
  return true;
}

// Deterministic monic irreducible of degree m over F_p: smallest by encoding.
PolyP find_irreducible(long p, long m) {
  // enumerate all monic irreducibles of degree < m first (for trial division)
  std::vector<PolyP> irr;
  for (long d = 1; d < m; ++d) {
    long count = 1;
    for (long i = 0; i < d; ++i) count *= p;
    for (long low = 0; low < count; ++low) {
      PolyP f = decode(low, p, d);
      f.resize(static_cast<size_t>(d) + 1, 0);
      f[static_cast<size_t>(d)] = 1;
      if (poly_is_irreducible(f, p, irr)) irr.push_back(f);
    }
  }
  long count = 1;
  for (long i = 0; i < m; ++i) count *= p;
  for (long low = 0; low < count; ++low) {
    PolyP f = decode(low, p, m);
    f.resize(static_cast<size_t>(m) + 1, 0);
    f[static_cast<size_t>(m)] = 1;
    if (poly_is_irreducible(f, p, irr)) return f;
  }
  throw std::logic_error("find_irreducible: none found");
}

}  // namespace

bool is_prime_power(long q, long* prime, long* exponent) {
  if (q < 2) return false;
  long n = q;
  long p = 0;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      p = d;
      break;
    }
  if (p == 0) p = n;
  long m = 0;
  while (n % p == 0) {
    n /= p;
    ++m;
  }
  if (n != 1) return false;
  if (prime) *prime = p;
  if (exponent) *exponent = m;
  return true;
}

GF::GF(long q) : q_(q) {
  if (!is_prime_power(q, &p_, &m_))
    throw std::invalid_argument("GF: " + std::to_string(q) + " is not a prime power");

  PolyP modulus;
  if (m_ == 1) {
    modulus = {0, 1};  // unused for degree 1; reduction is plain mod p
  } else {
    modulus = find_irreducible(p_, m_);
  }

  // find a generator of the multiplicative group
  std::vector<long> prime_factors;
  long r = q_ - 1;
  for (long d = 2; d * d <= r; ++d)
    if (r % d == 0) {
      prime_factors.push_back(d);
      while (r % d == 0) r /= d;
    }
  if (r > 1) prime_factors.push_back(r);

  auto pow_enc = [&](long base, long k) {
    PolyP acc = {1};
    PolyP b = decode(base, p_, m_);
    while (k > 0) {
      if (k & 1) acc = mul_mod(acc, b, modulus, p_);
      b = mul_mod(b, b, modulus, p_);
      k >>= 1;
    }
    return encode(acc, p_);
  };

  long gen = 0;
  for (long a = 2; a < q_; ++a) {
    bool ok = pow_enc(a, q_ - 1) == 1;
    for (long f : prime_factors)
      if (ok && pow_enc(a, (q_ - 1) / f) == 1) ok = false;
    if (ok) {
      gen = a;
      break;
    }
  }
  if (gen == 0 && q_ > 2) throw std::logic_error("GF: no generator found");
  if (q_ == 2) gen = 1;

  exp_.assign(static_cast<size_t>(q_ - 1), 1);
  log_.assign(static_cast<size_t>(q_), -1);
  PolyP g = decode(gen, p_, m_);
  PolyP cur = {1};
  for (long i = 0; i < q_ - 1; ++i) {
    long enc = encode(cur, p_);
    exp_[static_cast<size_t>(i)] = enc;
    log_[static_cast<size_t>(enc)] = i;
    cur = mul_mod(cur, g, modulus, p_);
  }
  if (encode(cur, p_) != 1) throw std::logic_error("GF: generator order mismatch");
}

long GF::add(long a, long b) const {
  long r = 0, mult = 1;
  for (long i = 0; i < m_; ++i) {
    r += ((a % p_ + b % p_) % p_) * mult;
    a /= p_;
    b /= p_;
    mult *= p_;
  }
  return r;
}

long GF::neg(long a) const {
  long r = 0, mult = 1;
  for (long i = 0; i < m_; ++i) {
    r += ((p_ - a % p_) % p_) * mult;
    a /= p_;
    mult *= p_;
  }
  return r;
}

long GF::mul(long a, long b) const {
  if (a == 0 || b == 0) return 0;
  long la = log_[static_cast<size_t>(a)] + log_[static_cast<size_t>(b)];
  return exp_[static_cast<size_t>(la % (q_ - 1))];
}

long GF::inv(long a) const {
  if (a == 0) throw std::domain_error("GF::inv: zero");
  long la = (q_ - 1 - log_[static_cast<size_t>(a)]) % (q_ - 1);
  return exp_[static_cast<size_t>(la)];
}

long GF::pow(long a, long k) const {
  if (a == 0) {
    if (k < 0) throw std::domain_error("GF::pow: zero to negative power");
    return k == 0 ? 1 : 0;
  }
  long la = log_[static_cast<size_t>(a)];
  long r = q_ - 1;
  long km = ((k % r) + r) % r;
  return exp_[static_cast<size_t>((la * km) % r)];
}

long GF::multiplicative_order(long a) const {
  if (a == 0) throw std::domain_error("GF::multiplicative_order: zero");
  long la = log_[static_cast<size_t>(a)];
  return (q_ - 1) / std::gcd(la, q_ - 1);
}

long GF::element_of_order(long d) const {
  if (d < 1 || (q_ - 1) % d != 0)
    throw std::invalid_argument("GF::element_of_order: order must divide q-1");
  for (long a = 1; a < q_; ++a)
    if (multiplicative_order(a) == d) return a;
  throw std::logic_error("GF::element_of_order: none found");
}

}  // namespace sympow
