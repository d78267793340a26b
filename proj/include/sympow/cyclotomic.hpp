// Exact elements of Q(zeta_e) in the power basis zeta^0 .. zeta^{phi(e)-1}.
//
// Values are kept reduced modulo Phi_e, so equality is coefficient-vector
// equality. Mixed-order arithmetic is rejected; callers fix one order up
// front (the exponent of the relevant group).
#pragma once

#include <string>
#include <vector>

#include "sympow/poly.hpp"
#include "sympow/rational.hpp"

namespace sympow {

class CycNumber {
 public:
  // Reduces an arbitrary-length coefficient vector over zeta^0, zeta^1, ...
  // modulo Phi_e into the canonical power basis.
  CycNumber(long order, std::vector<Rat> raw_coeffs);

  static CycNumber zero(long order) { return CycNumber(order, {}); }
  static CycNumber one(long order) { return from_rat(order, Rat(1)); }
  static CycNumber from_rat(long order, const Rat& r) { return CycNumber(order, {r}); }
  // zeta_e^k
  static CycNumber root_power(long order, long k);

  long order() const { return order_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  CycNumber operator+(const CycNumber& o) const;
  CycNumber operator-(const CycNumber& o) const;
  CycNumber operator*(const CycNumber& o) const;
  CycNumber operator-() const;
  CycNumber& operator+=(const CycNumber& o) { return *this = *this + o; }

  CycNumber scaled(const Rat& r) const;
  // Galois map zeta -> zeta^t; requires gcd(t, order) = 1.
  CycNumber galois(long t) const;
  // Complex conjugation zeta -> zeta^{-1}.
  CycNumber conj() const;
  CycNumber pow(long k) const;

  bool is_zero() const;
  bool is_rational() const;
  Rat rational_value() const;  // throws if not rational
  bool is_rational_integer() const;
  Int integer_value() const;  // throws if not a rational integer

  bool operator==(const CycNumber& o) const { return order_ == o.order_ && c_ == o.c_; }
  bool operator!=(const CycNumber& o) const { return !(*this == o); }

  std::string str() const;

 private:
  void check_same_order(const CycNumber& o) const;
  long order_;
  std::vector<Rat> c_;  // length phi(order_)
};

enum class CycOp { add, mul, conj };

// Dispatcher form used by the CLI; conj ignores b.
CycNumber cyc_arith(CycOp op, const CycNumber& a, const CycNumber* b);

inline CycNumber galois_apply(const CycNumber& a, long t) { return a.galois(t); }

}  // namespace sympow
