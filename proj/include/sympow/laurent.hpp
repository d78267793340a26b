// Laurent polynomials with integer coefficients in one symbol d.
#pragma once

#include <string>
#include <vector>

#include "sympow/rational.hpp"

namespace sympow {

class LaurentPoly {
 public:
  LaurentPoly() = default;  // zero
  static LaurentPoly monomial(long exp, Int coeff = Int(1));
  // 1 + d + ... + d^{k-1}
  static LaurentPoly geometric_sum(long k);
  // sum_{i=lo}^{hi} d^{i*step}
  static LaurentPoly power_sum(long lo, long hi, long step = 1);

  bool is_zero() const { return c_.empty(); }
  long min_exp() const { return lo_; }
  long max_exp() const { return lo_ + static_cast<long>(c_.size()) - 1; }
  Int coeff(long exp) const;

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  bool operator==(const LaurentPoly& o) const { return lo_ == o.lo_ && c_ == o.c_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  std::string str() const;

 private:
  LaurentPoly(long lo, std::vector<Int> c) : lo_(lo), c_(std::move(c)) { trim(); }
  void trim();
  long lo_ = 0;
  std::vector<Int> c_;  // coeff of d^{lo_ + i}; canonical: no zero ends
};

}  // namespace sympow
