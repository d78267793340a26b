// Truncated power series over Q: arithmetic modulo u^N.
#pragma once

#include <vector>

#include "sympow/rational.hpp"

namespace sympow {

class TruncSeries {
 public:
  explicit TruncSeries(long order);
  TruncSeries(long order, std::vector<Rat> coeffs);  // truncated or zero-padded to length N

  long order() const { return order_; }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(long i) const { return c_.at(static_cast<size_t>(i)); }

  static TruncSeries constant(long order, const Rat& r);
  static TruncSeries monomial(long order, long k, const Rat& r);

  TruncSeries operator+(const TruncSeries& o) const;
  TruncSeries operator-(const TruncSeries& o) const;
  TruncSeries operator*(const TruncSeries& o) const;
  bool operator==(const TruncSeries& o) const { return order_ == o.order_ && c_ == o.c_; }

  TruncSeries pow(long k) const;
  bool is_one() const;

 private:
  void check_order(const TruncSeries& o) const;
  long order_;
  std::vector<Rat> c_;
};

// g with f*g == 1 mod u^N; requires a nonzero constant term.
TruncSeries series_invert(const TruncSeries& f);

}  // namespace sympow
