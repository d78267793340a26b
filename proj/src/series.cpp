#include "sympow/series.hpp"

#include <stdexcept>

namespace sympow {

TruncSeries::TruncSeries(long order) : order_(order) {
  if (order < 1) throw std::invalid_argument("TruncSeries: order must be >= 1");
  c_.assign(static_cast<size_t>(order), Rat(0));
}

TruncSeries::TruncSeries(long order, std::vector<Rat> coeffs) : TruncSeries(order) {
  for (size_t i = 0; i < c_.size() && i < coeffs.size(); ++i) c_[i] = std::move(coeffs[i]);
}

TruncSeries TruncSeries::constant(long order, const Rat& r) {
  TruncSeries s(order);
  s.c_[0] = r;
  return s;
}

TruncSeries TruncSeries::monomial(long order, long k, const Rat& r) {
  TruncSeries s(order);
  if (k < 0) throw std::invalid_argument("TruncSeries::monomial: negative exponent");
  if (k < order) s.c_[static_cast<size_t>(k)] = r;
  return s;
}

void TruncSeries::check_order(const TruncSeries& o) const {
  if (order_ != o.order_) throw std::invalid_argument("TruncSeries: truncation order mismatch");
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
  check_order(o);
  TruncSeries r(order_);
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] + o.c_[i];
  return r;
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const {
  check_order(o);
  TruncSeries r(order_);
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] - o.c_[i];
  return r;
}

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
  check_order(o);
  TruncSeries r(order_);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; i + j < c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
  }
  return r;
}

TruncSeries TruncSeries::pow(long k) const {
  if (k < 0) throw std::invalid_argument("TruncSeries::pow: negative exponent");
  TruncSeries acc = constant(order_, Rat(1));
  TruncSeries base = *this;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

bool TruncSeries::is_one() const {
  if (c_[0] != 1) return false;
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

TruncSeries series_invert(const TruncSeries& f) {
  if (f.coeff(0) == 0) throw std::domain_error("series_invert: zero constant term");
  const long N = f.order();
  std::vector<Rat> g(static_cast<size_t>(N), Rat(0));
  const Rat inv0 = Rat(1) / f.coeff(0);
  g[0] = inv0;
  for (long m = 1; m < N; ++m) {
    Rat acc(0);
    for (long i = 1; i <= m; ++i) acc += f.coeff(i) * g[static_cast<size_t>(m - i)];
    g[static_cast<size_t>(m)] = -inv0 * acc;
  }
  return TruncSeries(N, std::move(g));
}

}  // namespace sympow
