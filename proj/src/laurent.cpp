#include "sympow/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sympow {

void LaurentPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
  size_t lead = 0;
  while (lead < c_.size() && c_[lead] == 0) ++lead;
  if (lead > 0) {
    c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
    lo_ += static_cast<long>(lead);
  }
  if (c_.empty()) lo_ = 0;
}

LaurentPoly LaurentPoly::monomial(long exp, Int coeff) {
  if (coeff == 0) return LaurentPoly();
  return LaurentPoly(exp, {std::move(coeff)});
}

LaurentPoly LaurentPoly::geometric_sum(long k) {
  if (k < 0) throw std::invalid_argument("geometric_sum: negative length");
  if (k == 0) return LaurentPoly();
  return LaurentPoly(0, std::vector<Int>(static_cast<size_t>(k), Int(1)));
}

LaurentPoly LaurentPoly::power_sum(long lo, long hi, long step) {
  if (step == 0) throw std::invalid_argument("power_sum: zero step");
  LaurentPoly acc;
  for (long i = lo; i <= hi; ++i) acc = acc + monomial(i * step);
  return acc;
}

Int LaurentPoly::coeff(long exp) const {
  if (exp < lo_ || exp > max_exp() || c_.empty()) return Int(0);
  return c_[static_cast<size_t>(exp - lo_)];
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  long lo = std::min(lo_, o.lo_);
  long hi = std::max(max_exp(), o.max_exp());
  std::vector<Int> r(static_cast<size_t>(hi - lo + 1), Int(0));
  for (long e = lo; e <= hi; ++e) r[static_cast<size_t>(e - lo)] = coeff(e) + o.coeff(e);
  return LaurentPoly(lo, std::move(r));
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  long lo = std::min(lo_, o.lo_);
  long hi = std::max(max_exp(), o.max_exp());
  if (is_zero() && o.is_zero()) return LaurentPoly();
  std::vector<Int> r(static_cast<size_t>(hi - lo + 1), Int(0));
  for (long e = lo; e <= hi; ++e) r[static_cast<size_t>(e - lo)] = coeff(e) - o.coeff(e);
  return LaurentPoly(lo, std::move(r));
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  if (is_zero() || o.is_zero()) return LaurentPoly();
  std::vector<Int> r(c_.size() + o.c_.size() - 1, Int(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return LaurentPoly(lo_ + o.lo_, std::move(r));
}

std::string LaurentPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    long e = lo_ + static_cast<long>(i);
    if (!first) os << " + ";
    if (e == 0)
      os << c_[i].get_str();
    else {
      if (c_[i] != 1) os << c_[i].get_str() << "*";
      os << "d^" << e;
    }
    first = false;
  }
  return os.str();
}

}  // namespace sympow
