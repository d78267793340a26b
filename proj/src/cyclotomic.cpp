#include "sympow/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace sympow {

namespace {

// Phi_e with rational coefficients, cached: reduction divides by it constantly.
const RatPoly& cyclotomic_rat(long e) {
  static std::map<long, RatPoly> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lk(mtx);
  auto it = cache.find(e);
  if (it != cache.end()) return it->second;
  const IntPoly phi = cyclotomic_polynomial(e);
  std::vector<Rat> c;
  c.reserve(phi.coeffs().size());
  for (const Int& a : phi.coeffs()) c.emplace_back(a);
  return cache.emplace(e, RatPoly(std::move(c))).first->second;
}

}  // namespace

CycNumber::CycNumber(long order, std::vector<Rat> raw_coeffs) : order_(order) {
  if (order < 1) throw std::invalid_argument("CycNumber: order must be >= 1");
  const long phi = euler_phi(order);
  RatPoly p(std::move(raw_coeffs));
  if (p.degree() >= phi) p = p.divmod_monic(cyclotomic_rat(order)).remainder;
  c_.assign(static_cast<size_t>(phi), Rat(0));
  for (long i = 0; i <= p.degree(); ++i) c_[static_cast<size_t>(i)] = p.coeff(i);
}

CycNumber CycNumber::root_power(long order, long k) {
  k %= order;
  if (k < 0) k += order;
  std::vector<Rat> raw(static_cast<size_t>(k) + 1, Rat(0));
  raw.back() = 1;
  return CycNumber(order, std::move(raw));
}

void CycNumber::check_same_order(const CycNumber& o) const {
  if (order_ != o.order_)
    throw std::invalid_argument("CycNumber: mixed orders " + std::to_string(order_) + " and " +
                                std::to_string(o.order_));
}

CycNumber CycNumber::operator+(const CycNumber& o) const {
  check_same_order(o);
  std::vector<Rat> r = c_;
  for (size_t i = 0; i < r.size(); ++i) r[i] += o.c_[i];
  return CycNumber(order_, std::move(r));
}

CycNumber CycNumber::operator-(const CycNumber& o) const {
  check_same_order(o);
  std::vector<Rat> r = c_;
  for (size_t i = 0; i < r.size(); ++i) r[i] -= o.c_[i];
  return CycNumber(order_, std::move(r));
}

CycNumber CycNumber::operator*(const CycNumber& o) const {
  check_same_order(o);
  RatPoly prod = RatPoly(c_) * RatPoly(o.c_);
  return CycNumber(order_, prod.coeffs());
}

CycNumber CycNumber::operator-() const {
  std::vector<Rat> r = c_;
  for (auto& x : r) x = -x;
  return CycNumber(order_, std::move(r));
}

CycNumber CycNumber::scaled(const Rat& r) const {
  std::vector<Rat> v = c_;
  for (auto& x : v) x *= r;
  return CycNumber(order_, std::move(v));
}

CycNumber CycNumber::galois(long t) const {
  long tm = ((t % order_) + order_) % order_;
  if (int_gcd(Int(tm), Int(order_)) != 1)
    throw std::invalid_argument("galois: exponent not coprime to order");
  std::vector<Rat> raw(static_cast<size_t>(order_), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i)
    raw[static_cast<size_t>((static_cast<long>(i) * tm) % order_)] += c_[i];
  return CycNumber(order_, std::move(raw));
}

CycNumber CycNumber::conj() const {
  std::vector<Rat> raw(static_cast<size_t>(order_), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i)
    raw[static_cast<size_t>((order_ - static_cast<long>(i)) % order_)] += c_[i];
  return CycNumber(order_, std::move(raw));
}

CycNumber CycNumber::pow(long k) const {
  if (k < 0) throw std::invalid_argument("CycNumber::pow: negative exponent");
  CycNumber acc = one(order_);
  CycNumber base = *this;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

bool CycNumber::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool CycNumber::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rat CycNumber::rational_value() const {
  if (!is_rational()) throw std::domain_error("CycNumber: value is not rational: " + str());
  return c_.empty() ? Rat(0) : c_[0];
}

bool CycNumber::is_rational_integer() const { return is_rational() && is_integral(rational_value()); }

Int CycNumber::integer_value() const { return to_int(rational_value()); }

std::string CycNumber::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    os << c_[i].get_str();
    if (i > 0) os << "*z" << order_ << "^" << i;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

CycNumber cyc_arith(CycOp op, const CycNumber& a, const CycNumber* b) {
  switch (op) {
    case CycOp::add:
      if (!b) throw std::invalid_argument("cyc_arith: add needs two operands");
      return a + *b;
    case CycOp::mul:
      if (!b) throw std::invalid_argument("cyc_arith: mul needs two operands");
      return a * *b;
    case CycOp::conj:
      return a.conj();
  }
  throw std::logic_error("cyc_arith: unreachable");
}

}  // namespace sympow
