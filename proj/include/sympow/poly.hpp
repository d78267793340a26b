// Dense univariate polynomials over Int or Rat, plus cyclotomic polynomials.
#pragma once

#include <vector>

#include "sympow/rational.hpp"

namespace sympow {

// Coefficient of x^i at index i; trailing zeros trimmed, zero polynomial is empty.
template <typename C>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<C> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly monomial(long deg, C coeff) {
    std::vector<C> v(static_cast<size_t>(deg) + 1, C(0));
    v.back() = std::move(coeff);
    return Poly(std::move(v));
  }

  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<C>& coeffs() const { return c_; }
  C coeff(long i) const {
    return (i >= 0 && i < static_cast<long>(c_.size())) ? c_[static_cast<size_t>(i)] : C(0);
  }

  Poly operator+(const Poly& o) const {
    std::vector<C> r(std::max(c_.size(), o.c_.size()), C(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return Poly(std::move(r));
  }
  Poly operator-(const Poly& o) const {
    std::vector<C> r(std::max(c_.size(), o.c_.size()), C(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return Poly(std::move(r));
  }
  Poly operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<C> r(c_.size() + o.c_.size() - 1, C(0));
    for (size_t i = 0; i < c_.size(); ++i)
      for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return Poly(std::move(r));
  }
  bool operator==(const Poly& o) const { return c_ == o.c_; }

  // Division by a monic divisor; exact in any coefficient ring.
  struct DivMod {
    Poly quotient, remainder;
  };
  DivMod divmod_monic(const Poly& d) const {
    if (d.is_zero() || d.c_.back() != C(1))
      throw std::invalid_argument("divmod_monic: divisor must be monic");
    std::vector<C> rem = c_;
    long dd = d.degree();
    long qdeg = degree() - dd;
    if (qdeg < 0) return {Poly(), *this};
    std::vector<C> q(static_cast<size_t>(qdeg) + 1, C(0));
    for (long i = degree(); i >= dd; --i) {
      C lead = rem[static_cast<size_t>(i)];
      if (lead == C(0)) continue;
      q[static_cast<size_t>(i - dd)] = lead;
      for (long j = 0; j <= dd; ++j)
        rem[static_cast<size_t>(i - dd + j)] -= lead * d.c_[static_cast<size_t>(j)];
    }
    return {Poly(std::move(q)), Poly(std::move(rem))};
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == C(0)) c_.pop_back();
  }
  std::vector<C> c_;
};

using IntPoly = Poly<Int>;
using RatPoly = Poly<Rat>;

// Phi_e, computed by exact division of x^e - 1 by the Phi_d of the proper divisors.
IntPoly cyclotomic_polynomial(long e);

}  // namespace sympow
