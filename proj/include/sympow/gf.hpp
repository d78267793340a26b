// Finite fields F_q for prime powers q, with elements encoded as integers
// in [0, q): the element sum c_i x^i maps to sum c_i p^i. Multiplication
// uses discrete-log tables over a fixed generator, so the construction is
// deterministic.
#pragma once

#include <vector>

namespace sympow {

class GF {
 public:
  explicit GF(long q);  // throws unless q is a prime power

  long q() const { return q_; }
  long p() const { return p_; }
  long degree() const { return m_; }

  long add(long a, long b) const;
  long neg(long a) const;
  long sub(long a, long b) const { return add(a, neg(b)); }
  long mul(long a, long b) const;
  long inv(long a) const;
  long pow(long a, long k) const;
  long multiplicative_order(long a) const;
  // Smallest encoded element of exact multiplicative order d; requires d | q-1.
  long element_of_order(long d) const;

 private:
  long q_, p_, m_;
  std::vector<long> exp_;  // exp_[i] = g^i, length q-1
  std::vector<long> log_;  // log_[a] for a != 0
};

bool is_prime_power(long q, long* prime = nullptr, long* exponent = nullptr);

}  // namespace sympow
