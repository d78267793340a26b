// Simulator of a totally tamely ramified cyclic Kummer cover of complete
// local rings over a finite field: X = k[[t]] with the order-e cyclic group
// acting by t -> zeta*t over Y = k[[s]], s = t^e. Torsion classes of
// equivariant modules are recorded as multiplicity vectors over the
// characters chi^0..chi^{e-1} of the inertia action.
#pragma once

#include <string>
#include <vector>

#include "sympow/gf.hpp"
#include "sympow/rational.hpp"

namespace sympow {

struct Cover {
  long q = 0;     // residue field size
  long e = 1;     // ramification index = group order
  long zeta = 1;  // chosen root of unity of exact order e (field encoding)
  GF field;
  long different_exponent() const { return e - 1; }
};

// Requires q a prime power with e | q-1 (tameness); zeta is the smallest
// encoded element of exact order e.
Cover setup_cover(long q, long e);

class TorsionClass {
 public:
  TorsionClass(long e, std::vector<Int> mult);
  static TorsionClass zero(long e);
  static TorsionClass regular(long e);  // r_G: one copy of each character

  long e() const { return e_; }
  const std::vector<Int>& multiplicities() const { return m_; }

  TorsionClass operator+(const TorsionClass& o) const;
  TorsionClass operator-(const TorsionClass& o) const;
  bool operator==(const TorsionClass& o) const { return e_ == o.e_ && m_ == o.m_; }
  bool operator!=(const TorsionClass& o) const { return !(*this == o); }

  bool is_multiple_of_regular() const;
  std::string str() const;

 private:
  long e_;
  std::vector<Int> m_;
};

// Subtract (min coordinate) * r_G; canonical representative modulo the image
// of induction from the trivial subgroup.
TorsionClass reduce_mod_ind(const TorsionClass& c);

// Class of P^a / P^b as a pushforward to Y: weights of t^a .. t^{b-1}.
TorsionClass fractional_quotient_class(const Cover& cov, long a, long b);

struct ResolventResult {
  TorsionClass cls;
  long det_valuation = 0;  // s-valuation of the resolvent matrix determinant
  long truncation = 0;     // power of s the cokernel was computed modulo
};

// Cokernel class of a (x) b -> sum_g a g(b) (x) [g^{-1}] on
// (pushforward of O_X) (x) (pushforward of P^j); the truncation order
// defaults to the determinant valuation, which annihilates the cokernel.
ResolventResult resolvent_class(const Cover& cov, long j);
ResolventResult resolvent_class_at(const Cover& cov, long j, long truncation);

struct CoverCheck {
  std::string identity;
  TorsionClass lhs, rhs;
  long det_valuation = 0;
  bool pass = false;
};

// resolvent class = sum_{i=1..e-1} i * chi^{j+i}, exactly.
CoverCheck check_chase_identity(const Cover& cov, long j);
// resolvent class = sum_{i=1..e-1} class(P^{j-i(e-1)} / O_X) modulo integer
// multiples of the regular character; requires j <= 0.
CoverCheck check_different_identity(const Cover& cov, long j);

}  // namespace sympow
