// Operations on virtual characters: Adams, symmetric and exterior powers,
// the adjoint Adams operation, power pullbacks on abelian tables, the
// difference-composition expansion, line-class identities, and powers of the
// augmentation ideal.
#pragma once

#include <string>

#include "sympow/char_table.hpp"
#include "sympow/int_matrix.hpp"
#include "sympow/laurent.hpp"
#include "sympow/series.hpp"

namespace sympow {

// chi -> (g -> chi(g^k)); always integral on valid tables.
VirtualCharacter adams(long k, const VirtualCharacter& x);
// Matrix of adams(k) on the irreducible basis (columns = images).
IntMatrix adams_matrix(const CharTable& t, long k);

// A linear operation on the character ring, recorded in the irreducible
// basis together with its parameters.
struct OperationMatrix {
  TablePtr table;
  long k = 0;
  IntMatrix matrix;
};
OperationMatrix adams_operation(TablePtr t, long k);
OperationMatrix adams_adjoint_operation(TablePtr t, long k);
OperationMatrix power_pullback_operation(TablePtr t, long a);

// Newton recursion k*sigma^k(x) = sum_{i=1..k} psi^i(x) sigma^{k-i}(x),
// run over rationals with a final integrality assertion.
VirtualCharacter symmetric_power(long k, const VirtualCharacter& x);
// k*lambda^k(x) = sum_{i=1..k} (-1)^{i-1} psi^i(x) lambda^{k-i}(x).
VirtualCharacter exterior_power(long k, const VirtualCharacter& x);

// Adjoint of adams(k) for the character pairing: transpose matrix.
VirtualCharacter adams_adjoint(long k, const VirtualCharacter& x);
IntMatrix adams_adjoint_matrix(const CharTable& t, long k);

// Pullback along g -> g^a on an abelian table; on characters chi -> chi^a.
// Computed by locating the pointwise a-th power among the irreducible rows,
// independently of the power maps.
VirtualCharacter power_pullback(long a, const VirtualCharacter& x);
IntMatrix power_pullback_matrix(const CharTable& t, long a);

// Multiply two virtual characters (pointwise on class functions, then
// decomposed; integral for elements of the character ring).
VirtualCharacter multiply(const VirtualCharacter& x, const VirtualCharacter& y);

struct DifferenceExpansion {
  VirtualCharacter lhs;  // sigma^i(x - y) by the Newton recursion
  VirtualCharacter rhs;  // sum over a >= 0 and compositions b of i-a of
                         // (-1)^u sigma^a(x) prod_j sigma^{b_j}(y)
  bool equal;
};
DifferenceExpansion sigma_difference_expansion(long i, const VirtualCharacter& x,
                                               const VirtualCharacter& y);

struct BottCheck {
  long k = 0, kp = 0, order = 0;
  bool telescope_ok = false;  // theta^k(d) * sum_{i<k'} d^{ik} = sum_{i<kk'} d^i
  bool inverse_ok = false;    // theta^{-1} = sum_{i<k'} d^{ik} - theta^{-1} sum_{0<i<kk'} d^i
  bool unit_ok = false;       // theta * theta^{-1} = 1 mod u^N
  std::string witness;        // first failing difference, empty when all pass
  bool pass() const { return telescope_ok && inverse_ok && unit_ok; }
};
// Exact identities of the Bott element theta^k(d) = 1 + d + ... + d^{k-1},
// as Laurent polynomials in d and as truncated series in u = d - 1.
BottCheck bott_checks(long k, long kp, long order);

struct AugLattice {
  TablePtr table;
  long m = 0;
  // Basis of I^m in the rank-(r-1) lattice I, column HNF. Coordinates are
  // over the I-basis chi_i - deg(chi_i) * 1, i != trivial index.
  IntMatrix basis;
};

struct AugReport {
  AugLattice lattice;
  Int index;           // [I : I^m]
  bool chain_ok;       // I^m contained in I^{m-1}
  long prime = 0;      // l when the group order is a prime power, else 0
  long least_a = -1;   // least a with l^a * I contained in I^m (prime power case)
  bool index_is_prime_power = true;
};
AugReport augmentation_power_lattice(TablePtr t, long m);

}  // namespace sympow
