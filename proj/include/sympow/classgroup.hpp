// Desk-scale model of the locally free classgroup: the lattice of
// Galois-equivariant homomorphisms from the character ring into an abstract
// class group, with the symmetric-power action as precomposition by the
// adjoint Adams operation.
#pragma once

#include <optional>

#include "sympow/abgroup.hpp"
#include "sympow/char_table.hpp"
#include "sympow/lambda_ops.hpp"

namespace sympow {

struct ClassgroupModel {
  TablePtr table;
  long q = 1;           // Frobenius parameter; 1 = trivial Galois action
  AbGroup c;            // model of the geometric class group
  GroupHom phi;         // its Frobenius endomorphism
  IntMatrix galois_perm;    // matrix of psi^q on irreducibles (a permutation)
  EquivariantHomResult h;   // the hom lattice: elements are c.rank x r matrices
};

// Requires gcd(q, order) = 1; checks that psi^q permutes the irreducibles and
// that phi is an endomorphism of c.
ClassgroupModel build_classgroup(TablePtr table, long q, AbGroup c, GroupHom phi);

// The action f -> f o (adjoint Adams, exponent k) as an endomorphism of the
// abstract hom group; requires gcd(k, order) = 1. Equivariance preservation
// is asserted element by element.
GroupHom sigma_on_cl(long k, const ClassgroupModel& m);

struct IndSubgroupResult {
  std::vector<std::vector<Int>> c0_generators;  // generators of C0 in C-coordinates
  std::vector<std::vector<Int>> h_generators;   // coordinates in H of the maps chi -> deg(chi)*c
  SubgroupData sub;                             // the induced subgroup of H
  QuotientData quot;                            // H / Ind with projection
};

// Subgroup of H spanned by f_c : chi -> deg(chi) * c for c in C0. C0 defaults
// to the phi-fixed subgroup of C; supplied generators must be phi-fixed.
IndSubgroupResult ind_subgroup(const ClassgroupModel& m,
                               const std::optional<std::vector<std::vector<Int>>>& c0 =
                                   std::nullopt);

struct CntReport {
  long k = 0, kp = 0;
  bool abelian_checked = false;           // (i) ran (abelian tables only)
  bool adjoint_equals_pullback = true;    // adjoint-Adams matrix = pullback matrix
  bool action_equals_pullback_action = true;
  bool periodicity = false;               // action at k + exponent = action at k
  bool additivity = false;                // action is additive on generator sums
  bool pass() const {
    return adjoint_equals_pullback && action_equals_pullback_action && periodicity && additivity;
  }
};
CntReport verify_cnt_duality(const ClassgroupModel& m, long k);

// An element of H^1 for an abelian group: images of the dual generators,
// one column per cyclic factor of the table, entries in C-coordinates.
// Requires q = 1, phi = identity, and a generated abelian table.
IntMatrix h1_class_matrix(const ClassgroupModel& m, const IntMatrix& h);

struct UnramifiedCheck {
  long k = 0, kp = 0;
  bool sigma_matches_scaling = false;  // sigma^k(cl h) = k' * cl(h)
  bool scaling_matches_twist = false;  // k' * cl(h) = cl(k' * h)
  bool pass() const { return sigma_matches_scaling && scaling_matches_twist; }
};
UnramifiedCheck verify_unramified_formula(const ClassgroupModel& m, const IntMatrix& h, long k);

}  // namespace sympow
