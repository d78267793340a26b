// Finitely generated abelian groups in invariant-factor normal form, with
// hom groups, quotients, subgroups, kernels and equivariant hom lattices.
//
// Elements are integer coordinate vectors on the stored generators, reduced
// componentwise modulo the invariant factors (0 marks a free factor and is
// never reduced).
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sympow/int_matrix.hpp"
#include "sympow/snf.hpp"

namespace sympow {

class AbGroup {
 public:
  AbGroup() = default;  // trivial group
  // Normalizes an arbitrary list of factors (>= 0) into a divisibility chain,
  // dropping trivial factors.
  explicit AbGroup(const std::vector<Int>& factors);

  // Z^rank modulo the column span of `relations`.
  static AbGroup from_relations(long rank, const IntMatrix& relations);
  // Comma-separated invariant factors, e.g. "4,0" = Z/4 + Z.
  static AbGroup parse(const std::string& spec);

  long rank() const { return static_cast<long>(inv_.size()); }
  const std::vector<Int>& invariants() const { return inv_; }
  bool is_trivial() const { return inv_.empty(); }
  bool is_finite() const;
  Int order() const;  // throws when infinite

  std::vector<Int> reduce(std::vector<Int> v) const;
  std::vector<Int> zero() const { return std::vector<Int>(inv_.size(), Int(0)); }
  std::vector<Int> add(const std::vector<Int>& a, const std::vector<Int>& b) const;
  std::vector<Int> sub(const std::vector<Int>& a, const std::vector<Int>& b) const;
  std::vector<Int> scale(const Int& s, const std::vector<Int>& a) const;
  bool is_zero(const std::vector<Int>& v) const;
  bool equal(const std::vector<Int>& a, const std::vector<Int>& b) const;

  // All elements; finite groups only (intended for small brute-force checks).
  std::vector<std::vector<Int>> elements() const;

  bool operator==(const AbGroup& o) const { return inv_ == o.inv_; }
  std::string str() const;

 private:
  std::vector<Int> inv_;  // divisibility chain, no 1s, zeros (free factors) last
};

// A homomorphism between groups in normal form: columns are the images of the
// source generators. Relation compatibility is verified at construction.
class GroupHom {
 public:
  GroupHom(AbGroup source, AbGroup target, IntMatrix matrix);
  static GroupHom identity(const AbGroup& g);
  static GroupHom zero(const AbGroup& source, const AbGroup& target);
  static GroupHom multiplication_by(const Int& s, const AbGroup& g);

  const AbGroup& source() const { return src_; }
  const AbGroup& target() const { return tgt_; }
  const IntMatrix& matrix() const { return m_; }

  std::vector<Int> apply(const std::vector<Int>& x) const;
  GroupHom compose(const GroupHom& inner) const;  // this after inner
  GroupHom plus(const GroupHom& o) const;
  bool equal(const GroupHom& o) const;
  bool is_endomorphism() const { return src_ == tgt_; }

 private:
  AbGroup src_, tgt_;
  IntMatrix m_;  // target.rank x source.rank, columns reduced in the target
};

// ---- presentation-level machinery ------------------------------------------

// Z^n with coordinate i taken modulo moduli[i]; 0 marks a free coordinate.
// This is the working form behind AbGroup: it admits arbitrary per-coordinate
// moduli (no chain condition), which the flattened equivariant computations
// need.
struct Presentation {
  std::vector<Int> moduli;
  long dim() const { return static_cast<long>(moduli.size()); }
  IntMatrix relation_columns() const;  // d_i * e_i for each nonzero d_i
  std::vector<Int> reduce(std::vector<Int> v) const;
  static Presentation of(const AbGroup& g) { return Presentation{g.invariants()}; }
};

// Repeated exact solves against a fixed full-column-rank basis.
class LatticeSolver {
 public:
  explicit LatticeSolver(IntMatrix basis);
  // Unique integral w with basis*w = x, or nullopt when x is outside.
  std::optional<std::vector<Int>> solve(const std::vector<Int>& x) const;
  const IntMatrix& basis() const { return b_; }

 private:
  IntMatrix b_;
  SmithResult s_;
};

struct SubgroupData {
  AbGroup group;                     // abstract normal form of the subgroup
  IntMatrix generators;              // ambient-coordinate columns, one per invariant
  LatticeSolver solver;              // lattice L = span(generators) + relations
  IntMatrix uprime;                  // change of basis used for coordinates
  std::vector<Int> full_invariants;  // invariants before dropping 1s
  std::vector<long> kept;            // coordinate positions with invariant != 1

  bool contains(const std::vector<Int>& x) const;
  std::vector<Int> coords(const std::vector<Int>& x) const;  // throws when outside
};

SubgroupData subgroup_from_generators(const Presentation& p, const IntMatrix& gens);

struct QuotientData {
  AbGroup group;
  IntMatrix projection;  // group.rank x n
  std::vector<Int> project(const std::vector<Int>& x) const;
};

QuotientData quotient_by(const Presentation& p, const IntMatrix& gens);

// Kernel of the map src -> tgt given by `m` on coordinates; verifies that the
// map respects the source relations.
SubgroupData kernel_of_map(const Presentation& src, const Presentation& tgt, const IntMatrix& m);

// ---- spec-level operations --------------------------------------------------

struct HomGroupResult {
  AbGroup group;
  std::vector<GroupHom> generators;  // aligned with group.invariants()
};
HomGroupResult hom_group(const AbGroup& a, const AbGroup& b);

struct QuotientResult {
  AbGroup group;
  GroupHom projection;
};
QuotientResult quotient(const AbGroup& a, const std::vector<std::vector<Int>>& gens);

SubgroupData kernel_of_hom(const GroupHom& f);

// {f in Hom(Z^r, C) : f(sigma v) = phi(f(v))}; elements are C.rank x r
// matrices over C-coordinates, flattened column-major into the presentation
// with moduli (C.invariants repeated r times).
struct EquivariantHomResult {
  AbGroup group;
  SubgroupData sub;  // inside the flattened presentation
  Presentation flat;
  long r = 0;
  long s = 0;  // C.rank

  std::vector<IntMatrix> generator_matrices() const;
  IntMatrix matrix_of_flat(const std::vector<Int>& flat_vec) const;
  std::vector<Int> flat_of_matrix(const IntMatrix& f) const;
  std::vector<Int> coords_of_matrix(const IntMatrix& f) const;
  IntMatrix matrix_of_coords(const std::vector<Int>& coords) const;
};

EquivariantHomResult equivariant_hom_group(long r, const IntMatrix& sigma, const AbGroup& c,
                                           const GroupHom& phi);

}  // namespace sympow
