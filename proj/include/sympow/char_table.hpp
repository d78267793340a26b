// Character tables of finite groups, class functions and virtual characters.
//
// A table records conjugacy-class data, all power maps modulo the group
// exponent, and the irreducible characters with exact cyclotomic values.
// Tables are immutable and shared; non-abelian tables enter through the
// catalog or through validated files.
#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sympow/cayley.hpp"
#include "sympow/cyclotomic.hpp"
#include "sympow/rational.hpp"

namespace sympow {

struct ConjClass {
  std::string name;
  long size = 0;
  long rep_order = 0;
};

// Extra structure carried by generated abelian tables: both classes and
// irreducibles are indexed by exponent tuples over the cyclic factors.
struct AbelianStructure {
  std::vector<long> invariants;
  std::vector<std::vector<long>> class_tuple;
  std::vector<std::vector<long>> char_tuple;
};

// Raw, not-yet-trusted table data.
struct CharTableData {
  std::string name;
  long order = 0;
  long exponent = 0;
  std::vector<ConjClass> classes;
  std::vector<std::vector<long>> power_maps;  // exponent rows, one index per class
  std::vector<std::vector<CycNumber>> irreducibles;
  std::shared_ptr<const CayleyTable> cayley;  // optional
  std::vector<long> class_reps;               // required with cayley
  std::optional<AbelianStructure> abelian;
};

class CharTable;
using TablePtr = std::shared_ptr<const CharTable>;

struct ValidationResult {
  TablePtr table;  // null when invalid
  std::vector<std::string> errors;
  bool ok() const { return table != nullptr; }
};

// Checks every table invariant with exact arithmetic and returns either the
// table or the full list of violations.
ValidationResult validate_char_table(CharTableData data);

class CharTable {
 public:
  const std::string& name() const { return d_.name; }
  long order() const { return d_.order; }
  long exponent() const { return d_.exponent; }
  long num_classes() const { return static_cast<long>(d_.classes.size()); }
  const std::vector<ConjClass>& classes() const { return d_.classes; }
  long power_class(long k, long c) const;  // class of g^k for g in class c
  const CycNumber& value(long chi, long c) const {
    return d_.irreducibles[static_cast<size_t>(chi)][static_cast<size_t>(c)];
  }
  const std::vector<CycNumber>& row(long chi) const {
    return d_.irreducibles[static_cast<size_t>(chi)];
  }
  Int degree(long chi) const { return value(chi, 0).integer_value(); }
  bool is_abelian() const;
  const std::optional<AbelianStructure>& abelian() const { return d_.abelian; }

  bool has_cayley() const { return d_.cayley != nullptr; }
  const CayleyTable& cayley() const;
  long class_rep(long c) const;          // element index; requires cayley
  long class_of_element(long g) const;   // table class index; requires cayley

 private:
  friend ValidationResult validate_char_table(CharTableData data);
  explicit CharTable(CharTableData d);
  CharTableData d_;
  std::vector<long> element_class_;  // with cayley: element -> table class
};

// Product of cyclic groups; the empty list is the trivial group. The result
// carries a Cayley table and the tuple indexing of classes and characters.
TablePtr abelian_char_table(const std::vector<long>& invariants, const std::string& name = "");

// ---- class functions ---------------------------------------------------------

class ClassFunction {
 public:
  ClassFunction(TablePtr table, std::vector<CycNumber> values);
  const TablePtr& table() const { return t_; }
  const std::vector<CycNumber>& values() const { return v_; }
  const CycNumber& value(long c) const { return v_[static_cast<size_t>(c)]; }

  ClassFunction operator+(const ClassFunction& o) const;
  ClassFunction operator-(const ClassFunction& o) const;
  ClassFunction operator*(const ClassFunction& o) const;  // pointwise
  ClassFunction scaled(const Rat& r) const;
  // c -> value at the class of g^k
  ClassFunction power_pullback(long k) const;
  bool operator==(const ClassFunction& o) const;

 private:
  void check_table(const ClassFunction& o) const;
  TablePtr t_;
  std::vector<CycNumber> v_;
};

class VirtualCharacter {
 public:
  VirtualCharacter(TablePtr table, std::vector<Int> coords);
  const TablePtr& table() const { return t_; }
  const std::vector<Int>& coords() const { return c_; }
  ClassFunction to_class_function() const;

  VirtualCharacter operator+(const VirtualCharacter& o) const;
  VirtualCharacter operator-(const VirtualCharacter& o) const;
  VirtualCharacter scaled(const Int& s) const;
  bool operator==(const VirtualCharacter& o) const;
  std::string coords_str() const;

 private:
  TablePtr t_;
  std::vector<Int> c_;
};

VirtualCharacter irreducible(TablePtr t, long i);
VirtualCharacter trivial_character(TablePtr t);
VirtualCharacter regular_character(TablePtr t);
ClassFunction irreducible_class_function(TablePtr t, long i);

// (1/n) sum_c |c| x(c) conj(y(c))
CycNumber pairing(const ClassFunction& x, const ClassFunction& y);

struct DecomposeResult {
  std::optional<VirtualCharacter> character;
  std::vector<std::pair<long, CycNumber>> non_integral;  // offending coordinates
  bool ok() const { return character.has_value(); }
};

// Coordinates <f, chi_i>; succeeds iff all are rational integers.
DecomposeResult decompose(const ClassFunction& f);

// ---- subgroups and induction ---------------------------------------------------

// A subgroup of a table that carries a Cayley table, with its own conjugacy
// classes (under subgroup conjugation) and the class fusion into the ambient
// group.
struct SubgroupEmbedding {
  TablePtr ambient;
  std::vector<long> elements;                  // ambient element indices, ascending
  std::vector<std::vector<long>> sub_classes;  // subgroup classes, ambient indices
  std::vector<long> class_rep;                 // per subgroup class
  std::vector<long> fusion;                    // subgroup class -> ambient class
  std::vector<long> element_subclass;          // ambient element -> subgroup class or -1

  long order() const { return static_cast<long>(elements.size()); }
  long num_classes() const { return static_cast<long>(sub_classes.size()); }
};

// Verifies closure under multiplication and inverse and that the identity is
// present.
SubgroupEmbedding subgroup_embedding(TablePtr ambient, std::vector<long> elements);
SubgroupEmbedding trivial_subgroup(TablePtr ambient);

// Values on subgroup classes -> induced class function on the ambient group,
// by the direct sum-over-conjugates formula on the Cayley table.
ClassFunction induce(const SubgroupEmbedding& h, const std::vector<CycNumber>& values);
// Pull back along class fusion.
std::vector<CycNumber> restrict_values(const SubgroupEmbedding& h, const ClassFunction& x);
// Character pairing on the subgroup.
CycNumber subgroup_pairing(const SubgroupEmbedding& h, const std::vector<CycNumber>& f,
                           const std::vector<CycNumber>& g);

}  // namespace sympow
