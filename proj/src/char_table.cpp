#include "sympow/char_table.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sympow {

namespace {

std::string fmt(long v) { return std::to_string(v); }

}  // namespace

CharTable::CharTable(CharTableData d) : d_(std::move(d)) {
  if (d_.cayley) {
    element_class_.assign(static_cast<size_t>(d_.cayley->size()), -1);
    for (size_t c = 0; c < d_.class_reps.size(); ++c) {
      long rep = d_.class_reps[c];
      for (long m : d_.cayley->conjugacy_classes()[static_cast<size_t>(
               d_.cayley->conjugacy_class_of(rep))])
        element_class_[static_cast<size_t>(m)] = static_cast<long>(c);
    }
  }
}

long CharTable::power_class(long k, long c) const {
  long km = k % d_.exponent;
  if (km < 0) km += d_.exponent;
  return d_.power_maps[static_cast<size_t>(km)][static_cast<size_t>(c)];
}

bool CharTable::is_abelian() const { return num_classes() == order(); }

const CayleyTable& CharTable::cayley() const {
  if (!d_.cayley) throw std::logic_error("CharTable: no Cayley table attached");
  return *d_.cayley;
}

long CharTable::class_rep(long c) const {
  if (!d_.cayley) throw std::logic_error("CharTable: no Cayley table attached");
  return d_.class_reps[static_cast<size_t>(c)];
}

long CharTable::class_of_element(long g) const {
  if (!d_.cayley) throw std::logic_error("CharTable: no Cayley table attached");
  long c = element_class_[static_cast<size_t>(g)];
  if (c < 0) throw std::logic_error("CharTable: element not covered by class representatives");
  return c;
}

ValidationResult validate_char_table(CharTableData data) {
  std::vector<std::string> errors;
  auto fail = [&](const std::string& msg) { errors.push_back(msg); };

  const long n = data.order;
  const long e = data.exponent;
  const long nc = static_cast<long>(data.classes.size());

  if (n < 1) fail("order must be >= 1");
  if (e < 1) fail("exponent must be >= 1");
  if (nc < 1) fail("at least one class required");
  if (!errors.empty()) return {nullptr, std::move(errors)};

  // class data
  long size_sum = 0;
  for (const auto& c : data.classes) {
    if (c.size < 1) fail("class '" + c.name + "' has nonpositive size");
    if (c.rep_order < 1) fail("class '" + c.name + "' has nonpositive representative order");
    size_sum += c.size;
  }
  if (size_sum != n)
    fail("class sizes sum to " + fmt(size_sum) + ", expected the group order " + fmt(n));
  if (data.classes[0].size != 1 || data.classes[0].rep_order != 1)
    fail("class 0 must be the identity class (size 1, order 1)");

  // power maps
  if (static_cast<long>(data.power_maps.size()) != e) {
    fail("power_maps must have exactly exponent-many entries");
    return {nullptr, std::move(errors)};
  }
  for (long k = 0; k < e; ++k) {
    if (static_cast<long>(data.power_maps[static_cast<size_t>(k)].size()) != nc) {
      fail("power map " + fmt(k) + " has wrong length");
      return {nullptr, std::move(errors)};
    }
    for (long c = 0; c < nc; ++c) {
      long img = data.power_maps[static_cast<size_t>(k)][static_cast<size_t>(c)];
      if (img < 0 || img >= nc) {
        fail("power map " + fmt(k) + " maps class " + fmt(c) + " out of range");
        return {nullptr, std::move(errors)};
      }
    }
  }
  auto pm = [&](long k, long c) {
    return data.power_maps[static_cast<size_t>(((k % e) + e) % e)][static_cast<size_t>(c)];
  };
  for (long c = 0; c < nc; ++c) {
    if (pm(1, c) != c) fail("power map for k=1 is not the identity at class " + fmt(c));
    if (pm(0, c) != 0) fail("power map for k=0 must send every class to the identity class");
  }
  for (long k = 0; k < e; ++k)
    for (long l = 0; l < e; ++l)
      for (long c = 0; c < nc; ++c)
        if (pm(k, pm(l, c)) != pm(k * l, c)) {
          fail("power maps violate pi_" + fmt(k) + " o pi_" + fmt(l) + " = pi_" +
               fmt((k * l) % e) + " at class " + fmt(c));
          k = l = e;  // report once
          break;
        }
  // representative orders against power maps
  long lcm_orders = 1;
  for (long c = 0; c < nc; ++c) {
    long ord = 0;
    for (long k = 1; k <= e; ++k)
      if (pm(k, c) == 0) {
        ord = k;
        break;
      }
    if (ord == 0)
      fail("class " + fmt(c) + " never powers into the identity class");
    else if (ord != data.classes[static_cast<size_t>(c)].rep_order)
      fail("class " + fmt(c) + " has declared order " +
           fmt(data.classes[static_cast<size_t>(c)].rep_order) + " but power maps give " +
           fmt(ord));
    if (ord > 0) lcm_orders = std::lcm(lcm_orders, ord);
  }
  if (lcm_orders != e)
    fail("exponent " + fmt(e) + " is not the lcm of representative orders (" + fmt(lcm_orders) +
         ")");

  // irreducible characters
  if (static_cast<long>(data.irreducibles.size()) != nc) {
    fail("number of irreducible characters (" + fmt(data.irreducibles.size()) +
         ") must equal the number of classes (" + fmt(nc) + ")");
    return {nullptr, std::move(errors)};
  }
  for (long i = 0; i < nc; ++i) {
    const auto& row = data.irreducibles[static_cast<size_t>(i)];
    if (static_cast<long>(row.size()) != nc) {
      fail("character " + fmt(i) + " has wrong number of values");
      return {nullptr, std::move(errors)};
    }
    for (const auto& v : row)
      if (v.order() != e) {
        fail("character " + fmt(i) + " has values of wrong cyclotomic order");
        return {nullptr, std::move(errors)};
      }
  }
  Int degsq_sum(0);
  for (long i = 0; i < nc; ++i) {
    const CycNumber& deg = data.irreducibles[static_cast<size_t>(i)][0];
    if (!deg.is_rational_integer() || deg.integer_value() <= 0)
      fail("character " + fmt(i) + " has non-positive-integer degree " + deg.str());
    else
      degsq_sum += deg.integer_value() * deg.integer_value();
  }
  if (degsq_sum != n)
    fail("sum of squared degrees is " + degsq_sum.get_str() + ", expected " + fmt(n));

  for (long a = 0; a < nc; ++a)
    for (long b = a; b < nc; ++b) {
      CycNumber acc = CycNumber::zero(e);
      for (long c = 0; c < nc; ++c) {
        CycNumber term = data.irreducibles[static_cast<size_t>(a)][static_cast<size_t>(c)] *
                         data.irreducibles[static_cast<size_t>(b)][static_cast<size_t>(c)].conj();
        acc += term.scaled(Rat(data.classes[static_cast<size_t>(c)].size));
      }
      acc = acc.scaled(Rat(1, n));
      CycNumber want = a == b ? CycNumber::one(e) : CycNumber::zero(e);
      if (acc != want)
        fail("row orthogonality fails for characters " + fmt(a) + ", " + fmt(b) + ": got " +
             acc.str());
    }

  // optional Cayley table
  if (data.cayley) {
    const CayleyTable& g = *data.cayley;
    if (g.size() != n) fail("Cayley table size does not match the group order");
    if (static_cast<long>(data.class_reps.size()) != nc)
      fail("class_reps must list one element per class");
    else {
      const auto& cls = g.conjugacy_classes();
      if (static_cast<long>(cls.size()) != nc)
        fail("Cayley table has " + fmt(cls.size()) + " conjugacy classes, table declares " +
             fmt(nc));
      std::vector<long> seen(cls.size(), 0);
      for (long c = 0; c < nc && static_cast<long>(cls.size()) == nc; ++c) {
        long rep = data.class_reps[static_cast<size_t>(c)];
        if (rep < 0 || rep >= n) {
          fail("class representative " + fmt(c) + " out of range");
          continue;
        }
        long gc = g.conjugacy_class_of(rep);
        if (seen[static_cast<size_t>(gc)]++)
          fail("class representatives " + fmt(c) + " collide in the Cayley table");
        if (static_cast<long>(cls[static_cast<size_t>(gc)].size()) !=
            data.classes[static_cast<size_t>(c)].size)
          fail("class " + fmt(c) + " size disagrees with the Cayley table");
        if (g.element_order(rep) != data.classes[static_cast<size_t>(c)].rep_order)
          fail("class " + fmt(c) + " representative order disagrees with the Cayley table");
        for (long k = 0; k < e; ++k) {
          long img = g.power(rep, k);
          long want = pm(k, c);
          long got_rep = data.class_reps[static_cast<size_t>(want)];
          if (g.conjugacy_class_of(img) != g.conjugacy_class_of(got_rep)) {
            fail("power map " + fmt(k) + " disagrees with the Cayley table at class " + fmt(c));
            break;
          }
        }
      }
      if (g.exponent() != e) fail("Cayley table exponent disagrees with the declared exponent");
    }
  } else if (!data.class_reps.empty()) {
    fail("class_reps given without a Cayley table");
  }

  if (!errors.empty()) return {nullptr, std::move(errors)};
  return {TablePtr(new CharTable(std::move(data))), {}};
}

// ---- abelian tables -------------------------------------------------------------

TablePtr abelian_char_table(const std::vector<long>& invariants, const std::string& name) {
  for (long m : invariants)
    if (m < 1) throw std::invalid_argument("abelian_char_table: invariants must be >= 1");

  long n = 1;
  long e = 1;
  for (long m : invariants) {
    n *= m;
    e = std::lcm(e, m);
  }
  const long k = static_cast<long>(invariants.size());

  // Mixed-radix enumeration, last coordinate fastest.
  std::vector<std::vector<long>> tuples;
  tuples.reserve(static_cast<size_t>(n));
  std::vector<long> cur(static_cast<size_t>(k), 0);
  for (long idx = 0; idx < n; ++idx) {
    tuples.push_back(cur);
    for (long i = k - 1; i >= 0; --i) {
      if (++cur[static_cast<size_t>(i)] < invariants[static_cast<size_t>(i)]) break;
      cur[static_cast<size_t>(i)] = 0;
    }
  }
  auto index_of = [&](const std::vector<long>& t) {
    long idx = 0;
    for (long i = 0; i < k; ++i) idx = idx * invariants[static_cast<size_t>(i)] + t[static_cast<size_t>(i)];
    return idx;
  };
  auto tuple_str = [&](const std::vector<long>& t) {
    std::ostringstream os;
    os << "(";
    for (long i = 0; i < k; ++i) {
      if (i) os << ",";
      os << t[static_cast<size_t>(i)];
    }
    os << ")";
    return os.str();
  };

  CharTableData d;
  d.name = name.empty() ? "ab" + std::to_string(n) : name;
  d.order = n;
  d.exponent = e;
  for (long idx = 0; idx < n; ++idx) {
    long ord = 1;
    for (long i = 0; i < k; ++i) {
      long m = invariants[static_cast<size_t>(i)];
      long a = tuples[static_cast<size_t>(idx)][static_cast<size_t>(i)];
      ord = std::lcm(ord, m / std::gcd(a, m));
    }
    d.classes.push_back({tuple_str(tuples[static_cast<size_t>(idx)]), 1, ord});
  }
  d.power_maps.assign(static_cast<size_t>(e), std::vector<long>(static_cast<size_t>(n), 0));
  for (long kk = 0; kk < e; ++kk)
    for (long idx = 0; idx < n; ++idx) {
      std::vector<long> img(static_cast<size_t>(k));
      for (long i = 0; i < k; ++i)
        img[static_cast<size_t>(i)] =
            (tuples[static_cast<size_t>(idx)][static_cast<size_t>(i)] * kk) %
            invariants[static_cast<size_t>(i)];
      d.power_maps[static_cast<size_t>(kk)][static_cast<size_t>(idx)] = index_of(img);
    }
  for (long bi = 0; bi < n; ++bi) {
    std::vector<CycNumber> row;
    row.reserve(static_cast<size_t>(n));
    for (long ai = 0; ai < n; ++ai) {
      long expo = 0;
      for (long i = 0; i < k; ++i) {
        long m = invariants[static_cast<size_t>(i)];
        expo = (expo + tuples[static_cast<size_t>(ai)][static_cast<size_t>(i)] *
                           tuples[static_cast<size_t>(bi)][static_cast<size_t>(i)] * (e / m)) %
               e;
      }
      row.push_back(CycNumber::root_power(e, expo));
    }
    d.irreducibles.push_back(std::move(row));
  }
  std::vector<std::vector<long>> mult(static_cast<size_t>(n),
                                      std::vector<long>(static_cast<size_t>(n), 0));
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b) {
      std::vector<long> s(static_cast<size_t>(k));
      for (long i = 0; i < k; ++i)
        s[static_cast<size_t>(i)] = (tuples[static_cast<size_t>(a)][static_cast<size_t>(i)] +
                                     tuples[static_cast<size_t>(b)][static_cast<size_t>(i)]) %
                                    invariants[static_cast<size_t>(i)];
      mult[static_cast<size_t>(a)][static_cast<size_t>(b)] = index_of(s);
    }
  d.cayley = std::make_shared<const CayleyTable>(std::move(mult));
  d.class_reps.resize(static_cast<size_t>(n));
  for (long idx = 0; idx < n; ++idx) d.class_reps[static_cast<size_t>(idx)] = idx;
  d.abelian = AbelianStructure{invariants, tuples, tuples};

  ValidationResult r = validate_char_table(std::move(d));
  if (!r.ok()) {
    std::string msg = "abelian_char_table: generated table failed validation:";
    for (const auto& err : r.errors) msg += "\n  " + err;
    throw std::logic_error(msg);
  }
  return r.table;
}

// ---- class functions -------------------------------------------------------------

ClassFunction::ClassFunction(TablePtr table, std::vector<CycNumber> values)
    : t_(std::move(table)), v_(std::move(values)) {
  if (!t_) throw std::invalid_argument("ClassFunction: null table");
  if (static_cast<long>(v_.size()) != t_->num_classes())
    throw std::invalid_argument("ClassFunction: value count mismatch");
  for (const auto& v : v_)
    if (v.order() != t_->exponent())
      throw std::invalid_argument("ClassFunction: value of wrong cyclotomic order");
}

void ClassFunction::check_table(const ClassFunction& o) const {
  if (t_ != o.t_) throw std::invalid_argument("ClassFunction: table mismatch");
}

ClassFunction ClassFunction::operator+(const ClassFunction& o) const {
  check_table(o);
  std::vector<CycNumber> r;
  r.reserve(v_.size());
  for (size_t i = 0; i < v_.size(); ++i) r.push_back(v_[i] + o.v_[i]);
  return ClassFunction(t_, std::move(r));
}

ClassFunction ClassFunction::operator-(const ClassFunction& o) const {
  check_table(o);
  std::vector<CycNumber> r;
  r.reserve(v_.size());
  for (size_t i = 0; i < v_.size(); ++i) r.push_back(v_[i] - o.v_[i]);
  return ClassFunction(t_, std::move(r));
}

ClassFunction ClassFunction::operator*(const ClassFunction& o) const {
  check_table(o);
  std::vector<CycNumber> r;
  r.reserve(v_.size());
  for (size_t i = 0; i < v_.size(); ++i) r.push_back(v_[i] * o.v_[i]);
  return ClassFunction(t_, std::move(r));
}

ClassFunction ClassFunction::scaled(const Rat& s) const {
  std::vector<CycNumber> r;
  r.reserve(v_.size());
  for (const auto& v : v_) r.push_back(v.scaled(s));
  return ClassFunction(t_, std::move(r));
}

ClassFunction ClassFunction::power_pullback(long k) const {
  std::vector<CycNumber> r;
  r.reserve(v_.size());
  for (long c = 0; c < t_->num_classes(); ++c)
    r.push_back(v_[static_cast<size_t>(t_->power_class(k, c))]);
  return ClassFunction(t_, std::move(r));
}

bool ClassFunction::operator==(const ClassFunction& o) const { return t_ == o.t_ && v_ == o.v_; }

VirtualCharacter::VirtualCharacter(TablePtr table, std::vector<Int> coords)
    : t_(std::move(table)), c_(std::move(coords)) {
  if (!t_) throw std::invalid_argument("VirtualCharacter: null table");
  if (static_cast<long>(c_.size()) != t_->num_classes())
    throw std::invalid_argument("VirtualCharacter: coordinate count mismatch");
}

ClassFunction VirtualCharacter::to_class_function() const {
  const long e = t_->exponent();
  std::vector<CycNumber> vals(static_cast<size_t>(t_->num_classes()), CycNumber::zero(e));
  for (long i = 0; i < t_->num_classes(); ++i) {
    if (c_[static_cast<size_t>(i)] == 0) continue;
    Rat s(c_[static_cast<size_t>(i)]);
    for (long c = 0; c < t_->num_classes(); ++c)
      vals[static_cast<size_t>(c)] += t_->value(i, c).scaled(s);
  }
  return ClassFunction(t_, std::move(vals));
}

VirtualCharacter VirtualCharacter::operator+(const VirtualCharacter& o) const {
  if (t_ != o.t_) throw std::invalid_argument("VirtualCharacter: table mismatch");
  std::vector<Int> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] + o.c_[i];
  return VirtualCharacter(t_, std::move(r));
}

VirtualCharacter VirtualCharacter::operator-(const VirtualCharacter& o) const {
  if (t_ != o.t_) throw std::invalid_argument("VirtualCharacter: table mismatch");
  std::vector<Int> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] - o.c_[i];
  return VirtualCharacter(t_, std::move(r));
}

VirtualCharacter VirtualCharacter::scaled(const Int& s) const {
  std::vector<Int> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * s;
  return VirtualCharacter(t_, std::move(r));
}

bool VirtualCharacter::operator==(const VirtualCharacter& o) const {
  return t_ == o.t_ && c_ == o.c_;
}

std::string VirtualCharacter::coords_str() const {
  std::ostringstream os;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ",";
    os << c_[i].get_str();
  }
  return os.str();
}

VirtualCharacter irreducible(TablePtr t, long i) {
  std::vector<Int> c(static_cast<size_t>(t->num_classes()), Int(0));
  c.at(static_cast<size_t>(i)) = 1;
  return VirtualCharacter(std::move(t), std::move(c));
}

VirtualCharacter trivial_character(TablePtr t) {
  // The trivial character is the row that is 1 everywhere.
  for (long i = 0; i < t->num_classes(); ++i) {
    bool all_one = true;
    for (long c = 0; c < t->num_classes() && all_one; ++c)
      all_one = t->value(i, c) == CycNumber::one(t->exponent());
    if (all_one) return irreducible(t, i);
  }
  throw std::logic_error("trivial_character: table has no trivial row");
}

VirtualCharacter regular_character(TablePtr t) {
  std::vector<Int> c;
  c.reserve(static_cast<size_t>(t->num_classes()));
  for (long i = 0; i < t->num_classes(); ++i) c.push_back(t->degree(i));
  return VirtualCharacter(std::move(t), std::move(c));
}

ClassFunction irreducible_class_function(TablePtr t, long i) {
  std::vector<CycNumber> vals;
  vals.reserve(static_cast<size_t>(t->num_classes()));
  for (long c = 0; c < t->num_classes(); ++c) vals.push_back(t->value(i, c));
  return ClassFunction(std::move(t), std::move(vals));
}

CycNumber pairing(const ClassFunction& x, const ClassFunction& y) {
  if (x.table() != y.table()) throw std::invalid_argument("pairing: table mismatch");
  const CharTable& t = *x.table();
  CycNumber acc = CycNumber::zero(t.exponent());
  for (long c = 0; c < t.num_classes(); ++c) {
    CycNumber term = x.value(c) * y.value(c).conj();
    acc += term.scaled(Rat(t.classes()[static_cast<size_t>(c)].size));
  }
  return acc.scaled(Rat(1, t.order()));
}

DecomposeResult decompose(const ClassFunction& f) {
  const TablePtr& t = f.table();
  DecomposeResult out;
  std::vector<Int> coords;
  coords.reserve(static_cast<size_t>(t->num_classes()));
  for (long i = 0; i < t->num_classes(); ++i) {
    CycNumber a = pairing(f, irreducible_class_function(t, i));
    if (a.is_rational_integer())
      coords.push_back(a.integer_value());
    else
      out.non_integral.emplace_back(i, a);
  }
  if (out.non_integral.empty()) out.character = VirtualCharacter(t, std::move(coords));
  return out;
}

}  // namespace sympow
