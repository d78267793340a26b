#include "sympow/cayley.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "sympow/char_table.hpp"

namespace sympow {

CayleyTable::CayleyTable(std::vector<std::vector<long>> mult) : mult_(std::move(mult)) {
  n_ = static_cast<long>(mult_.size());
  if (n_ == 0) throw std::invalid_argument("CayleyTable: empty table");
  for (const auto& row : mult_) {
    if (static_cast<long>(row.size()) != n_)
      throw std::invalid_argument("CayleyTable: table not square");
    for (long v : row)
      if (v < 0 || v >= n_) throw std::invalid_argument("CayleyTable: index out of range");
  }
  // identity
  for (long e = 0; e < n_; ++e) {
    bool ok = true;
    for (long a = 0; a < n_ && ok; ++a) ok = mul(e, a) == a && mul(a, e) == a;
    if (ok) {
      identity_ = e;
      break;
    }
  }
  if (identity_ < 0) throw std::invalid_argument("CayleyTable: no identity element");
  // inverses
  inverse_.assign(static_cast<size_t>(n_), -1);
  for (long a = 0; a < n_; ++a) {
    for (long b = 0; b < n_; ++b)
      if (mul(a, b) == identity_ && mul(b, a) == identity_) {
        inverse_[static_cast<size_t>(a)] = b;
        break;
      }
    if (inverse_[static_cast<size_t>(a)] < 0)
      throw std::invalid_argument("CayleyTable: element without inverse");
  }
  // associativity (n^3 checks; tables here are small)
  for (long a = 0; a < n_; ++a)
    for (long b = 0; b < n_; ++b)
      for (long c = 0; c < n_; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw std::invalid_argument("CayleyTable: multiplication not associative");
  // conjugacy classes
  class_of_.assign(static_cast<size_t>(n_), -1);
  for (long a = 0; a < n_; ++a) {
    if (class_of_[static_cast<size_t>(a)] >= 0) continue;
    std::vector<long> cls;
    for (long x = 0; x < n_; ++x) {
      long y = mul(mul(inverse(x), a), x);
      if (class_of_[static_cast<size_t>(y)] < 0) {
        class_of_[static_cast<size_t>(y)] = static_cast<long>(classes_.size());
        cls.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes_.push_back(std::move(cls));
  }
}

long CayleyTable::power(long a, long k) const {
  long base = a;
  if (k < 0) {
    base = inverse(a);
    k = -k;
  }
  long acc = identity_;
  while (k > 0) {
    if (k & 1) acc = mul(acc, base);
    base = mul(base, base);
    k >>= 1;
  }
  return acc;
}

long CayleyTable::element_order(long a) const {
  long x = a, ord = 1;
  while (x != identity_) {
    x = mul(x, a);
    ++ord;
    if (ord > n_) throw std::logic_error("CayleyTable: order computation ran away");
  }
  return ord;
}

long CayleyTable::exponent() const {
  long e = 1;
  for (long a = 0; a < n_; ++a) e = std::lcm(e, element_order(a));
  return e;
}

// ---- subgroup embeddings and induction -----------------------------------------

SubgroupEmbedding subgroup_embedding(TablePtr ambient, std::vector<long> elements) {
  if (!ambient || !ambient->has_cayley())
    throw std::invalid_argument("subgroup_embedding: ambient table has no Cayley table");
  const CayleyTable& g = ambient->cayley();
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  for (long x : elements)
    if (x < 0 || x >= g.size())
      throw std::invalid_argument("subgroup_embedding: element index out of range");

  std::vector<long> member(static_cast<size_t>(g.size()), 0);
  for (long x : elements) member[static_cast<size_t>(x)] = 1;
  if (!member[static_cast<size_t>(g.identity())])
    throw std::invalid_argument("subgroup_embedding: identity missing");
  for (long a : elements) {
    if (!member[static_cast<size_t>(g.inverse(a))])
      throw std::invalid_argument("subgroup_embedding: not closed under inverse");
    for (long b : elements)
      if (!member[static_cast<size_t>(g.mul(a, b))])
        throw std::invalid_argument("subgroup_embedding: not closed under multiplication");
  }

  SubgroupEmbedding h;
  h.ambient = ambient;
  h.elements = elements;
  h.element_subclass.assign(static_cast<size_t>(g.size()), -1);
  // Conjugacy classes under conjugation by subgroup elements only.
  for (long a : elements) {
    if (h.element_subclass[static_cast<size_t>(a)] >= 0) continue;
    std::vector<long> cls;
    long idx = static_cast<long>(h.sub_classes.size());
    for (long x : elements) {
      long y = g.mul(g.mul(g.inverse(x), a), x);
      if (h.element_subclass[static_cast<size_t>(y)] < 0) {
        h.element_subclass[static_cast<size_t>(y)] = idx;
        cls.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
    h.class_rep.push_back(cls.front());
    h.fusion.push_back(ambient->class_of_element(cls.front()));
    h.sub_classes.push_back(std::move(cls));
  }
  return h;
}

SubgroupEmbedding trivial_subgroup(TablePtr ambient) {
  return subgroup_embedding(ambient, {ambient->cayley().identity()});
}

ClassFunction induce(const SubgroupEmbedding& h, const std::vector<CycNumber>& values) {
  const TablePtr& t = h.ambient;
  if (static_cast<long>(values.size()) != h.num_classes())
    throw std::invalid_argument("induce: value count does not match subgroup classes");
  const CayleyTable& g = t->cayley();
  const long e = t->exponent();
  const Rat inv_h(1, h.order());
  std::vector<CycNumber> out;
  out.reserve(static_cast<size_t>(t->num_classes()));
  for (long c = 0; c < t->num_classes(); ++c) {
    long rep = t->class_rep(c);
    CycNumber acc = CycNumber::zero(e);
    for (long x = 0; x < g.size(); ++x) {
      long y = g.mul(g.mul(g.inverse(x), rep), x);
      long sc = h.element_subclass[static_cast<size_t>(y)];
      if (sc >= 0) acc += values[static_cast<size_t>(sc)];
    }
    out.push_back(acc.scaled(inv_h));
  }
  return ClassFunction(t, std::move(out));
}

std::vector<CycNumber> restrict_values(const SubgroupEmbedding& h, const ClassFunction& x) {
  if (x.table() != h.ambient) throw std::invalid_argument("restrict_values: table mismatch");
  std::vector<CycNumber> out;
  out.reserve(static_cast<size_t>(h.num_classes()));
  for (long sc = 0; sc < h.num_classes(); ++sc)
    out.push_back(x.value(h.fusion[static_cast<size_t>(sc)]));
  return out;
}

CycNumber subgroup_pairing(const SubgroupEmbedding& h, const std::vector<CycNumber>& f,
                           const std::vector<CycNumber>& g) {
  if (static_cast<long>(f.size()) != h.num_classes() ||
      static_cast<long>(g.size()) != h.num_classes())
    throw std::invalid_argument("subgroup_pairing: value count mismatch");
  const long e = h.ambient->exponent();
  CycNumber acc = CycNumber::zero(e);
  for (long sc = 0; sc < h.num_classes(); ++sc) {
    Rat size(static_cast<long>(h.sub_classes[static_cast<size_t>(sc)].size()));
    acc += (f[static_cast<size_t>(sc)] * g[static_cast<size_t>(sc)].conj()).scaled(size);
  }
  return acc.scaled(Rat(1, h.order()));
}

}  // namespace sympow
