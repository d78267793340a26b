#include "sympow/abgroup.hpp"

#include <sstream>
#include <stdexcept>

namespace sympow {

namespace {

Int positive_mod(const Int& a, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

// Invariants of a diagonal-style list after SNF normalization, 1s dropped.
std::vector<Int> normalize_factors(const std::vector<Int>& factors) {
  for (const Int& f : factors)
    if (f < 0) throw std::invalid_argument("AbGroup: negative invariant factor");
  SmithResult s = smith_normal_form(IntMatrix::diagonal(factors));
  std::vector<Int> out;
  const long n = static_cast<long>(factors.size());
  for (long i = 0; i < n; ++i) {
    Int d = i < std::min(s.d.rows(), s.d.cols()) ? s.d.at(i, i) : Int(0);
    if (d != 1) out.push_back(d);
  }
  // Rank deficit of the diagonal means free factors, which SNF lists as 0s
  // already; nothing else to pad.
  return out;
}

}  // namespace

AbGroup::AbGroup(const std::vector<Int>& factors) : inv_(normalize_factors(factors)) {}

AbGroup AbGroup::from_relations(long rank, const IntMatrix& relations) {
  if (relations.rows() != rank && relations.cols() != 0)
    throw std::invalid_argument("from_relations: relation row count mismatch");
  SmithResult s = smith_normal_form(relations.cols() == 0 ? IntMatrix(rank, 0) : relations);
  std::vector<Int> factors;
  for (long i = 0; i < rank; ++i) {
    Int d = i < std::min(s.d.rows(), s.d.cols()) ? s.d.at(i, i) : Int(0);
    factors.push_back(d);
  }
  return AbGroup(factors);
}

AbGroup AbGroup::parse(const std::string& spec) {
  std::vector<Int> factors;
  std::string cur;
  std::istringstream is(spec);
  while (std::getline(is, cur, ',')) {
    // trim spaces
    size_t b = cur.find_first_not_of(" \t");
    size_t e = cur.find_last_not_of(" \t");
    if (b == std::string::npos) continue;
    factors.emplace_back(cur.substr(b, e - b + 1));
  }
  return AbGroup(factors);
}

bool AbGroup::is_finite() const {
  for (const Int& d : inv_)
    if (d == 0) return false;
  return true;
}

Int AbGroup::order() const {
  if (!is_finite()) throw std::domain_error("AbGroup::order: group is infinite");
  Int n(1);
  for (const Int& d : inv_) n *= d;
  return n;
}

std::vector<Int> AbGroup::reduce(std::vector<Int> v) const {
  if (v.size() != inv_.size()) throw std::invalid_argument("AbGroup::reduce: length mismatch");
  for (size_t i = 0; i < v.size(); ++i)
    if (inv_[i] != 0) v[i] = positive_mod(v[i], inv_[i]);
  return v;
}

std::vector<Int> AbGroup::add(const std::vector<Int>& a, const std::vector<Int>& b) const {
  if (a.size() != b.size()) throw std::invalid_argument("AbGroup::add: length mismatch");
  std::vector<Int> r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return reduce(std::move(r));
}

std::vector<Int> AbGroup::sub(const std::vector<Int>& a, const std::vector<Int>& b) const {
  std::vector<Int> r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return reduce(std::move(r));
}

std::vector<Int> AbGroup::scale(const Int& s, const std::vector<Int>& a) const {
  std::vector<Int> r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return reduce(std::move(r));
}

bool AbGroup::is_zero(const std::vector<Int>& v) const {
  for (const Int& x : reduce(v))
    if (x != 0) return false;
  return true;
}

bool AbGroup::equal(const std::vector<Int>& a, const std::vector<Int>& b) const {
  return reduce(a) == reduce(b);
}

std::vector<std::vector<Int>> AbGroup::elements() const {
  Int n = order();
  if (n > 200000) throw std::domain_error("AbGroup::elements: group too large to enumerate");
  std::vector<std::vector<Int>> out;
  out.push_back(zero());
  for (size_t i = 0; i < inv_.size(); ++i) {
    std::vector<std::vector<Int>> next;
    for (Int v(0); v < inv_[i]; ++v)
      for (const auto& e : out) {
        auto e2 = e;
        e2[i] = v;
        next.push_back(std::move(e2));
      }
    out = std::move(next);
  }
  return out;
}

std::string AbGroup::str() const {
  if (inv_.empty()) return "1";
  std::ostringstream os;
  for (size_t i = 0; i < inv_.size(); ++i) {
    if (i) os << ",";
    os << inv_[i].get_str();
  }
  return os.str();
}

// ---- GroupHom ----------------------------------------------------------------

GroupHom::GroupHom(AbGroup source, AbGroup target, IntMatrix matrix)
    : src_(std::move(source)), tgt_(std::move(target)), m_(std::move(matrix)) {
  if (m_.rows() != tgt_.rank() || m_.cols() != src_.rank())
    throw std::invalid_argument("GroupHom: matrix shape mismatch");
  for (long j = 0; j < m_.cols(); ++j) {
    m_.set_column(j, tgt_.reduce(m_.column(j)));
    const Int& d = src_.invariants()[static_cast<size_t>(j)];
    if (d == 0) continue;
    if (!tgt_.is_zero(tgt_.scale(d, m_.column(j))))
      throw std::invalid_argument("GroupHom: matrix does not respect source relations");
  }
}

GroupHom GroupHom::identity(const AbGroup& g) {
  return GroupHom(g, g, IntMatrix::identity(g.rank()));
}

GroupHom GroupHom::zero(const AbGroup& source, const AbGroup& target) {
  return GroupHom(source, target, IntMatrix(target.rank(), source.rank()));
}

GroupHom GroupHom::multiplication_by(const Int& s, const AbGroup& g) {
  return GroupHom(g, g, IntMatrix::identity(g.rank()).scaled(s));
}

std::vector<Int> GroupHom::apply(const std::vector<Int>& x) const {
  return tgt_.reduce(m_.apply(x));
}

GroupHom GroupHom::compose(const GroupHom& inner) const {
  if (!(inner.tgt_ == src_)) throw std::invalid_argument("GroupHom::compose: type mismatch");
  return GroupHom(inner.src_, tgt_, m_ * inner.m_);
}

GroupHom GroupHom::plus(const GroupHom& o) const {
  if (!(src_ == o.src_) || !(tgt_ == o.tgt_))
    throw std::invalid_argument("GroupHom::plus: type mismatch");
  return GroupHom(src_, tgt_, m_ + o.m_);
}

bool GroupHom::equal(const GroupHom& o) const {
  if (!(src_ == o.src_) || !(tgt_ == o.tgt_)) return false;
  for (long j = 0; j < m_.cols(); ++j)
    if (!tgt_.equal(m_.column(j), o.m_.column(j))) return false;
  return true;
}

// ---- presentation machinery ---------------------------------------------------

IntMatrix Presentation::relation_columns() const {
  std::vector<std::vector<Int>> cols;
  for (long i = 0; i < dim(); ++i) {
    if (moduli[static_cast<size_t>(i)] == 0) continue;
    std::vector<Int> c(static_cast<size_t>(dim()), Int(0));
    c[static_cast<size_t>(i)] = moduli[static_cast<size_t>(i)];
    cols.push_back(std::move(c));
  }
  return IntMatrix::from_columns(dim(), cols);
}

std::vector<Int> Presentation::reduce(std::vector<Int> v) const {
  if (v.size() != moduli.size()) throw std::invalid_argument("Presentation::reduce: length");
  for (size_t i = 0; i < v.size(); ++i)
    if (moduli[i] != 0) v[i] = positive_mod(v[i], moduli[i]);
  return v;
}

LatticeSolver::LatticeSolver(IntMatrix basis) : b_(std::move(basis)), s_(smith_normal_form(b_)) {}

std::optional<std::vector<Int>> LatticeSolver::solve(const std::vector<Int>& x) const {
  if (static_cast<long>(x.size()) != b_.rows())
    throw std::invalid_argument("LatticeSolver::solve: length mismatch");
  std::vector<Int> ux = s_.u.apply(x);
  std::vector<Int> z(static_cast<size_t>(b_.cols()), Int(0));
  const long n = std::min(b_.rows(), b_.cols());
  for (long i = 0; i < n; ++i) {
    const Int& di = s_.d.at(i, i);
    if (di == 0) {
      if (ux[static_cast<size_t>(i)] != 0) return std::nullopt;
      continue;
    }
    if (ux[static_cast<size_t>(i)] % di != 0) return std::nullopt;
    z[static_cast<size_t>(i)] = ux[static_cast<size_t>(i)] / di;
  }
  for (long i = n; i < b_.rows(); ++i)
    if (ux[static_cast<size_t>(i)] != 0) return std::nullopt;
  return s_.v.apply(z);
}

bool SubgroupData::contains(const std::vector<Int>& x) const {
  return solver.solve(x).has_value();
}

std::vector<Int> SubgroupData::coords(const std::vector<Int>& x) const {
  auto w = solver.solve(x);
  if (!w) throw std::domain_error("SubgroupData::coords: element not in subgroup");
  std::vector<Int> z = uprime.apply(*w);
  std::vector<Int> out;
  out.reserve(kept.size());
  for (size_t idx = 0; idx < kept.size(); ++idx) {
    const long i = kept[idx];
    Int val = z[static_cast<size_t>(i)];
    const Int& d = full_invariants[static_cast<size_t>(i)];
    if (d != 0) val = positive_mod(val, d);
    out.push_back(std::move(val));
  }
  return out;
}

SubgroupData subgroup_from_generators(const Presentation& p, const IntMatrix& gens) {
  if (gens.cols() > 0 && gens.rows() != p.dim())
    throw std::invalid_argument("subgroup_from_generators: generator length mismatch");
  IntMatrix rel = p.relation_columns();
  IntMatrix all = (gens.cols() > 0 ? gens : IntMatrix(p.dim(), 0)).with_appended_columns(rel);
  IntMatrix basis = column_hnf(all);  // p.dim() x rho, full column rank
  const long rho = basis.cols();

  LatticeSolver solver(basis);
  // Express the ambient relations in the lattice basis.
  IntMatrix y(rho, rel.cols());
  for (long j = 0; j < rel.cols(); ++j) {
    auto w = solver.solve(rel.column(j));
    if (!w) throw std::logic_error("subgroup_from_generators: relation outside lattice");
    y.set_column(j, *w);
  }
  SmithResult s = smith_normal_form(y);

  std::vector<Int> full_inv(static_cast<size_t>(rho), Int(0));
  for (long i = 0; i < std::min(rho, y.cols()); ++i) full_inv[static_cast<size_t>(i)] = s.d.at(i, i);
  std::vector<long> kept;
  std::vector<Int> inv;
  for (long i = 0; i < rho; ++i)
    if (full_inv[static_cast<size_t>(i)] != 1) {
      kept.push_back(i);
      inv.push_back(full_inv[static_cast<size_t>(i)]);
    }

  // Generators in ambient coordinates: columns of basis * u_inv at kept slots.
  IntMatrix gen_all = basis * s.u_inv;
  std::vector<std::vector<Int>> gcols;
  for (long i : kept) gcols.push_back(p.reduce(gen_all.column(i)));
  IntMatrix generators = IntMatrix::from_columns(p.dim(), gcols);

  return SubgroupData{AbGroup(inv), std::move(generators), std::move(solver), s.u,
                      std::move(full_inv), std::move(kept)};
}

std::vector<Int> QuotientData::project(const std::vector<Int>& x) const {
  return group.reduce(projection.apply(x));
}

QuotientData quotient_by(const Presentation& p, const IntMatrix& gens) {
  if (gens.cols() > 0 && gens.rows() != p.dim())
    throw std::invalid_argument("quotient_by: generator length mismatch");
  IntMatrix all = p.relation_columns().with_appended_columns(
      gens.cols() > 0 ? gens : IntMatrix(p.dim(), 0));
  SmithResult s = smith_normal_form(all.cols() == 0 ? IntMatrix(p.dim(), 0) : all);

  const long n = p.dim();
  std::vector<Int> full_inv(static_cast<size_t>(n), Int(0));
  for (long i = 0; i < std::min(n, all.cols()); ++i) full_inv[static_cast<size_t>(i)] = s.d.at(i, i);
  std::vector<long> kept;
  std::vector<Int> inv;
  for (long i = 0; i < n; ++i)
    if (full_inv[static_cast<size_t>(i)] != 1) {
      kept.push_back(i);
      inv.push_back(full_inv[static_cast<size_t>(i)]);
    }
  IntMatrix proj(static_cast<long>(kept.size()), n);
  for (size_t r = 0; r < kept.size(); ++r)
    for (long j = 0; j < n; ++j) proj.at(static_cast<long>(r), j) = s.u.at(kept[r], j);
  return QuotientData{AbGroup(inv), std::move(proj)};
}

SubgroupData kernel_of_map(const Presentation& src, const Presentation& tgt, const IntMatrix& m) {
  if (m.rows() != tgt.dim() || m.cols() != src.dim())
    throw std::invalid_argument("kernel_of_map: matrix shape mismatch");
  // The map must send source relations into the target relation lattice.
  for (long i = 0; i < src.dim(); ++i) {
    const Int& d = src.moduli[static_cast<size_t>(i)];
    if (d == 0) continue;
    std::vector<Int> img = m.column(i);
    for (auto& v : img) v *= d;
    for (const Int& v : tgt.reduce(img))
      if (v != 0) throw std::invalid_argument("kernel_of_map: map does not respect relations");
  }
  IntMatrix tr = tgt.relation_columns();
  IntMatrix aug = m.with_appended_columns(tr.scaled(Int(-1)));
  IntMatrix ker = integer_kernel_basis(aug);
  std::vector<std::vector<Int>> xparts;
  for (long j = 0; j < ker.cols(); ++j) {
    std::vector<Int> col(static_cast<size_t>(src.dim()));
    for (long i = 0; i < src.dim(); ++i) col[static_cast<size_t>(i)] = ker.at(i, j);
    xparts.push_back(std::move(col));
  }
  return subgroup_from_generators(src, IntMatrix::from_columns(src.dim(), xparts));
}

// ---- spec-level operations -----------------------------------------------------

HomGroupResult hom_group(const AbGroup& a, const AbGroup& b) {
  struct RawGen {
    Int factor;
    IntMatrix m;
  };
  std::vector<RawGen> raw;
  for (long i = 0; i < a.rank(); ++i)
    for (long j = 0; j < b.rank(); ++j) {
      const Int& ai = a.invariants()[static_cast<size_t>(i)];
      const Int& bj = b.invariants()[static_cast<size_t>(j)];
      Int factor, image;
      if (ai == 0) {
        factor = bj;  // Hom(Z, Z/b) = Z/b; Hom(Z, Z) = Z (factor 0)
        image = 1;
      } else if (bj == 0) {
        continue;  // Hom(Z/a, Z) = 0
      } else {
        factor = int_gcd(ai, bj);
        if (factor == 1) continue;
        image = bj / factor;
      }
      IntMatrix m(b.rank(), a.rank());
      m.at(j, i) = image;
      raw.push_back({std::move(factor), std::move(m)});
    }

  if (raw.empty()) return HomGroupResult{AbGroup(), {}};

  std::vector<Int> factors;
  for (const auto& g : raw) factors.push_back(g.factor);
  SmithResult s = smith_normal_form(IntMatrix::diagonal(factors));
  const long n = static_cast<long>(raw.size());

  AbGroup group = AbGroup(factors);
  std::vector<GroupHom> gens;
  for (long v = 0; v < n; ++v) {
    Int d = v < std::min(s.d.rows(), s.d.cols()) ? s.d.at(v, v) : Int(0);
    if (d == 1) continue;
    IntMatrix sum(b.rank(), a.rank());
    for (long u = 0; u < n; ++u) {
      const Int& c = s.u_inv.at(u, v);
      if (c != 0) sum = sum + raw[static_cast<size_t>(u)].m.scaled(c);
    }
    gens.emplace_back(a, b, std::move(sum));
  }
  if (static_cast<long>(gens.size()) != group.rank())
    throw std::logic_error("hom_group: generator/invariant mismatch");
  return HomGroupResult{std::move(group), std::move(gens)};
}

QuotientResult quotient(const AbGroup& a, const std::vector<std::vector<Int>>& gens) {
  for (const auto& g : gens)
    if (static_cast<long>(g.size()) != a.rank())
      throw std::invalid_argument("quotient: malformed element vector");
  QuotientData qd = quotient_by(Presentation::of(a), IntMatrix::from_columns(a.rank(), gens));
  GroupHom proj(a, qd.group, qd.projection);
  return QuotientResult{qd.group, std::move(proj)};
}

SubgroupData kernel_of_hom(const GroupHom& f) {
  return kernel_of_map(Presentation::of(f.source()), Presentation::of(f.target()), f.matrix());
}

// ---- equivariant hom group -----------------------------------------------------

std::vector<IntMatrix> EquivariantHomResult::generator_matrices() const {
  std::vector<IntMatrix> out;
  for (long j = 0; j < sub.generators.cols(); ++j) out.push_back(matrix_of_flat(sub.generators.column(j)));
  return out;
}

IntMatrix EquivariantHomResult::matrix_of_flat(const std::vector<Int>& flat_vec) const {
  IntMatrix f(s, r);
  for (long i = 0; i < r; ++i)
    for (long t = 0; t < s; ++t) f.at(t, i) = flat_vec[static_cast<size_t>(i * s + t)];
  return f;
}

std::vector<Int> EquivariantHomResult::flat_of_matrix(const IntMatrix& f) const {
  if (f.rows() != s || f.cols() != r)
    throw std::invalid_argument("EquivariantHomResult: element matrix shape mismatch");
  std::vector<Int> v(static_cast<size_t>(r * s));
  for (long i = 0; i < r; ++i)
    for (long t = 0; t < s; ++t) v[static_cast<size_t>(i * s + t)] = f.at(t, i);
  return flat.reduce(std::move(v));
}

std::vector<Int> EquivariantHomResult::coords_of_matrix(const IntMatrix& f) const {
  return sub.coords(flat_of_matrix(f));
}

IntMatrix EquivariantHomResult::matrix_of_coords(const std::vector<Int>& coords) const {
  if (static_cast<long>(coords.size()) != group.rank())
    throw std::invalid_argument("EquivariantHomResult: coordinate length mismatch");
  std::vector<Int> acc(static_cast<size_t>(r * s), Int(0));
  for (long j = 0; j < group.rank(); ++j) {
    const auto col = sub.generators.column(j);
    for (size_t i = 0; i < acc.size(); ++i) acc[i] += coords[static_cast<size_t>(j)] * col[i];
  }
  return matrix_of_flat(flat.reduce(std::move(acc)));
}

EquivariantHomResult equivariant_hom_group(long r, const IntMatrix& sigma, const AbGroup& c,
                                           const GroupHom& phi) {
  if (sigma.rows() != r || sigma.cols() != r)
    throw std::invalid_argument("equivariant_hom_group: sigma shape mismatch");
  Int det = sigma.determinant();
  if (det != 1 && det != -1)
    throw std::invalid_argument("equivariant_hom_group: sigma not invertible over Z");
  if (!phi.is_endomorphism() || !(phi.source() == c))
    throw std::invalid_argument("equivariant_hom_group: phi is not an endomorphism of C");

  const long s = c.rank();
  Presentation flat;
  flat.moduli.resize(static_cast<size_t>(r * s));
  for (long i = 0; i < r; ++i)
    for (long t = 0; t < s; ++t)
      flat.moduli[static_cast<size_t>(i * s + t)] = c.invariants()[static_cast<size_t>(t)];

  // Condition F*sigma = phi*F on flattened coordinates.
  IntMatrix m(r * s, r * s);
  for (long i = 0; i < r; ++i)
    for (long t = 0; t < s; ++t)
      for (long j = 0; j < r; ++j)
        for (long u = 0; u < s; ++u) {
          Int entry(0);
          if (t == u) entry += sigma.at(j, i);
          if (i == j) entry -= phi.matrix().at(t, u);
          if (entry != 0) m.at(i * s + t, j * s + u) = entry;
        }

  SubgroupData sub = kernel_of_map(flat, flat, m);
  EquivariantHomResult out{sub.group, std::move(sub), std::move(flat), r, s};
  return out;
}

}  // namespace sympow
