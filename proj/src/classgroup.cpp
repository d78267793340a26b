#include "sympow/classgroup.hpp"

#include <numeric>
#include <stdexcept>

namespace sympow {

namespace {

long reduced_mod(long a, long m) { return ((a % m) + m) % m; }

IntMatrix outer_deg(const CharTable& t, const std::vector<Int>& c) {
  IntMatrix f(static_cast<long>(c.size()), t.num_classes());
  for (long i = 0; i < t.num_classes(); ++i) {
    Int deg = t.degree(i);
    for (long u = 0; u < static_cast<long>(c.size()); ++u)
      f.at(u, i) = deg * c[static_cast<size_t>(u)];
  }
  return f;
}

// Endomorphism of H induced by right multiplication of element matrices.
GroupHom action_by_right_matrix(const ClassgroupModel& m, const IntMatrix& rm,
                                const char* who) {
  const long rank = m.h.group.rank();
  IntMatrix endo(rank, rank);
  auto gens = m.h.generator_matrices();
  for (long v = 0; v < rank; ++v) {
    IntMatrix img = gens[static_cast<size_t>(v)] * rm;
    std::vector<Int> coords;
    try {
      coords = m.h.coords_of_matrix(img);
    } catch (const std::domain_error&) {
      throw std::logic_error(std::string(who) + ": action left the equivariant lattice");
    }
    endo.set_column(v, coords);
  }
  return GroupHom(m.h.group, m.h.group, std::move(endo));
}

}  // namespace

ClassgroupModel build_classgroup(TablePtr table, long q, AbGroup c, GroupHom phi) {
  if (!table) throw std::invalid_argument("build_classgroup: null table");
  const long n = table->order();
  if (q < 1 || std::gcd(reduced_mod(q, n) == 0 ? n : reduced_mod(q, n), n) != 1)
    throw std::invalid_argument("build_classgroup: q must be coprime to the group order");
  if (!phi.is_endomorphism() || !(phi.source() == c))
    throw std::invalid_argument("build_classgroup: phi is not an endomorphism of C");

  IntMatrix perm = adams_matrix(*table, q);
  if (!perm.is_permutation())
    throw std::invalid_argument("build_classgroup: psi^q does not permute the irreducibles");

  EquivariantHomResult h = equivariant_hom_group(table->num_classes(), perm, c, phi);
  return ClassgroupModel{std::move(table), q, std::move(c), std::move(phi), std::move(perm),
                         std::move(h)};
}

GroupHom sigma_on_cl(long k, const ClassgroupModel& m) {
  const long n = m.table->order();
  if (k < 1 || std::gcd(reduced_mod(k, n) == 0 ? n : reduced_mod(k, n), n) != 1)
    throw std::invalid_argument("sigma_on_cl: k must be coprime to the group order");
  return action_by_right_matrix(m, adams_adjoint_matrix(*m.table, k), "sigma_on_cl");
}

IndSubgroupResult ind_subgroup(const ClassgroupModel& m,
                               const std::optional<std::vector<std::vector<Int>>>& c0) {
  std::vector<std::vector<Int>> c0_gens;
  if (c0) {
    for (const auto& g : *c0) {
      std::vector<Int> v = m.c.reduce(g);
      if (!m.c.equal(m.phi.apply(v), v))
        throw std::invalid_argument("ind_subgroup: C0 generator not phi-stable");
      c0_gens.push_back(std::move(v));
    }
  } else {
    GroupHom phi_minus_id(m.c, m.c, m.phi.matrix() - IntMatrix::identity(m.c.rank()));
    SubgroupData fixed = kernel_of_map(Presentation::of(m.c), Presentation::of(m.c),
                                       phi_minus_id.matrix());
    for (long j = 0; j < fixed.generators.cols(); ++j)
      c0_gens.push_back(fixed.generators.column(j));
  }

  std::vector<std::vector<Int>> h_gens;
  for (const auto& cvec : c0_gens)
    h_gens.push_back(m.h.coords_of_matrix(outer_deg(*m.table, cvec)));

  Presentation hp = Presentation::of(m.h.group);
  IntMatrix gen_cols = IntMatrix::from_columns(m.h.group.rank(), h_gens);
  SubgroupData sub = subgroup_from_generators(hp, gen_cols);
  QuotientData quot = quotient_by(hp, gen_cols);
  return IndSubgroupResult{std::move(c0_gens), std::move(h_gens), std::move(sub),
                           std::move(quot)};
}

CntReport verify_cnt_duality(const ClassgroupModel& m, long k) {
  const long e = m.table->exponent();
  CntReport rep;
  rep.k = k;

  GroupHom act_k = sigma_on_cl(k, m);

  if (m.table->is_abelian()) {
    rep.abelian_checked = true;
    rep.kp = mod_inverse(k, e);
    IntMatrix adj = adams_adjoint_matrix(*m.table, k);
    IntMatrix pull = power_pullback_matrix(*m.table, rep.kp);
    rep.adjoint_equals_pullback = adj == pull;
    GroupHom act_pull = action_by_right_matrix(m, pull, "verify_cnt_duality");
    rep.action_equals_pullback_action = act_k.equal(act_pull);
  }

  GroupHom act_k_plus_e = sigma_on_cl(k + e, m);
  rep.periodicity = act_k.equal(act_k_plus_e);

  // additivity on generator pairs, recomputed through element matrices
  rep.additivity = true;
  IntMatrix adj = adams_adjoint_matrix(*m.table, k);
  const long rank = m.h.group.rank();
  for (long u = 0; u < rank && rep.additivity; ++u)
    for (long v = u; v < rank && rep.additivity; ++v) {
      std::vector<Int> eu(static_cast<size_t>(rank), Int(0)), ev(eu);
      eu[static_cast<size_t>(u)] = 1;
      ev[static_cast<size_t>(v)] = 1;
      IntMatrix sum_elem = m.h.matrix_of_coords(m.h.group.add(eu, ev));
      std::vector<Int> lhs = m.h.coords_of_matrix(sum_elem * adj);
      std::vector<Int> rhs = m.h.group.add(act_k.apply(eu), act_k.apply(ev));
      rep.additivity = m.h.group.equal(lhs, rhs);
    }
  return rep;
}

IntMatrix h1_class_matrix(const ClassgroupModel& m, const IntMatrix& h) {
  if (!m.table->abelian().has_value())
    throw std::invalid_argument("h1_class_matrix: table is not a generated abelian table");
  if (m.q != 1) throw std::invalid_argument("h1_class_matrix: model must have trivial Galois action");
  if (!m.phi.equal(GroupHom::identity(m.c)))
    throw std::invalid_argument("h1_class_matrix: model must have phi = identity");
  const AbelianStructure& ab = *m.table->abelian();
  const long t = static_cast<long>(ab.invariants.size());
  if (h.rows() != m.c.rank() || h.cols() != t)
    throw std::invalid_argument("h1_class_matrix: element shape mismatch");
  for (long i = 0; i < t; ++i)
    if (!m.c.is_zero(m.c.scale(Int(ab.invariants[static_cast<size_t>(i)]), h.column(i))))
      throw std::invalid_argument("h1_class_matrix: generator image order mismatch");

  IntMatrix f(m.c.rank(), m.table->num_classes());
  for (long j = 0; j < m.table->num_classes(); ++j) {
    std::vector<Int> acc(static_cast<size_t>(m.c.rank()), Int(0));
    for (long i = 0; i < t; ++i) {
      long b = ab.char_tuple[static_cast<size_t>(j)][static_cast<size_t>(i)];
      if (b == 0) continue;
      auto col = h.column(i);
      for (size_t u = 0; u < acc.size(); ++u) acc[u] += Int(b) * col[u];
    }
    f.set_column(j, m.c.reduce(acc));
  }
  return f;
}

UnramifiedCheck verify_unramified_formula(const ClassgroupModel& m, const IntMatrix& h, long k) {
  const long n = m.table->order();
  const long e = m.table->exponent();
  if (std::gcd(reduced_mod(k, n) == 0 ? n : reduced_mod(k, n), n) != 1)
    throw std::invalid_argument("verify_unramified_formula: k not coprime to the group order");
  UnramifiedCheck out;
  out.k = k;
  out.kp = mod_inverse(k, e);

  std::vector<Int> x = m.h.coords_of_matrix(h1_class_matrix(m, h));
  std::vector<Int> via_sigma = sigma_on_cl(k, m).apply(x);
  std::vector<Int> via_scale = m.h.group.scale(Int(out.kp), x);
  IntMatrix h_scaled = h.scaled(Int(out.kp));
  std::vector<Int> via_twist = m.h.coords_of_matrix(h1_class_matrix(m, h_scaled));

  out.sigma_matches_scaling = m.h.group.equal(via_sigma, via_scale);
  out.scaling_matches_twist = m.h.group.equal(via_scale, via_twist);
  return out;
}

}  // namespace sympow
