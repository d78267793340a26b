#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "sympow/abgroup.hpp"
#include "sympow/int_matrix.hpp"
#include "sympow/snf.hpp"

using namespace sympow;

namespace {

// d_1 * ... * d_k as gcd of all k x k minors (the classical characterization,
// independent of the elimination path).
std::vector<Int> invariant_factors_by_minors(const IntMatrix& m) {
  const long n = std::min(m.rows(), m.cols());
  std::vector<Int> dk;
  Int prev(1);
  for (long k = 1; k <= n; ++k) {
    std::vector<long> rsel(static_cast<size_t>(k)), csel(static_cast<size_t>(k));
    std::iota(rsel.begin(), rsel.end(), 0);
    Int g(0);
    for (;;) {
      std::iota(csel.begin(), csel.end(), 0);
      for (;;) {
        IntMatrix sub(k, k);
        for (long i = 0; i < k; ++i)
          for (long j = 0; j < k; ++j)
            sub.at(i, j) = m.at(rsel[static_cast<size_t>(i)], csel[static_cast<size_t>(j)]);
        g = int_gcd(g, sub.determinant());
        long pos = k - 1;
        while (pos >= 0 && csel[static_cast<size_t>(pos)] == m.cols() - k + pos) --pos;
        if (pos < 0) break;
        ++csel[static_cast<size_t>(pos)];
        for (long i = pos + 1; i < k; ++i)
          csel[static_cast<size_t>(i)] = csel[static_cast<size_t>(i - 1)] + 1;
      }
      long pos = k - 1;
      while (pos >= 0 && rsel[static_cast<size_t>(pos)] == m.rows() - k + pos) --pos;
      if (pos < 0) break;
      ++rsel[static_cast<size_t>(pos)];
      for (long i = pos + 1; i < k; ++i)
        rsel[static_cast<size_t>(i)] = rsel[static_cast<size_t>(i - 1)] + 1;
    }
    if (g == 0) break;  // rank reached; remaining factors are 0
    dk.push_back(g / prev);
    prev = g;
  }
  return dk;  // nonzero invariant factors only
}

void check_snf_contract(const IntMatrix& m) {
  SmithResult s = smith_normal_form(m);
  CHECK(s.u * m * s.v == s.d);
  CHECK((s.u * s.u_inv).is_identity());
  CHECK((s.v * s.v_inv).is_identity());
  Int du = s.u.determinant();
  Int dv = s.v.determinant();
  CHECK((du == 1 || du == -1));
  CHECK((dv == 1 || dv == -1));
  auto diag = s.diagonal();
  for (size_t i = 0; i + 1 < diag.size(); ++i) {
    CHECK(diag[i] >= 0);
    if (diag[i] != 0)
      CHECK(diag[i + 1] % diag[i] == 0);
    else
      CHECK(diag[i + 1] == 0);
  }
  for (long i = 0; i < s.d.rows(); ++i)
    for (long j = 0; j < s.d.cols(); ++j)
      if (i != j) CHECK(s.d.at(i, j) == 0);
}

}  // namespace

TEST_CASE("smith normal form, pinned examples") {
  SmithResult a = smith_normal_form(IntMatrix{{3, 0}, {0, 5}});
  CHECK(a.diagonal() == std::vector<Int>{Int(1), Int(15)});
  check_snf_contract(IntMatrix{{3, 0}, {0, 5}});

  SmithResult b = smith_normal_form(IntMatrix{{2, 4}, {6, 8}});
  CHECK(b.diagonal() == std::vector<Int>{Int(2), Int(4)});

  SmithResult z = smith_normal_form(IntMatrix(2, 3));
  CHECK(z.d.is_zero());
  CHECK(z.u.is_identity());
  CHECK(z.v.is_identity());
}

TEST_CASE("smith normal form vs gcd-of-minors oracle") {
  std::mt19937_64 eng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    long r = 1 + static_cast<long>(eng() % 4);
    long c = 1 + static_cast<long>(eng() % 4);
    IntMatrix m(r, c);
    for (long i = 0; i < r; ++i)
      for (long j = 0; j < c; ++j) m.at(i, j) = static_cast<long>(eng() % 19) - 9;
    check_snf_contract(m);
    SmithResult s = smith_normal_form(m);
    std::vector<Int> nonzero;
    for (const Int& d : s.diagonal())
      if (d != 0) nonzero.push_back(d);
    CHECK(nonzero == invariant_factors_by_minors(m));
  }
}

TEST_CASE("integer kernels and solvers") {
  IntMatrix m{{2, 4, 6}, {1, 2, 3}};
  IntMatrix k = integer_kernel_basis(m);
  CHECK(k.cols() == 2);
  CHECK((m * k).is_zero());

  IntMatrix b{{2}};
  CHECK(solve_columns(b, {Int(4)}).value() == std::vector<Int>{Int(2)});
  CHECK(!solve_columns(b, {Int(3)}).has_value());

  IntMatrix u{{1, 2}, {0, 1}};
  CHECK((unimodular_inverse(u) * u).is_identity());
  CHECK_THROWS_AS(unimodular_inverse(IntMatrix{{2}}), std::invalid_argument);
}

TEST_CASE("column hnf is a canonical lattice basis") {
  IntMatrix a{{2, 0}, {0, 3}};
  IntMatrix b{{2, 2}, {3, 0}};  // same lattice, different generators
  CHECK(column_hnf(a) == column_hnf(b));
  IntMatrix with_zero{{2, 0, 4}, {0, 0, 6}};
  CHECK(column_hnf(with_zero).cols() == 2);
}

TEST_CASE("abelian group normal form") {
  CHECK(AbGroup::parse("4,0").str() == "4,0");
  CHECK(AbGroup({Int(3), Int(5)}).str() == "15");
  CHECK(AbGroup({Int(1)}).is_trivial());
  CHECK(AbGroup::parse("0,49").str() == "49,0");
  CHECK(AbGroup::parse("6").order() == 6);
  CHECK(!AbGroup::parse("4,0").is_finite());
  AbGroup g = AbGroup::parse("2,4");
  CHECK(g.reduce({Int(5), Int(-1)}) == std::vector<Int>{Int(1), Int(3)});
  CHECK(g.elements().size() == 8);
}

TEST_CASE("hom groups, pinned examples") {
  CHECK(hom_group(AbGroup::parse("0"), AbGroup::parse("4,0")).group.str() == "4,0");
  CHECK(hom_group(AbGroup::parse("4"), AbGroup::parse("6")).group.str() == "2");
  long count = 0;
  for (long mm = 0; mm < 6; ++mm) count += (4 * mm) % 6 == 0;
  CHECK(count == 2);
  CHECK(hom_group(AbGroup::parse("2"), AbGroup::parse("0")).group.is_trivial());
}

TEST_CASE("hom group cardinality vs brute force") {
  std::vector<AbGroup> groups = {AbGroup::parse("2"),   AbGroup::parse("3"),
                                 AbGroup::parse("4"),   AbGroup::parse("2,4"),
                                 AbGroup::parse("6"),   AbGroup::parse("2,2"),
                                 AbGroup::parse("3,9"), AbGroup::parse("36")};
  for (const auto& a : groups)
    for (const auto& b : groups) {
      HomGroupResult h = hom_group(a, b);
      long count = 0;
      std::vector<std::vector<Int>> belems = b.elements();
      std::vector<size_t> pick(static_cast<size_t>(a.rank()), 0);
      for (;;) {
        bool ok = true;
        for (long i = 0; i < a.rank() && ok; ++i)
          ok = b.is_zero(b.scale(a.invariants()[static_cast<size_t>(i)],
                                 belems[pick[static_cast<size_t>(i)]]));
        count += ok;
        long pos = a.rank() - 1;
        while (pos >= 0 && ++pick[static_cast<size_t>(pos)] == belems.size()) {
          pick[static_cast<size_t>(pos)] = 0;
          --pos;
        }
        if (pos < 0) break;
      }
      CHECK(h.group.order() == count);
      CHECK(static_cast<long>(h.generators.size()) == h.group.rank());
      for (const auto& gen : h.generators)
        for (long j = 0; j < a.rank(); ++j)
          CHECK(b.is_zero(
              b.scale(a.invariants()[static_cast<size_t>(j)], gen.matrix().column(j))));
    }
}

TEST_CASE("quotients") {
  AbGroup z2 = AbGroup::parse("0,0");
  CHECK(quotient(z2, {{Int(2), Int(0)}}).group.str() == "2,0");

  AbGroup a = AbGroup::parse("4,8");
  CHECK(quotient(a, {{Int(1), Int(0)}, {Int(0), Int(1)}}).group.is_trivial());
  CHECK(quotient(a, {}).group.str() == "4,8");
  CHECK_THROWS_AS(quotient(a, {{Int(1)}}), std::invalid_argument);

  // Lagrange: |A| = |subgroup| * |quotient|
  std::mt19937_64 eng(5);
  for (int trial = 0; trial < 40; ++trial) {
    AbGroup g = AbGroup::parse(trial % 2 ? "4,8" : "2,6");
    auto elems = g.elements();
    std::vector<Int> x = elems[eng() % elems.size()];
    std::vector<Int> y = elems[eng() % elems.size()];
    QuotientResult q = quotient(g, {x, y});
    std::set<std::vector<std::string>> seen;
    auto key = [&](const std::vector<Int>& v) {
      std::vector<std::string> k;
      for (const Int& t : v) k.push_back(t.get_str());
      return k;
    };
    std::vector<std::vector<Int>> frontier = {g.zero()};
    seen.insert(key(g.zero()));
    while (!frontier.empty()) {
      std::vector<std::vector<Int>> next;
      for (const auto& el : frontier)
        for (const auto& gen : {x, y}) {
          auto s = g.add(el, gen);
          if (seen.insert(key(s)).second) next.push_back(s);
        }
      frontier = std::move(next);
    }
    CHECK(g.order() == q.group.order() * Int(static_cast<long>(seen.size())));
    CHECK(q.group.is_zero(q.projection.apply(x)));
    CHECK(q.group.is_zero(q.projection.apply(y)));
  }
}

TEST_CASE("subgroup presentations agree with brute-force membership") {
  AbGroup g = AbGroup::parse("4,8");
  Presentation p = Presentation::of(g);
  IntMatrix gens = IntMatrix::from_columns(2, {{Int(2), Int(2)}});
  SubgroupData sub = subgroup_from_generators(p, gens);
  // brute force the cyclic subgroup generated by (2,2)
  std::set<std::pair<long, long>> members;
  long x = 0, y = 0;
  do {
    members.insert({x, y});
    x = (x + 2) % 4;
    y = (y + 2) % 8;
  } while (!(x == 0 && y == 0));
  CHECK(sub.group.order() == static_cast<long>(members.size()));
  for (long a = 0; a < 4; ++a)
    for (long b = 0; b < 8; ++b)
      CHECK(sub.contains({Int(a), Int(b)}) == (members.count({a, b}) > 0));
  // coords round-trip on a member
  auto coords = sub.coords({Int(2), Int(2)});
  std::vector<Int> back(2, Int(0));
  for (size_t i = 0; i < coords.size(); ++i) {
    auto col = sub.generators.column(static_cast<long>(i));
    for (size_t j = 0; j < back.size(); ++j) back[j] += coords[i] * col[j];
  }
  CHECK(g.equal(back, {Int(2), Int(2)}));
}

TEST_CASE("equivariant hom groups, pinned examples") {
  AbGroup c4 = AbGroup::parse("4");
  EquivariantHomResult full =
      equivariant_hom_group(2, IntMatrix::identity(2), c4, GroupHom::identity(c4));
  CHECK(full.group.str() == "4,4");

  IntMatrix swap{{0, 1}, {1, 0}};
  EquivariantHomResult diag = equivariant_hom_group(2, swap, c4, GroupHom::identity(c4));
  CHECK(diag.group.str() == "4");
  IntMatrix gen = diag.generator_matrices()[0];
  CHECK(gen.at(0, 0) == gen.at(0, 1));

  AbGroup c5 = AbGroup::parse("5");
  EquivariantHomResult zero = equivariant_hom_group(
      1, IntMatrix::identity(1), c5, GroupHom::multiplication_by(Int(2), c5));
  CHECK(zero.group.is_trivial());
}

TEST_CASE("equivariant hom group vs direct enumeration") {
  struct Case {
    long r;
    IntMatrix sigma;
    std::string c;
    IntMatrix phi;
  };
  std::vector<Case> cases;
  cases.push_back({2, IntMatrix{{0, 1}, {1, 0}}, "4", IntMatrix{{1}}});
  cases.push_back({2, IntMatrix{{0, 1}, {1, 0}}, "6", IntMatrix{{5}}});
  cases.push_back({3, IntMatrix{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}, "4", IntMatrix{{3}}});
  cases.push_back({2, IntMatrix{{1, 1}, {0, 1}}, "2,4", IntMatrix{{1, 0}, {0, 1}}});
  for (auto& cs : cases) {
    AbGroup c = AbGroup::parse(cs.c);
    GroupHom phi(c, c, cs.phi);
    EquivariantHomResult h = equivariant_hom_group(cs.r, cs.sigma, c, phi);
    auto elems = c.elements();
    long count = 0;
    std::vector<size_t> pick(static_cast<size_t>(cs.r), 0);
    for (;;) {
      IntMatrix f(c.rank(), cs.r);
      for (long i = 0; i < cs.r; ++i) f.set_column(i, elems[pick[static_cast<size_t>(i)]]);
      IntMatrix lhs = f * cs.sigma;
      IntMatrix rhs = phi.matrix() * f;
      bool ok = true;
      for (long i = 0; i < cs.r && ok; ++i) ok = c.equal(lhs.column(i), rhs.column(i));
      if (ok) {
        ++count;
        CHECK_NOTHROW(h.coords_of_matrix(f));  // must lie in the computed lattice
      }
      long pos = cs.r - 1;
      while (pos >= 0 && ++pick[static_cast<size_t>(pos)] == elems.size()) {
        pick[static_cast<size_t>(pos)] = 0;
        --pos;
      }
      if (pos < 0) break;
    }
    CHECK(h.group.order() == count);
  }
}
