#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sympow/local_cover.hpp"

using namespace sympow;

namespace {

// Independent route to the resolvent class: decompose the map into
// character-isotypic blocks first (source basis vectors are eigenvectors of
// the group generator), express each block against the eigenvector basis of
// the target, and read the cokernel length of each block off the s-valuation
// of its polynomial determinant. No truncation, no big F_q elimination.
TorsionClass oracle_resolvent_class(const Cover& cov, long j) {
  const long e = cov.e;
  const GF& f = cov.field;
  auto mod_e = [&](long a) { return ((a % e) + e) % e; };
  std::vector<Int> mult(static_cast<size_t>(e), Int(0));
  const long inv_e = f.inv(e % f.p());

  for (long i = 0; i < e; ++i) {
    // source eigenvectors with eigenvalue zeta^i: t^alpha (x) t^{j+beta}
    // with j + beta = i mod e
    long beta = mod_e(i - j);
    // block matrix over F_q[s]: rows rho, columns alpha
    std::vector<std::vector<std::vector<long>>> block(
        static_cast<size_t>(e), std::vector<std::vector<long>>(static_cast<size_t>(e)));
    for (long alpha = 0; alpha < e; ++alpha) {
      long rho = mod_e(alpha + beta);
      long w = (alpha + beta - rho) / e;
      // image coefficients on the plain target basis (rho, c'')
      // Phi(t^a (x) t^{j+b}) = sum_c zeta^{c(j+b)} s^w t^{j+rho} (x) [g^{-c}]
      // coefficient of eigencovector v_{rho, i'}: (1/e) sum_{c''} zeta^{i'c''} x_{c''}
      for (long ip = 0; ip < e; ++ip) {
        long acc = 0;
        for (long cpp = 0; cpp < e; ++cpp) {
          long coeff = f.pow(cov.zeta, mod_e(-cpp * (j + beta)));
          acc = f.add(acc, f.mul(f.pow(cov.zeta, mod_e(ip * cpp)), coeff));
        }
        acc = f.mul(inv_e, acc);
        if (ip != i) {
          REQUIRE(acc == 0);  // equivariance: no leakage between characters
          continue;
        }
        std::vector<long> poly(static_cast<size_t>(w) + 1, 0);
        poly[static_cast<size_t>(w)] = acc;
        block[static_cast<size_t>(rho)][static_cast<size_t>(alpha)] = poly;
      }
    }
    // s-valuation of det(block) by expansion over permutations is overkill;
    // the block has one nonzero entry per column and row, so the determinant
    // is the product of the entries.
    long val = 0;
    std::vector<int> row_used(static_cast<size_t>(e), 0);
    for (long alpha = 0; alpha < e; ++alpha) {
      long hit = -1;
      for (long rho = 0; rho < e; ++rho)
        if (!block[static_cast<size_t>(rho)][static_cast<size_t>(alpha)].empty()) {
          REQUIRE(hit == -1);
          hit = rho;
        }
      REQUIRE(hit >= 0);
      REQUIRE(!row_used[static_cast<size_t>(hit)]);
      row_used[static_cast<size_t>(hit)] = 1;
      const auto& poly = block[static_cast<size_t>(hit)][static_cast<size_t>(alpha)];
      long v = 0;
      while (poly[static_cast<size_t>(v)] == 0) ++v;
      val += v;
    }
    mult[static_cast<size_t>(i)] = val;
  }
  return TorsionClass(e, std::move(mult));
}

}  // namespace

TEST_CASE("setup_cover") {
  Cover c = setup_cover(7, 3);
  CHECK(c.zeta == 2);  // 2^3 = 8 = 1 mod 7, exact order 3, smallest such
  CHECK(c.different_exponent() == 2);

  CHECK_THROWS_AS(setup_cover(7, 5), std::invalid_argument);  // 5 does not divide 6
  CHECK_THROWS_AS(setup_cover(6, 1), std::invalid_argument);  // not a prime power

  Cover triv = setup_cover(7, 1);
  CHECK(triv.zeta == 1);

  // prime power residue field
  Cover c9 = setup_cover(9, 4);
  CHECK(c9.field.multiplicative_order(c9.zeta) == 4);
}

TEST_CASE("fractional quotient classes") {
  Cover c = setup_cover(7, 3);
  CHECK(fractional_quotient_class(c, 0, 1) ==
        TorsionClass(3, {Int(1), Int(0), Int(0)}));
  CHECK(fractional_quotient_class(c, 1, 3) ==
        TorsionClass(3, {Int(0), Int(1), Int(1)}));
  CHECK(fractional_quotient_class(c, -3, 0) == TorsionClass::regular(3));
  CHECK_THROWS_AS(fractional_quotient_class(c, 2, 1), std::invalid_argument);

  // additive over filtrations
  for (long a = -4; a <= 2; ++a)
    for (long b = a; b <= 3; ++b)
      for (long cc = b; cc <= 4; ++cc)
        CHECK(fractional_quotient_class(c, a, cc) ==
              fractional_quotient_class(c, a, b) + fractional_quotient_class(c, b, cc));
}

TEST_CASE("reduce_mod_ind") {
  TorsionClass r = TorsionClass::regular(3);
  CHECK(reduce_mod_ind(r) == TorsionClass::zero(3));
  TorsionClass x(3, {Int(1), Int(2), Int(3)});
  CHECK(reduce_mod_ind(x) == TorsionClass(3, {Int(0), Int(1), Int(2)}));
  CHECK(reduce_mod_ind(reduce_mod_ind(x)) == reduce_mod_ind(x));
}

TEST_CASE("resolvent classes, pinned examples") {
  // unramified: zero class
  Cover triv = setup_cover(7, 1);
  ResolventResult r1 = resolvent_class(triv, 0);
  CHECK(r1.cls == TorsionClass::zero(1));
  CHECK(r1.det_valuation == 0);

  Cover c73 = setup_cover(7, 3);
  ResolventResult r = resolvent_class(c73, 0);
  CHECK(r.cls == TorsionClass(3, {Int(0), Int(1), Int(2)}));  // chi + 2 chi^2
  CHECK(r.det_valuation == 3);                                // e(e-1)/2

  Cover c52 = setup_cover(5, 2);
  ResolventResult r2 = resolvent_class(c52, 0);
  CHECK(r2.cls == TorsionClass(2, {Int(0), Int(1)}));  // chi, dimension 1
  CHECK(r2.det_valuation == 1);
}

TEST_CASE("resolvent class against the isotypic-block oracle") {
  for (long q : {5L, 7L, 9L, 13L})
    for (long e = 1; e <= 6; ++e) {
      if ((q - 1) % e != 0) continue;
      Cover cov = setup_cover(q, e);
      for (long j = -e; j <= e; ++j)
        CHECK(resolvent_class(cov, j).cls == oracle_resolvent_class(cov, j));
    }
}

TEST_CASE("truncation independence and periodicity") {
  Cover cov = setup_cover(7, 3);
  for (long j = -3; j <= 3; ++j) {
    ResolventResult base = resolvent_class(cov, j);
    ResolventResult more = resolvent_class_at(cov, j, base.det_valuation + 2);
    CHECK(base.cls == more.cls);
    CHECK_THROWS_AS(resolvent_class_at(cov, j, base.det_valuation - 1), std::invalid_argument);
    // period e in j, exactly in this model
    CHECK(resolvent_class(cov, j + 3).cls == base.cls);
  }
}

TEST_CASE("chase identity") {
  for (long q : {5L, 7L, 13L})
    for (long e = 2; e <= 6; ++e) {
      if ((q - 1) % e != 0) continue;
      Cover cov = setup_cover(q, e);
      for (long j = -e; j <= e; ++j) {
        CoverCheck chk = check_chase_identity(cov, j);
        CHECK(chk.pass);
        CHECK(chk.det_valuation == e * (e - 1) / 2);
      }
    }
  // e = 1: both sides vanish
  CoverCheck t = check_chase_identity(setup_cover(7, 1), 0);
  CHECK(t.pass);
  CHECK(t.lhs == TorsionClass::zero(1));
}

TEST_CASE("different identity") {
  Cover c73 = setup_cover(7, 3);
  CoverCheck chk = check_chase_identity(c73, 0);
  CHECK(chk.lhs == TorsionClass(3, {Int(0), Int(1), Int(2)}));
  CoverCheck d = check_different_identity(c73, 0);
  CHECK(d.pass);
  // the difference is exactly one copy of the regular character at j = 0
  CHECK(d.rhs - d.lhs == TorsionClass::regular(3));

  for (long q : {5L, 7L, 13L})
    for (long e = 2; e <= 6; ++e) {
      if ((q - 1) % e != 0) continue;
      Cover cov = setup_cover(q, e);
      for (long j = -e; j <= 0; ++j) CHECK(check_different_identity(cov, j).pass);
    }
  CHECK_THROWS_AS(check_different_identity(c73, 1), std::invalid_argument);
}
