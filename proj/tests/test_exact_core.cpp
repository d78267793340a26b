#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sympow/cyclotomic.hpp"
#include "sympow/laurent.hpp"
#include "sympow/poly.hpp"
#include "sympow/series.hpp"

using namespace sympow;

TEST_CASE("cyclotomic polynomials, small cases") {
  CHECK(cyclotomic_polynomial(1) == IntPoly({Int(-1), Int(1)}));
  CHECK(cyclotomic_polynomial(2) == IntPoly({Int(1), Int(1)}));
  // Phi_4 = x^2 + 1 by dividing x^4 - 1 by Phi_1 Phi_2
  CHECK(cyclotomic_polynomial(4) == IntPoly({Int(1), Int(0), Int(1)}));
  // Phi_6 = x^2 - x + 1
  CHECK(cyclotomic_polynomial(6) == IntPoly({Int(1), Int(-1), Int(1)}));
  CHECK(cyclotomic_polynomial(12).degree() == 4);
}

TEST_CASE("product of Phi_d over divisors is x^e - 1") {
  for (long e = 1; e <= 60; ++e) {
    IntPoly prod({Int(1)});
    for (long d = 1; d <= e; ++d)
      if (e % d == 0) prod = prod * cyclotomic_polynomial(d);
    std::vector<Int> want(static_cast<size_t>(e) + 1, Int(0));
    want[0] = -1;
    want.back() = 1;
    CHECK(prod == IntPoly(want));
  }
}

TEST_CASE("cyclotomic arithmetic reduces to canonical form") {
  // zeta_4^2 = -1
  CycNumber i4 = CycNumber::root_power(4, 1);
  CHECK(i4 * i4 == CycNumber::from_rat(4, Rat(-1)));
  // (1 + zeta_3) + (1 + zeta_3^2) = 1 since zeta_3 + zeta_3^2 = -1
  CycNumber a = CycNumber::one(3) + CycNumber::root_power(3, 1);
  CycNumber b = CycNumber::one(3) + CycNumber::root_power(3, 2);
  CHECK(a + b == CycNumber::one(3));
  // conj(zeta_5) = zeta_5^4
  CHECK(CycNumber::root_power(5, 1).conj() == CycNumber::root_power(5, 4));
  CHECK_THROWS_AS(CycNumber::one(3) + CycNumber::one(4), std::invalid_argument);
}

TEST_CASE("galois action") {
  CycNumber x = CycNumber::root_power(5, 1) + CycNumber::root_power(5, 4);
  CHECK(x.galois(1) == x);
  CHECK(x.galois(2) == CycNumber::root_power(5, 2) + CycNumber::root_power(5, 3));
  // group law
  CHECK(x.galois(2).galois(3) == x.galois(6 % 5));
  CHECK_THROWS_AS(x.galois(5), std::invalid_argument);

  std::mt19937_64 eng(7);
  for (long e : {3L, 4L, 5L, 8L, 12L}) {
    auto rand_cyc = [&]() {
      std::vector<Rat> c;
      for (long i = 0; i < e; ++i) c.emplace_back(static_cast<long>(eng() % 9) - 4);
      return CycNumber(e, c);
    };
    for (int rep = 0; rep < 10; ++rep) {
      CycNumber u = rand_cyc(), v = rand_cyc();
      for (long t = 1; t < e; ++t) {
        if (std::gcd(t, e) != 1) continue;
        // ring homomorphism
        CHECK((u + v).galois(t) == u.galois(t) + v.galois(t));
        CHECK((u * v).galois(t) == u.galois(t) * v.galois(t));
      }
      CHECK(u.conj().conj() == u);
      if (e > 2) CHECK(u.conj() == u.galois(e - 1));
    }
  }
}

TEST_CASE("series inversion") {
  // 1 - u -> geometric series
  TruncSeries f(6, {Rat(1), Rat(-1)});
  TruncSeries g = series_invert(f);
  for (long i = 0; i < 6; ++i) CHECK(g.coeff(i) == Rat(1));

  // theta^3 with d = 1 + u: 3 + 3u + u^2, inverse 1/3 - u/3 + 2u^2/9
  TruncSeries theta(3, {Rat(3), Rat(3), Rat(1)});
  TruncSeries inv = series_invert(theta);
  CHECK(inv.coeff(0) == Rat(1, 3));
  CHECK(inv.coeff(1) == Rat(-1, 3));
  CHECK(inv.coeff(2) == Rat(2, 9));
  CHECK((theta * inv).is_one());

  CHECK_THROWS_AS(series_invert(TruncSeries(4, {Rat(0), Rat(1)})), std::domain_error);

  std::mt19937_64 eng(11);
  for (long n = 1; n <= 16; ++n) {
    std::vector<Rat> c;
    for (long i = 0; i < n; ++i) c.emplace_back(static_cast<long>(eng() % 11) - 5);
    if (c[0] == 0) c[0] = 2;
    TruncSeries s(n, c);
    CHECK((s * series_invert(s)).is_one());
  }
}

TEST_CASE("laurent polynomials") {
  LaurentPoly d = LaurentPoly::monomial(1);
  LaurentPoly dinv = LaurentPoly::monomial(-1);
  CHECK(d * dinv == LaurentPoly::monomial(0));
  LaurentPoly theta3 = LaurentPoly::geometric_sum(3);
  CHECK(theta3.coeff(0) == 1);
  CHECK(theta3.coeff(2) == 1);
  CHECK(theta3.coeff(3) == 0);
  CHECK((theta3 - theta3).is_zero());
  // (1 + d + d^2)(1 + d^3) = 1 + ... + d^5
  CHECK(theta3 * LaurentPoly::power_sum(0, 1, 3) == LaurentPoly::geometric_sum(6));
}
