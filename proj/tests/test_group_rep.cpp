#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>
#include <sstream>

#include "sympow/catalog.hpp"
#include "sympow/char_table.hpp"
#include "sympow/table_io.hpp"

using namespace sympow;

TEST_CASE("abelian tables") {
  TablePtr c2 = abelian_char_table({2});
  CHECK(c2->order() == 2);
  CHECK(c2->exponent() == 2);
  CHECK(c2->value(0, 0) == CycNumber::one(2));
  CHECK(c2->value(1, 1) == CycNumber::from_rat(2, Rat(-1)));

  TablePtr c22 = abelian_char_table({2, 2});
  CHECK(c22->exponent() == 2);
  for (long i = 0; i < 4; ++i)
    for (long c = 0; c < 4; ++c) CHECK(c22->value(i, c).is_rational_integer());

  CHECK(abelian_char_table({2, 4})->exponent() == 4);

  TablePtr triv = abelian_char_table({});
  CHECK(triv->order() == 1);
  CHECK(triv->num_classes() == 1);
}

TEST_CASE("catalog tables all validate and satisfy column orthogonality") {
  for (const auto& name : catalog_names()) {
    TablePtr t = catalog_table(name);
    const long e = t->exponent();
    // column orthogonality: sum_i chi_i(c) conj(chi_i(c')) = delta |centralizer|
    for (long c = 0; c < t->num_classes(); ++c)
      for (long c2 = 0; c2 < t->num_classes(); ++c2) {
        CycNumber acc = CycNumber::zero(e);
        for (long i = 0; i < t->num_classes(); ++i)
          acc += t->value(i, c) * t->value(i, c2).conj();
        if (c == c2)
          CHECK(acc ==
                CycNumber::from_rat(e, Rat(t->order() / t->classes()[static_cast<size_t>(c)].size)));
        else
          CHECK(acc.is_zero());
      }
    // power maps depend only on k mod the representative order
    if (t->has_cayley()) {
      for (long c = 0; c < t->num_classes(); ++c) {
        long ord = t->classes()[static_cast<size_t>(c)].rep_order;
        for (long k = 0; k < t->exponent(); ++k)
          CHECK(t->power_class(k, c) == t->power_class(k % ord, c));
      }
    }
  }
}

TEST_CASE("validation rejects corrupted tables") {
  TablePtr s3 = catalog_table("s3");
  nlohmann::json good = table_to_json(*s3);
  CHECK(table_from_json(good).ok());

  // corrupt the standard character at the 3-cycles: -1 -> +1
  nlohmann::json bad = good;
  bad["irreducibles"][2][2][0] = 1;
  ValidationResult r = table_from_json(bad);
  CHECK(!r.ok());
  bool saw_orth = false;
  for (const auto& e : r.errors) saw_orth |= e.find("orthogonality") != std::string::npos;
  CHECK(saw_orth);

  // break pi_1
  nlohmann::json bad2 = good;
  bad2["power_maps"][1] = {0, 0, 0};
  ValidationResult r2 = table_from_json(bad2);
  CHECK(!r2.ok());
  bool saw_pm = false;
  for (const auto& e : r2.errors) saw_pm |= e.find("power map") != std::string::npos;
  CHECK(saw_pm);

  // wrong class size sum
  nlohmann::json bad3 = good;
  bad3["classes"][1]["size"] = 4;
  CHECK(!table_from_json(bad3).ok());

  // floats are rejected even when integral
  nlohmann::json bad4 = good;
  bad4["irreducibles"][0][0][0] = 1.0;
  ValidationResult r4 = table_from_json(bad4);
  CHECK(!r4.ok());
  bool saw_exact = false;
  for (const auto& e : r4.errors) saw_exact |= e.find("exact integer") != std::string::npos;
  CHECK(saw_exact);
}

TEST_CASE("table json round trip") {
  for (const auto& name : {"s3", "a4", "c2x4", "q8"}) {
    TablePtr t = catalog_table(name);
    nlohmann::json j = table_to_json(*t);
    ValidationResult r = table_from_json(j);
    REQUIRE(r.ok());
    CHECK(table_to_json(*r.table) == j);
  }
}

TEST_CASE("pairing") {
  TablePtr s3 = catalog_table("s3");
  for (long a = 0; a < 3; ++a)
    for (long b = 0; b < 3; ++b) {
      CycNumber p = pairing(irreducible_class_function(s3, a), irreducible_class_function(s3, b));
      CHECK(p == (a == b ? CycNumber::one(6) : CycNumber::zero(6)));
    }
  for (const auto& name : catalog_names()) {
    TablePtr t = catalog_table(name);
    CHECK(pairing(regular_character(t).to_class_function(),
                  trivial_character(t).to_class_function()) == CycNumber::one(t->exponent()));
  }
}

TEST_CASE("decompose") {
  TablePtr s3 = catalog_table("s3");
  DecomposeResult r = decompose(regular_character(s3).to_class_function());
  REQUIRE(r.ok());
  CHECK(r.character->coords() == std::vector<Int>{Int(1), Int(1), Int(2)});

  DecomposeResult t = decompose(trivial_character(s3).to_class_function());
  REQUIRE(t.ok());
  CHECK(t.character->coords() == std::vector<Int>{Int(1), Int(0), Int(0)});

  // non-integral input is reported with coordinate witnesses
  ClassFunction half(s3, {CycNumber::from_rat(6, Rat(1, 2)), CycNumber::zero(6),
                          CycNumber::zero(6)});
  DecomposeResult bad = decompose(half);
  CHECK(!bad.ok());
  CHECK(!bad.non_integral.empty());
}

TEST_CASE("decompose inverts coordinates-to-class-function") {
  std::mt19937_64 eng(3);
  for (const auto& name : {"s3", "d4", "a4", "c12"}) {
    TablePtr t = catalog_table(name);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<Int> c(static_cast<size_t>(t->num_classes()));
      for (auto& v : c) v = static_cast<long>(eng() % 9) - 4;
      VirtualCharacter x(t, c);
      DecomposeResult r = decompose(x.to_class_function());
      REQUIRE(r.ok());
      CHECK(*r.character == x);
    }
  }
}

TEST_CASE("cyc_arith dispatcher") {
  CycNumber a = CycNumber::root_power(4, 1);
  CHECK(cyc_arith(CycOp::mul, a, &a) == CycNumber::from_rat(4, Rat(-1)));
  CHECK(cyc_arith(CycOp::add, a, &a) == a.scaled(Rat(2)));
  CHECK(cyc_arith(CycOp::conj, a, nullptr) == CycNumber::root_power(4, 3));
  CHECK_THROWS_AS(cyc_arith(CycOp::mul, a, nullptr), std::invalid_argument);
}

TEST_CASE("induction and restriction") {
  TablePtr s3 = catalog_table("s3");
  const long e = s3->exponent();

  SubgroupEmbedding one = trivial_subgroup(s3);
  ClassFunction ind1 = induce(one, {CycNumber::one(e)});
  CHECK(decompose(ind1).character.value() == regular_character(s3));

  // A_3 = {id, both 3-cycles}: elements 0, 3, 4 in the catalog ordering
  SubgroupEmbedding a3 = subgroup_embedding(s3, {0, 3, 4});
  CHECK(a3.order() == 3);
  CHECK(a3.num_classes() == 3);
  // omega on the class of (012), omega^2 on its square
  std::vector<CycNumber> omega(3, CycNumber::zero(e));
  for (long sc = 0; sc < 3; ++sc) {
    long el = a3.class_rep[static_cast<size_t>(sc)];
    if (el == 0)
      omega[static_cast<size_t>(sc)] = CycNumber::one(e);
    else if (el == 3)
      omega[static_cast<size_t>(sc)] = CycNumber::root_power(e, 2);  // zeta_3
    else
      omega[static_cast<size_t>(sc)] = CycNumber::root_power(e, 4);  // zeta_3^2
  }
  ClassFunction ind_omega = induce(a3, omega);
  CHECK(decompose(ind_omega).character.value() == irreducible(s3, 2));  // the 2-dim character

  // restriction of the standard character: (2, -1, -1) on A_3 classes
  std::vector<CycNumber> res = restrict_values(a3, irreducible_class_function(s3, 2));
  CHECK(res[0] == CycNumber::from_rat(e, Rat(2)));
  CHECK(res[1] + res[2] == CycNumber::from_rat(e, Rat(-2)));

  CHECK_THROWS_AS(subgroup_embedding(s3, {0, 3}), std::invalid_argument);   // not closed
  CHECK_THROWS_AS(subgroup_embedding(s3, {3, 4}), std::invalid_argument);   // no identity
}

TEST_CASE("Frobenius reciprocity on catalog subgroup embeddings") {
  struct Pair {
    const char* ambient;
    std::vector<long> elements;
  };
  std::vector<Pair> pairs;
  pairs.push_back({"s3", {0, 3, 4}});  // A_3 in S_3
  {
    // <r> = {e, r, r^2, r^3} in D_4 (indices 0..3), and the center {e, r^2}
    pairs.push_back({"d4", {0, 1, 2, 3}});
    pairs.push_back({"d4", {0, 2}});
    // {1, -1, i, -i} in Q_8
    pairs.push_back({"q8", {0, 1, 4, 5}});
    // V_4 in A_4: identity plus the three double transpositions
  }
  TablePtr a4t = catalog_table("a4");
  {
    std::vector<long> v4;
    const CayleyTable& g = a4t->cayley();
    for (long x = 0; x < g.size(); ++x)
      if (x == g.identity() || g.element_order(x) == 2) v4.push_back(x);
    pairs.push_back({"a4", v4});
  }

  std::mt19937_64 eng(99);
  for (const auto& pr : pairs) {
    TablePtr t = catalog_table(pr.ambient);
    SubgroupEmbedding h = subgroup_embedding(t, pr.elements);
    const long e = t->exponent();
    for (int trial = 0; trial < 6; ++trial) {
      // random subgroup-class function with small cyclotomic-integer values
      std::vector<CycNumber> f;
      for (long sc = 0; sc < h.num_classes(); ++sc) {
        std::vector<Rat> coeffs;
        for (long i = 0; i < e; ++i) coeffs.emplace_back(static_cast<long>(eng() % 5) - 2);
        f.emplace_back(e, coeffs);
      }
      for (long i = 0; i < t->num_classes(); ++i) {
        ClassFunction chi = irreducible_class_function(t, i);
        CycNumber lhs = pairing(induce(h, f), chi);
        CycNumber rhs = subgroup_pairing(h, f, restrict_values(h, chi));
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("load_table: catalog names and files") {
  CHECK(load_table("s3")->name() == "s3");
  CHECK_THROWS_AS(load_table("/nonexistent/file.json"), TableLoadError);
  // write a valid file and read it back
  TablePtr t = catalog_table("d4");
  std::string path = "d4_test_table.json";
  save_table(*t, path);
  TablePtr back = load_table(path);
  CHECK(back->order() == 8);
  std::remove(path.c_str());
}
