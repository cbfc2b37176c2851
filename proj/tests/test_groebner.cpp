#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "helpers.hpp"

using namespace th;

TEST_CASE("reduced groebner bases") {
  auto A = QA({"x", "y"});
  SUBCASE("monomial ideals are their own basis") {
    Ideal i(A, parse_poly_list(A, "x^2; x*y"));
    auto& b = i.gb().basis;
    REQUIRE(b.size() == 2);
    CHECK(((b[0][0] == P(A, "x^2") && b[1][0] == P(A, "x*y")) ||
           (b[1][0] == P(A, "x^2") && b[0][0] == P(A, "x*y"))));
  }
  SUBCASE("unit ideal") {
    Ideal i(A, {P(A, "3")});
    REQUIRE(i.gb().basis.size() == 1);
    CHECK(i.gb().basis[0][0] == P(A, "1"));
    CHECK(i.is_unit_ideal());
  }
  SUBCASE("twisted cubic under lex") {
    auto L = QA({"x", "y", "z"}, FieldSpec::Q(), MonomialOrder{MonomialOrder::Lex, {}});
    Ideal i(L, parse_poly_list(L, "x^2-y; x^3-z"));
    std::vector<std::string> got;
    for (const auto& b : i.gb().basis) got.push_back(b[0].to_string());
    std::sort(got.begin(), got.end());
    std::vector<std::string> want = {"x^2 - y", "x*y - z", "x*z - y^2", "y^3 - z^2"};
    std::sort(want.begin(), want.end());
    CHECK(got == want);
  }
}

TEST_CASE("normal forms") {
  auto A = QA({"x", "y"});
  Ideal i(A, {P(A, "x^2")});
  CHECK(i.nf(P(A, "x^3")).is_zero());
  CHECK(i.nf(P(A, "x+y")) == P(A, "x+y"));
  Ideal j(A, {P(A, "x^2-y")});
  CHECK(j.nf(P(A, "x^2*y + y")) == P(A, "y^2 + y"));
  // idempotence
  Poly f = P(A, "x^5 + x^2*y - 3");
  CHECK(j.nf(j.nf(f)) == j.nf(f));
}

TEST_CASE("determinism under generator permutation") {
  auto A = QA({"x", "y", "z"});
  auto gens = parse_poly_list(A, "x^2+y^2+z^2-1; x*y-z; y^2-x*z");
  Ideal i1(A, gens);
  std::reverse(gens.begin(), gens.end());
  Ideal i2(A, gens);
  REQUIRE(i1.gb().basis.size() == i2.gb().basis.size());
  for (std::size_t k = 0; k < i1.gb().basis.size(); ++k)
    CHECK(i1.gb().basis[k][0] == i2.gb().basis[k][0]);
}

TEST_CASE("radical membership") {
  auto A = QA({"x", "y"});
  CHECK(radical_membership(P(A, "x"), Ideal(A, {P(A, "x^2")})));
  CHECK(!radical_membership(P(A, "y"), Ideal(A, {P(A, "x^2")})));
  CHECK(radical_membership(P(A, "x+y"), Ideal(A, parse_poly_list(A, "x^2; y^2"))));
}

TEST_CASE("ideal quotients") {
  auto A = QA({"x", "y"});
  auto eq = [&](const Ideal& a, const char* txt) {
    return ideals_equal(a, Ideal(A, parse_poly_list(A, txt)));
  };
  CHECK(eq(ideal_quotient(Ideal(A, {P(A, "x^2")}), P(A, "x")), "x"));
  CHECK(eq(ideal_quotient(Ideal(A, {P(A, "x*y")}), P(A, "x")), "y"));
  CHECK(eq(ideal_quotient(Ideal(A, parse_poly_list(A, "x^2*y; x*y^2")), P(A, "x*y")),
           "x; y"));
  // f * (I : f) lies in I
  Ideal i(A, parse_poly_list(A, "x^2*y; x*y^2"));
  Ideal q = ideal_quotient(i, P(A, "x*y"));
  for (const auto& g : q.gens()) CHECK(i.contains(g * P(A, "x*y")));
}

TEST_CASE("saturation index") {
  auto A = QA({"x"});
  CHECK(saturation_index(P(A, "x"), Ideal(A, {P(A, "x^2")})) == 2);
  CHECK(saturation_index(P(A, "x"), Ideal(A, {P(A, "x")})) == 1);
  CHECK(saturation_index(P(A, "x"), Ideal(A, {P(A, "1")})) == 0);
  CHECK_THROWS_AS(saturation_index(P(A, "x"), Ideal(A, {})), math_error);
}

TEST_CASE("krull dimension") {
  auto A = QA({"x", "y"});
  CHECK(krull_dimension(Ideal(A, {P(A, "x*y")})) == 1);
  CHECK(krull_dimension(Ideal(A, {})) == 2);
  CHECK(krull_dimension(Ideal(A, parse_poly_list(A, "x^2; y"))) == 0);
  CHECK(krull_dimension(Ideal(A, {P(A, "1")})) == -1);
}

TEST_CASE("syzygies of column spans") {
  auto A = QA({"x", "y"});
  SUBCASE("koszul relation") {
    auto syz = syzygy_basis(A, 1, {Vec{P(A, "x")}, Vec{P(A, "y")}});
    bool found = false;
    for (const auto& s : syz) {
      REQUIRE(s.size() == 2);
      // must be a multiple of (y, -x)
      CHECK((s[0] * P(A, "x") + s[1] * P(A, "y")).is_zero());
      if (s[0] == P(A, "y") && s[1] == P(A, "-x")) found = true;
      if (s[0] == P(A, "-y") && s[1] == P(A, "x")) found = true;
    }
    CHECK(found);
  }
  SUBCASE("nonzerodivisor has no syzygy") {
    CHECK(syzygy_basis(A, 1, {Vec{P(A, "x")}}).empty());
  }
  SUBCASE("monomial pair") {
    auto syz = syzygy_basis(A, 1, {Vec{P(A, "x^2")}, Vec{P(A, "x*y")}});
    REQUIRE(!syz.empty());
    for (const auto& s : syz)
      CHECK((s[0] * P(A, "x^2") + s[1] * P(A, "x*y")).is_zero());
  }
}

TEST_CASE("random syzygy products vanish") {
  std::mt19937 rng(7);
  auto A = QA({"x", "y"});
  std::uniform_int_distribution<int> coef(-3, 3), expd(0, 2);
  for (int t = 0; t < 25; ++t) {
    std::vector<Vec> cols;
    for (int c = 0; c < 3; ++c) {
      Vec v;
      for (int r = 0; r < 2; ++r) {
        Exp e{(std::uint32_t)expd(rng), (std::uint32_t)expd(rng)};
        v.push_back(Poly::monomial(A, e, A->field.from_long(coef(rng))));
      }
      cols.push_back(v);
    }
    for (const auto& s : syzygy_basis(A, 2, cols)) {
      Vec acc = vec_zero(A, 2);
      for (std::size_t c = 0; c < cols.size(); ++c)
        acc = vec_add(acc, vec_times_poly(cols[c], s[c]));
      CHECK(vec_is_zero(acc));
    }
  }
}

TEST_CASE("module normal form idempotent") {
  auto A = QA({"x", "y"});
  auto gb = module_groebner(A, 2, {Vec{P(A, "x"), P(A, "y")}, Vec{P(A, "0"), P(A, "x^2")}});
  Vec v{P(A, "x^2 + y"), P(A, "x*y - 1")};
  CHECK(vec_eq(module_nf(module_nf(v, gb), gb), module_nf(v, gb)));
}
