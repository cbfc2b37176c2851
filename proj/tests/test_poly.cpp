#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "helpers.hpp"

using namespace th;

TEST_CASE("arithmetic basics and canonical form") {
  auto A = QA({"x", "y"});
  CHECK(P(A, "(x+y) + (x-y)") == P(A, "2*x"));
  CHECK(P(A, "(x+1)*(x-1)") == P(A, "x^2-1"));
  CHECK((P(A, "x+y") + P(A, "y+x")) == (P(A, "y+x") + P(A, "x+y")));
  CHECK(P(A, "0").is_zero());
  CHECK(P(A, "x") - P(A, "x") == Poly::zero(A));
  CHECK(P(A, "1/2*x + 1/2*x") == P(A, "x"));
}

TEST_CASE("characteristic two") {
  auto A = QA({"x"}, FieldSpec::Fp(2));
  CHECK(P(A, "(x+1)^2") == P(A, "x^2+1"));
  CHECK(partial_derivative(P(A, "x^2"), 0).is_zero());
}

TEST_CASE("partial derivatives and jacobian") {
  auto A = QA({"x", "y"});
  Poly f = P(A, "y^2-x^3");
  CHECK(partial_derivative(f, "x") == P(A, "-3*x^2"));
  CHECK(partial_derivative(f, "y") == P(A, "2*y"));
  auto J = jacobian_matrix({f});
  REQUIRE(J.size() == 1);
  CHECK(J[0][0] == P(A, "-3*x^2"));
  CHECK(J[0][1] == P(A, "2*y"));

  auto J2 = jacobian_matrix({P(A, "x*y")});
  CHECK(J2[0][0] == P(A, "y"));
  CHECK(J2[0][1] == P(A, "x"));

  auto A3 = QA({"x", "y", "z"});
  auto J3 = jacobian_matrix({P(A3, "x^2-y"), P(A3, "x^3-z")});
  CHECK(J3[0][0] == P(A3, "2*x"));
  CHECK(J3[0][1] == P(A3, "-1"));
  CHECK(J3[0][2] == P(A3, "0"));
  CHECK(J3[1][0] == P(A3, "3*x^2"));
  CHECK(J3[1][1] == P(A3, "0"));
  CHECK(J3[1][2] == P(A3, "-1"));
}

static Poly random_poly(const RingPtr& A, std::mt19937& rng) {
  std::uniform_int_distribution<int> nterms(0, 4), expd(0, 3), coef(-5, 5);
  Poly out = Poly::zero(A);
  int k = nterms(rng);
  for (int t = 0; t < k; ++t) {
    Exp e(A->nvars());
    for (auto& x : e) x = (std::uint32_t)expd(rng);
    int c = coef(rng);
    if (c) out = out + Poly::monomial(A, e, A->field.from_long(c));
  }
  return out;
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937 rng(20240817);
  std::vector<RingPtr> rings{QA({"x", "y"}), QA({"x", "y", "z"}),
                             QA({"x", "y"}, FieldSpec::Fp(101))};
  int trials = 0;
  for (int i = 0; i < 350; ++i)
    for (const auto& A : rings) {
      Poly a = random_poly(A, rng), b = random_poly(A, rng), c = random_poly(A, rng);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK(a + b == b + a);
      // Leibniz rule
      CHECK(partial_derivative(a * b, 0) ==
            a * partial_derivative(b, 0) + b * partial_derivative(a, 0));
      ++trials;
    }
  CHECK(trials >= 1000);
}

TEST_CASE("monomial orders") {
  auto g = QA({"x", "y", "z"});  // grevlex default
  CHECK(g->cmp({1, 0, 0}, {0, 1, 0}) > 0);   // x > y
  CHECK(g->cmp({1, 1, 0}, {2, 0, 0}) < 0);   // xy < x^2
  CHECK(g->cmp({0, 2, 0}, {1, 0, 1}) > 0);   // y^2 > xz under grevlex
  auto l = QA({"x", "y", "z"}, FieldSpec::Q(), MonomialOrder{MonomialOrder::Lex, {}});
  CHECK(l->cmp({1, 0, 0}, {0, 5, 5}) > 0);   // lex: x beats any power of y,z
}

TEST_CASE("parse round trip") {
  auto A = QA({"x", "y"});
  for (const char* s : {"x^2 - y", "-3*x^2 + 2*y - 1", "1/2*x*y", "0", "x*y + 7"}) {
    Poly f = P(A, s);
    CHECK(parse_poly(A, f.to_string()) == f);
  }
  CHECK_THROWS_AS(parse_poly(A, "x +"), parse_error);
  CHECK_THROWS_AS(parse_poly(A, "w"), parse_error);
}

TEST_CASE("exponent overflow is detected") {
  auto A = QA({"x"});
  Poly big = Poly::variable(A, 0, 1 << 19);
  CHECK_THROWS_AS((void)(big * big * big), cutoff_error);
}
