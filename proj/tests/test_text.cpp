#include "doctest.h"
#include "eulerian/text.hpp"
#include "test_util.hpp"

using namespace eulerian;
using testutil::P;
using testutil::RF;

TEST_CASE("polynomial rendering") {
  CHECK(to_string(MPoly()) == "0");
  CHECK(to_string(MPoly(7)) == "7");
  CHECK(to_string(P("1+4t+t^2")) == "1+4t+t^2");
  CHECK(to_string(MPoly(1) - MPoly::variable(Var::Lambda)) == "1-\xce\xbb");
  CHECK(to_string(MPoly(3) - MPoly::variable(Var::Lambda)) == "3-\xce\xbb");
  CHECK(to_string(-MPoly::variable(Var::X)) == "-x");
  CHECK(to_string(MPoly::variable(Var::X) * Rational(1, 2)) == "1/2*x");
  CHECK(to_string(P("x^2t") * P("λ")) == "x^2t\xce\xbb");
  // ascending graded-lex: constants first, ties broken x-first
  CHECK(to_string(P("t^2+1+tλ")) == "1+t\xce\xbb+t^2");
}

TEST_CASE("rational function rendering") {
  CHECK(to_string(RatFun(P("t+1"))) == "1+t");
  CHECK(to_string(RatFun(MPoly(1), P("u-1"))) == "(1)/(-1+u)");
  CHECK(to_string(RatFun(P("u+1"), P("u-1") * P("u-1"))) == "(1+u)/(1-2u+u^2)");
}

TEST_CASE("parsing accepts aliases and spacing") {
  CHECK(parse_mpoly("1 - lambda") == P("1-λ"));
  CHECK(parse_mpoly("2*t^2") == P("2t^2"));
  CHECK(parse_mpoly("-x + 3/2*t") == MPoly(Rational(3, 2)) * MPoly::variable(Var::T) -
                                         MPoly::variable(Var::X));
  CHECK(parse_rational("-7/21") == Rational(-1, 3));
  CHECK_THROWS_AS(parse_mpoly("1+"), ParseError);
  CHECK_THROWS_AS(parse_mpoly("y"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/0"), ZeroDenominator);
  CHECK_THROWS_AS(parse_ratfun("(1+t)/(0)"), ZeroDenominator);
}

TEST_CASE("render/parse round-trips on random values") {
  std::mt19937_64 rng(4242);
  for (int i = 0; i < 60; ++i) {
    const MPoly p = testutil::random_poly(rng, testutil::kAll, 5, 3);
    CHECK(parse_mpoly(to_string(p)) == p);
    const MPoly d = testutil::random_nonzero_poly(rng, testutil::kQL, 3, 2);
    const RatFun f(p, d);
    CHECK(parse_ratfun(to_string(f)) == f);
  }
}
