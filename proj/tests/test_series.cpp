#include "doctest.h"
#include "eulerian/series.hpp"
#include "test_util.hpp"

using namespace eulerian;
using testutil::P;
using testutil::RF;

namespace {

Series geometric(Var v, long order) {
  Series s(v, order);
  for (long j = 0; j <= order; ++j) s.set_coeff(j, RatFun(1));
  return s;
}

}  // namespace

TEST_CASE("series multiplication") {
  const Series one_plus = Series::from_mpoly(Var::X, P("1+x"), 2);
  const Series one_minus = Series::from_mpoly(Var::X, P("1-x"), 2);
  const Series prod = series_mul(one_plus, one_minus);
  CHECK(prod == Series::from_mpoly(Var::X, P("1-x^2"), 2));

  // geometric series times (1-x) collapses to 1
  CHECK(series_mul(geometric(Var::X, 5), Series::from_mpoly(Var::X, P("1-x"), 5)) ==
        Series::constant(Var::X, RatFun(1), 5));

  CHECK_THROWS_AS(series_mul(geometric(Var::X, 2), geometric(Var::T, 2)), MixedMainVariable);
  CHECK(series_mul(geometric(Var::X, 5), geometric(Var::X, 3)).order() == 3);
}

TEST_CASE("series coefficients may not mention the main variable") {
  Series s(Var::X, 2);
  CHECK_THROWS_AS(s.set_coeff(1, RatFun(P("x"))), MainVariableInCoefficient);
  CHECK_NOTHROW(s.set_coeff(1, RatFun(P("t-1"))));
  CHECK_THROWS_AS(Series::from_mpoly(Var::X, P("t"), 1) * RatFun(P("x")),
                  MainVariableInCoefficient);
}

TEST_CASE("series inverse") {
  const Series inv = series_inv(Series::from_mpoly(Var::X, P("1-x"), 3));
  CHECK(inv == geometric(Var::X, 3));

  CHECK_THROWS_AS(series_inv(Series::identity(Var::X, 2)), NonUnitConstantTerm);

  // degenerate ordered Bell generating function to order 2
  Series den = -series_deg_pow(Var::X, MPoly(1), 2);
  den.set_coeff(0, den.coeff(0) + RatFun(2));
  const Series bell = series_inv(den);
  CHECK(bell.coeff(0) == RatFun(1));
  CHECK(bell.coeff(1) == RatFun(1));
  CHECK(bell.coeff(2) == RF("3-λ") * RatFun(Rational(1, 2)));
}

TEST_CASE("series inverse round-trips on random unit series") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 20; ++i) {
    Series a(Var::X, 5);
    a.set_coeff(0, RatFun(Rational(1 + static_cast<long>(i % 3))));
    for (long j = 1; j <= 5; ++j) {
      a.set_coeff(j, RatFun(testutil::random_poly(rng, std::span{testutil::kQL}, 2, 2)));
    }
    CHECK(series_mul(a, series_inv(a)) == Series::constant(Var::X, RatFun(1), 5));
  }
}

TEST_CASE("series log") {
  const Series lg = series_log1p(Var::X, 3);
  CHECK(lg.coeff(0) == RatFun(0));
  CHECK(lg.coeff(1) == RatFun(1));
  CHECK(lg.coeff(2) == RatFun(Rational(-1, 2)));
  CHECK(lg.coeff(3) == RatFun(Rational(1, 3)));

  CHECK(series_log1p(Var::X, 0) == Series(Var::X, 0));

  // coefficient of v^3 in log(1+v)^2/2 is S_1(3,2)/3! = -1/2
  const Series sq = series_pow(series_log1p(Var::X, 3), 2) * RatFun(Rational(1, 2));
  CHECK(sq.coeff(3) == RatFun(Rational(-1, 2)));
}

TEST_CASE("series exp") {
  const Series ex = series_exp(Series::identity(Var::X, 2));
  CHECK(ex.coeff(0) == RatFun(1));
  CHECK(ex.coeff(1) == RatFun(1));
  CHECK(ex.coeff(2) == RatFun(Rational(1, 2)));

  CHECK(series_exp(series_log1p(Var::X, 5)) == Series::from_mpoly(Var::X, P("1+x"), 5));
  CHECK_THROWS_AS(series_exp(Series::constant(Var::X, RatFun(1), 2)), NonzeroConstantTerm);
}

TEST_CASE("exp of scaled log matches the degenerate power series") {
  // exp(((t-1)/λ)·log(1+λx)) = Σ (t-1)_{m,λ} x^m/m!
  const long order = 4;
  const Series scaled_log =
      series_scale_var(series_log1p(Var::X, order), RatFun(P("λ")));
  const Series arg = scaled_log * RF("(t-1)/(λ)");
  const Series direct = series_deg_pow(Var::X, P("t-1"), order);
  CHECK(series_exp(arg) == direct);

  CHECK(direct.coeff(0) == RatFun(1));
  CHECK(direct.coeff(1) == RF("t-1"));
  CHECK(direct.coeff(2) == RatFun(P("t-1") * P("t-1-λ") * Rational(1, 2)));
}

TEST_CASE("degenerate power series specializations") {
  const Series s = series_deg_pow(Var::X, MPoly(1), 2);
  CHECK(s.coeff(2) == RF("1-λ") * RatFun(Rational(1, 2)));

  // λ = 0 reduces coefficients to α^m/m!
  const Series g = series_deg_pow(Var::X, P("t-1"), 3);
  for (long m = 0; m <= 3; ++m) {
    const MPoly c = g.coeff(m).as_poly().subst(Var::Lambda, Rational(0));
    CHECK(RatFun(c) == RatFun(P("t-1").pow(static_cast<unsigned long>(m)) *
                              Rational(factorial(static_cast<unsigned long>(m))).inverse()));
  }
  CHECK_THROWS_AS(series_deg_pow(Var::X, P("x"), 2), MainVariableInCoefficient);
}

TEST_CASE("generating function relation for the degenerate rows") {
  // GF·((1+λx)^{(t-1)/λ} − t) = 1−t, so GF·(1+λx)^{(t-1)/λ} = (1−t) + t·GF
  const long order = 3;
  Series den = series_deg_pow(Var::X, P("t-1"), order);
  den.set_coeff(0, den.coeff(0) - RatFun(P("t")));
  const Series gf = series_inv(den) * RF("1-t");
  const Series lhs = series_mul(series_deg_pow(Var::X, P("t-1"), order), gf);
  const Series rhs = Series::constant(Var::X, RF("1-t"), order) + gf * RatFun(P("t"));
  CHECK(lhs == rhs);
}

TEST_CASE("series truncation and identity") {
  const Series v = Series::identity(Var::T, 4);
  CHECK(v.coeff(1) == RatFun(1));
  CHECK(v.truncated(1).order() == 1);
  CHECK(v.truncated(6).coeff(6) == RatFun(0));
  CHECK_THROWS_AS(Series(Var::T, -1), NegativeIndex);
}
