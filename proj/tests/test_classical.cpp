#include "doctest.h"
#include "eulerian/classical.hpp"
#include "eulerian/series.hpp"
#include "test_util.hpp"

using namespace eulerian;
using namespace eulerian::classical;
using testutil::P;
using testutil::RF;

TEST_CASE("eulerian closed form") {
  CHECK(eulerian_number(3, 1) == 4);
  CHECK(eulerian_number(1, 0) == 1);
  CHECK(eulerian_number(4, 2) == 11);
  CHECK(eulerian_number(2, 2) == 0);
  CHECK(eulerian_number(0, 0) == 1);
  CHECK(eulerian_number(0, 3) == 0);
  CHECK_THROWS_AS(eulerian_number(-1, 0), NegativeIndex);
  CHECK_THROWS_AS(eulerian_number(2, -1), NegativeIndex);
}

TEST_CASE("eulerian brute force oracle") {
  CHECK(eulerian_bruteforce(3, 1) == 4);
  CHECK(eulerian_bruteforce(3, 0) == 1);
  CHECK(eulerian_bruteforce(0, 0) == 1);
  CHECK_THROWS_AS(eulerian_bruteforce(10, 0), OracleBoundExceeded);

  for (long n = 0; n <= 7; ++n) {
    for (long m = 0; m <= n; ++m) {
      CHECK(eulerian_number(n, m) == eulerian_bruteforce(n, m));
    }
  }
}

TEST_CASE("eulerian triangle invariants") {
  EulerianTriangle tri;
  for (long n = 1; n <= 12; ++n) {
    BigInt sum(0);
    const auto& row = tri.row(n);
    for (const auto& v : row) sum += v;
    CHECK(sum == factorial(static_cast<unsigned long>(n)));
    for (std::size_t m = 0; m < row.size(); ++m) {
      CHECK(row[m] == row[row.size() - 1 - m]);  // palindromic
      CHECK(row[m] == eulerian_number(n, static_cast<long>(m)));
    }
    CHECK(tri.at(n, 0) == 1);
  }
  CHECK(tri.at(5, 99) == 0);
}

TEST_CASE("eulerian polynomials") {
  EulerianTriangle tri;
  CHECK(tri.poly(0) == MPoly(1));
  CHECK(tri.poly(2) == P("1+t"));
  CHECK(tri.poly(3) == P("1+4t+t^2"));
  for (long n = 0; n <= 12; ++n) {
    CHECK(tri.poly(n).subst(Var::T, Rational(1)) ==
          MPoly(Rational(factorial(static_cast<unsigned long>(n)))));
  }
}

TEST_CASE("umbral recurrence for the rows") {
  EulerianTriangle tri;
  const MPoly t = MPoly::variable(Var::T);
  for (long n = 0; n <= 10; ++n) {
    MPoly lhs;
    for (long k = 0; k <= n; ++k) {
      lhs += tri.poly(k) * (t - MPoly(1)).pow(static_cast<unsigned long>(n - k)) *
             Rational(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k)));
    }
    lhs -= t * tri.poly(n);
    CHECK(lhs == (n == 0 ? MPoly(1) - t : MPoly()));
  }
}

TEST_CASE("division recursion rebuilds the rows") {
  EulerianTriangle tri;
  const MPoly t_minus_1 = P("t-1");
  std::vector<MPoly> fam{MPoly(1)};
  for (long n = 1; n <= 10; ++n) {
    MPoly s;
    for (long l = 0; l < n; ++l) {
      s += fam[static_cast<std::size_t>(l)] * t_minus_1.pow(static_cast<unsigned long>(n - l)) *
           Rational(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(l)));
    }
    fam.push_back(poly_div_exact(s, t_minus_1));
    CHECK(fam.back() == tri.poly(n));
  }
}

TEST_CASE("stirling triangles") {
  StirlingTriangles st;
  CHECK(st.s1(2, 1) == -1);
  CHECK(st.s1(3, 2) == -3);
  CHECK(st.s2(3, 2) == 3);
  CHECK(st.s2(4, 2) == 7);
  for (long n = 0; n <= 10; ++n) {
    CHECK(st.s1(n, n) == 1);
    CHECK(st.s2(n, n) == 1);
    if (n >= 1) {
      CHECK(st.s1(n, 0) == 0);
      CHECK(st.s2(n, 0) == 0);
    }
  }
  CHECK_THROWS_AS(st.s1(3, 4), IndexOutOfTriangle);
  CHECK_THROWS_AS(st.s2(-1, 0), IndexOutOfTriangle);

  // inverse triangles
  for (long n = 0; n <= 10; ++n) {
    for (long m = 0; m <= 10; ++m) {
      BigInt acc(0);
      for (long k = m; k <= n; ++k) acc += st.s1(n, k) * st.s2(k, m);
      CHECK(acc == (n == m ? 1 : 0));
    }
  }
}

TEST_CASE("stirling triangles match their series kernels") {
  StirlingTriangles st;
  const long order = 7;
  const Series lg = series_log1p(Var::T, order);
  Series em1 = series_exp(Series::identity(Var::T, order));
  em1.set_coeff(0, RatFun());
  for (long k = 0; k <= order; ++k) {
    const RatFun kf(Rational(factorial(static_cast<unsigned long>(k))).inverse());
    const Series p1 = series_pow(lg, static_cast<unsigned long>(k)) * kf;
    const Series p2 = series_pow(em1, static_cast<unsigned long>(k)) * kf;
    for (long n = k; n <= order; ++n) {
      const RatFun nf(Rational(factorial(static_cast<unsigned long>(n))));
      CHECK(p1.coeff(n) * nf == RatFun(Rational(st.s1(n, k))));
      CHECK(p2.coeff(n) * nf == RatFun(Rational(st.s2(n, k))));
    }
  }
}

TEST_CASE("frobenius-euler numbers") {
  FrobeniusEulerSequence fe;
  CHECK(fe.number(0) == RatFun(1));
  CHECK(fe.number(1) == RF("(1)/(-1+u)"));
  CHECK(fe.number(2) == RF("(1+u)/(1-2u+u^2)"));
  CHECK(fe.number(3) == RF("(1+4u+u^2)/(-1+3u-3u^2+u^3)"));

  // reduced denominator divides (u-1)^n
  const MPoly u_minus_1 = P("u-1");
  for (long n = 0; n <= 10; ++n) {
    CHECK(try_divide(u_minus_1.pow(static_cast<unsigned long>(n)), fe.number(n).den())
              .has_value());
  }
}

TEST_CASE("frobenius-euler polynomials") {
  FrobeniusEulerSequence fe;
  CHECK(fe.poly(0) == RatFun(1));
  CHECK(fe.poly(1) == RatFun(P("x")) + RF("(1)/(-1+u)"));
  for (long n = 0; n <= 8; ++n) {
    const RatFun h = fe.poly(n);
    // x-degree exactly n with leading coefficient 1
    CHECK(h.num().degree(Var::X) == static_cast<std::uint32_t>(n));
    CHECK(RatFun(h.num().coeff_of(Var::X, static_cast<std::uint32_t>(n)), h.den()) == RatFun(1));
    // H_n(0|u) = H_n(u)
    CHECK(h.subst(Var::X, Rational(0)) == fe.number(n));
  }
}

TEST_CASE("rows relate to frobenius-euler numbers") {
  EulerianTriangle tri;
  FrobeniusEulerSequence fe;
  const RatFun t(MPoly::variable(Var::T));
  for (long n = 0; n <= 10; ++n) {
    const RatFun rhs = RatFun(P("t-1").pow(static_cast<unsigned long>(n))) *
                       fe.number(n).subst(Var::U, t);
    CHECK(RatFun(tri.poly(n)) == rhs);
  }
}

TEST_CASE("worpitzky expansion") {
  EulerianTriangle tri;
  const MPoly x = MPoly::variable(Var::X);
  for (long n = 1; n <= 8; ++n) {
    MPoly lhs;
    for (long k = 0; k < n; ++k) {
      MPoly binom_poly(1);
      for (long i = 0; i < n; ++i) binom_poly *= x + MPoly(Rational(k - i));
      lhs += binom_poly * Rational(tri.at(n, k)) *
             Rational(factorial(static_cast<unsigned long>(n))).inverse();
    }
    CHECK(lhs == x.pow(static_cast<unsigned long>(n)));
  }
}

TEST_CASE("finite power sum identity, hand-checked instance") {
  // n = 1, m = 2: both sides equal t + 2t^2
  EulerianTriangle tri;
  const MPoly t = MPoly::variable(Var::T);
  const RatFun lhs(P("t+2t^2"));
  RatFun rhs = RatFun(t.pow(3) * tri.poly(0) * Rational(2), P("t-1"));
  rhs += RatFun(-(t.pow(3) - t) * tri.poly(1), P("t-1") * P("t-1"));
  CHECK(rhs == lhs);
}

TEST_CASE("fubini enumeration oracle") {
  const long expected[] = {1, 1, 3, 13, 75, 541, 4683};
  for (long n = 0; n <= 6; ++n) CHECK(fubini_bruteforce(n) == expected[n]);
  CHECK_THROWS_AS(fubini_bruteforce(8), OracleBoundExceeded);
  CHECK_THROWS_AS(fubini_bruteforce(-1), NegativeIndex);
}

TEST_CASE("fault injection hooks overwrite entries") {
  EulerianTriangle tri;
  tri.poke(4, 2, BigInt(12));
  CHECK(tri.at(4, 2) == 12);
  StirlingTriangles st;
  st.poke_s1(5, 3, BigInt(-35));
  CHECK(st.s1(5, 3) == -35);
}
