#include "eulerian/degenerate.hpp"

#include "eulerian/series.hpp"

namespace eulerian::degenerate {

namespace {

const MPoly& var_x() {
  static const MPoly x = MPoly::variable(Var::X);
  return x;
}
const MPoly& var_t() {
  static const MPoly t = MPoly::variable(Var::T);
  return t;
}
const MPoly& var_lambda() {
  static const MPoly l = MPoly::variable(Var::Lambda);
  return l;
}
const MPoly& var_q() {
  static const MPoly q = MPoly::variable(Var::Q);
  return q;
}

void check_index(long n, const char* what) {
  if (n < 0) throw NegativeIndex(std::string(what) + " wants n >= 0");
}

Rational binom(long n, long k) {
  return Rational(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k)));
}

}  // namespace

MPoly falling_factorial_of(const MPoly& base, long n) {
  check_index(n, "falling_factorial");
  MPoly out(1);
  for (long i = 0; i < n; ++i) out *= base - Rational(i) * var_lambda();
  return out;
}

MPoly falling_factorial(long n) { return falling_factorial_of(var_x(), n); }

MPoly rising_factorial_of(const MPoly& base, long n) {
  check_index(n, "rising_factorial");
  MPoly out(1);
  for (long i = 0; i < n; ++i) out *= base + Rational(i) * var_lambda();
  return out;
}

MPoly rising_factorial(long n) { return rising_factorial_of(var_x(), n); }

MPoly unsigned_stirling1(long n, long l) {
  if (n < 0 || l < 0 || l > n) throw IndexOutOfRange("unsigned_stirling1 wants 0 <= l <= n");
  return rising_factorial(n).coeff_of(Var::X, static_cast<std::uint32_t>(l));
}

MPoly eulerian_poly(long n, classical::EulerianTriangle& tri, classical::StirlingTriangles& st) {
  check_index(n, "degenerate eulerian_poly");
  MPoly acc;
  for (long k = 0; k <= n; ++k) {
    const BigInt& s = st.s1(n, k);
    if (s == 0) continue;
    acc += tri.poly(k) * var_lambda().pow(static_cast<unsigned long>(n - k)) * Rational(s);
  }
  return acc;
}

MPoly eulerian_poly(long n) {
  classical::EulerianTriangle tri;
  classical::StirlingTriangles st;
  return eulerian_poly(n, tri, st);
}

std::vector<MPoly> eulerian_poly_recursive_family(long n_max) {
  check_index(n_max, "degenerate eulerian_poly_recursive");
  const MPoly t_minus_1 = var_t() - MPoly(1);
  std::vector<MPoly> fam{MPoly(1)};
  for (long m = 1; m <= n_max; ++m) {
    MPoly s;
    for (long k = 0; k < m; ++k) {
      s += fam[static_cast<std::size_t>(k)] * falling_factorial_of(t_minus_1, m - k) *
           binom(m, k);
    }
    fam.push_back(poly_div_exact(s, t_minus_1));
  }
  return fam;
}

MPoly eulerian_poly_recursive(long n) { return eulerian_poly_recursive_family(n).back(); }

std::vector<MPoly> eulerian_poly_series_family(long n_max) {
  check_index(n_max, "degenerate eulerian_poly_series");
  const RatFun one_minus_t(MPoly(1) - var_t());
  Series den = series_deg_pow(Var::X, var_t() - MPoly(1), n_max);
  den.set_coeff(0, den.coeff(0) - RatFun(var_t()));
  const Series gf = series_inv(den) * one_minus_t;
  std::vector<MPoly> fam;
  Rational nfact(1);
  for (long n = 0; n <= n_max; ++n) {
    if (n > 0) nfact *= Rational(n);
    fam.push_back((gf.coeff(n) * RatFun(nfact)).as_poly());
  }
  return fam;
}

MPoly eulerian_poly_series(long n) { return eulerian_poly_series_family(n).back(); }

MPoly eulerian_poly_frobenius(long n, classical::StirlingTriangles& st,
                              classical::FrobeniusEulerSequence& fe) {
  check_index(n, "degenerate eulerian_poly_frobenius");
  const RatFun t(var_t());
  RatFun acc;
  for (long k = 0; k <= n; ++k) {
    const BigInt& s = st.s1(n, k);
    if (s == 0) continue;
    const RatFun h_at_t = fe.number(k).subst(Var::U, t);
    acc += RatFun(var_lambda().pow(static_cast<unsigned long>(n - k))) * Rational(s) * h_at_t *
           RatFun((var_t() - MPoly(1)).pow(static_cast<unsigned long>(k)));
  }
  return acc.as_poly();
}

MPoly eulerian_number(long n, long l, classical::EulerianTriangle& tri,
                      classical::StirlingTriangles& st) {
  if (n < 0 || l < 0 || l > n) throw IndexOutOfRange("degenerate eulerian_number wants 0 <= l <= n");
  return eulerian_poly(n, tri, st).coeff_of(Var::T, static_cast<std::uint32_t>(l));
}

MPoly eulerian_number(long n, long l) {
  classical::EulerianTriangle tri;
  classical::StirlingTriangles st;
  return eulerian_number(n, l, tri, st);
}

MPoly eulerian_number_stirling(long n, long l, classical::EulerianTriangle& tri,
                               classical::StirlingTriangles& st) {
  if (n < 0 || l < 0 || l > n) throw IndexOutOfRange("degenerate eulerian_number wants 0 <= l <= n");
  MPoly acc;
  for (long k = l; k <= n; ++k) {
    acc += var_lambda().pow(static_cast<unsigned long>(n - k)) *
           Rational(BigInt(tri.at(k, l) * st.s1(n, k)));
  }
  return acc;
}

MPoly eulerian_number_closed(long n, long l, classical::StirlingTriangles& st) {
  if (n < 0 || l < 0 || l > n) throw IndexOutOfRange("degenerate eulerian_number wants 0 <= l <= n");
  MPoly acc;
  for (long k = l; k <= n; ++k) {
    // Inner alternating sum is the ascent-count closed form; its k = 0
    // instance only arises for l = 0 and equals 1.
    BigInt inner(0);
    if (k == 0) {
      inner = l == 0 ? 1 : 0;
    } else {
      for (long m = 0; m <= l + 1; ++m) {
        const BigInt term =
            binomial(static_cast<unsigned long>(k) + 1, static_cast<unsigned long>(m)) *
            int_pow(BigInt(l + 1 - m), static_cast<unsigned long>(k));
        if (m % 2 == 0) {
          inner += term;
        } else {
          inner -= term;
        }
      }
    }
    acc += var_lambda().pow(static_cast<unsigned long>(n - k)) * Rational(BigInt(inner * st.s1(n, k)));
  }
  return acc;
}

MPoly ordered_bell(long n, classical::EulerianTriangle& tri, classical::StirlingTriangles& st) {
  check_index(n, "ordered_bell");
  return eulerian_poly(n, tri, st).subst(Var::T, Rational(2));
}

MPoly ordered_bell(long n) {
  classical::EulerianTriangle tri;
  classical::StirlingTriangles st;
  return ordered_bell(n, tri, st);
}

std::vector<MPoly> ordered_bell_gf_family(long n_max) {
  check_index(n_max, "ordered_bell_gf");
  Series den = -series_deg_pow(Var::T, MPoly(1), n_max);
  den.set_coeff(0, den.coeff(0) + RatFun(2));
  const Series gf = series_inv(den);
  std::vector<MPoly> fam;
  Rational nfact(1);
  for (long n = 0; n <= n_max; ++n) {
    if (n > 0) nfact *= Rational(n);
    fam.push_back((gf.coeff(n) * RatFun(nfact)).as_poly());
  }
  return fam;
}

MPoly ordered_bell_gf(long n) { return ordered_bell_gf_family(n).back(); }

MPoly ordered_bell_frobenius(long n, classical::StirlingTriangles& st,
                             classical::FrobeniusEulerSequence& fe) {
  check_index(n, "ordered_bell_frobenius");
  RatFun acc;
  for (long k = 0; k <= n; ++k) {
    const BigInt& s = st.s1(n, k);
    if (s == 0) continue;
    acc += RatFun(var_lambda().pow(static_cast<unsigned long>(n - k))) * Rational(s) *
           fe.number(k).subst(Var::U, Rational(2));
  }
  return acc.as_poly();
}

std::vector<MPoly> ordered_bell_poly_family(long n_max) {
  check_index(n_max, "ordered_bell_poly");
  Series den = -series_deg_pow(Var::T, MPoly(1), n_max);
  den.set_coeff(0, den.coeff(0) + RatFun(2));
  const Series gf = series_mul(series_inv(den), series_deg_pow(Var::T, var_x(), n_max));
  std::vector<MPoly> fam;
  Rational nfact(1);
  for (long n = 0; n <= n_max; ++n) {
    if (n > 0) nfact *= Rational(n);
    fam.push_back((gf.coeff(n) * RatFun(nfact)).as_poly());
  }
  return fam;
}

MPoly ordered_bell_poly(long n) { return ordered_bell_poly_family(n).back(); }

RatFun h_at_minus_q(long n, classical::FrobeniusEulerSequence& fe) {
  check_index(n, "h_at_minus_q");
  return fe.number(n).subst(Var::U, RatFun(-var_q()));
}

RatFun h_at_minus_q(long n) {
  classical::FrobeniusEulerSequence fe;
  return h_at_minus_q(n, fe);
}

RatFun fermionic_moment(long n, classical::FrobeniusEulerSequence& fe) {
  check_index(n, "fermionic_moment");
  const RatFun lambda_scaled(var_lambda(), MPoly(1) + var_q());
  RatFun acc;
  for (long l = 0; l <= n; ++l) {
    const MPoly s = unsigned_stirling1(n, l);
    if (s.is_zero()) continue;
    acc += subst_ratfun(s, Var::Lambda, lambda_scaled) * h_at_minus_q(l, fe);
  }
  return acc;
}

RatFun fermionic_moment(long n) {
  classical::FrobeniusEulerSequence fe;
  return fermionic_moment(n, fe);
}

}  // namespace eulerian::degenerate
