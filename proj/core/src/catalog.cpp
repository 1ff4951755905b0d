#include "eulerian/catalog.hpp"

#include <array>
#include <random>

#include "eulerian/series.hpp"
#include "eulerian/text.hpp"

namespace eulerian::catalog {

namespace {

constexpr std::array<IdentityInfo, kIdentityCount> kRegistry = {{
    {IdentityId::EQ01_GF, "EQ01_GF",
     "ascent-count generating function: (sum (k+1)^n x^k)(1-x)^(n+1) reproduces the row polynomial",
     "Eq. (1)", "power_sum_series_product", "eulerian_triangle_rows"},
    {IdentityId::EQ02_VS_EQ04, "EQ02_VS_EQ04",
     "alternating closed form agrees with the two-term row recurrence",
     "Eq. (2) vs Eq. (4)", "eulerian_number_closed_form", "eulerian_triangle_recurrence"},
    {IdentityId::EQ05_GF, "EQ05_GF",
     "row polynomials match the coefficients of (1-t)/(e^{x(t-1)}-t)",
     "Eq. (5)", "exp_series_inversion", "eulerian_triangle_rows"},
    {IdentityId::EQ06_UMBRAL, "EQ06_UMBRAL",
     "umbral recurrence: sum C(n,k) A_k(t)(t-1)^(n-k) - t A_n(t) = (1-t) only at n = 0",
     "Eq. (6)", "binomial_convolution_of_rows", "kronecker_constant"},
    {IdentityId::EQ07_COEFFS, "EQ07_COEFFS",
     "A_n(t) assembled from closed-form coefficients equals the generating-function series",
     "Eq. (7)", "eulerian_number_closed_form", "exp_series_inversion"},
    {IdentityId::EQ08_TABLE, "EQ08_TABLE",
     "displayed expansions: sum (j+1)^k t^j = A_k(t)/(1-t)^(k+1) for k = 0..3, order 10",
     "Eq. (8)", "power_sum_series", "row_poly_times_geometric_inverse"},
    {IdentityId::EQ09_WORPITZKY, "EQ09_WORPITZKY",
     "Worpitzky expansion: sum_k <n,k> C(x+k,n) = x^n as a polynomial identity",
     "Eq. (9)", "binomial_basis_combination", "monomial_power"},
    {IdentityId::EQ10_RECURSION, "EQ10_RECURSION",
     "division recursion A_n(t) = (t-1)^{-1} sum C(n,l) A_l(t)(t-1)^(n-l) rebuilds the rows",
     "Eq. (10)", "division_recursion_family", "eulerian_triangle_rows"},
    {IdentityId::EQ11_POWER_SUM, "EQ11_POWER_SUM",
     "finite power sum sum_{k<=m} k^n t^k written through row polynomials (k^n reading)",
     "Eq. (11)", "direct_power_sum_polynomial", "row_poly_rational_combination", true},
    {IdentityId::EQ12_GF, "EQ12_GF",
     "degenerate ordered Bell polynomial generating function matches its binomial convolution",
     "Eq. (12)", "bell_gf_series", "binomial_convolution_of_bell_numbers"},
    {IdentityId::EQ13_GF, "EQ13_GF",
     "Frobenius-Euler polynomials from (1-u)/(e^t-u) e^{xt} match the defining recurrence",
     "Eq. (13)", "exp_series_inversion", "frobenius_euler_recurrence"},
    {IdentityId::EQ14_GF, "EQ14_GF",
     "first-kind Stirling triangle matches coefficients of log(1+t)^k/k!",
     "Eq. (14)", "log_power_series", "stirling1_recurrence"},
    {IdentityId::EQ15_GF, "EQ15_GF",
     "second-kind Stirling triangle matches coefficients of (e^t-1)^k/k!",
     "Eq. (15)", "exp_power_series", "stirling2_recurrence"},
    {IdentityId::EQ16_GF, "EQ16_GF",
     "degenerate row polynomials from (1-t)/((1+lx)^((t-1)/l)-t) match the division recursion",
     "Eq. (16)", "deg_pow_series_inversion", "deg_division_recursion"},
    {IdentityId::EQ18_UMBRAL_DEG, "EQ18_UMBRAL_DEG",
     "degenerate umbral recurrence with degenerate falling factorials of t-1",
     "Eq. (18)", "deg_binomial_convolution", "kronecker_constant"},
    {IdentityId::EQ20_RECURSION_DEG, "EQ20_RECURSION_DEG",
     "degenerate division recursion agrees with the Stirling transform",
     "Eq. (20)", "deg_division_recursion", "stirling_transform"},
    {IdentityId::EQ22_STIRLING_TRANSFORM, "EQ22_STIRLING_TRANSFORM",
     "Stirling transform of the classical rows agrees with the generating-function series",
     "Eq. (22)", "stirling_transform", "deg_pow_series_inversion"},
    {IdentityId::EQ23_25_28_NUMBERS, "EQ23_25_28_NUMBERS",
     "degenerate ascent numbers: coefficient extraction vs Stirling sum vs closed-form sum",
     "Eqs. (23)/(25)/(28)", "transform_coefficient_extraction", "stirling_sum_and_closed_sum"},
    {IdentityId::EQ26_27_ORDERED_BELL, "EQ26_27_ORDERED_BELL",
     "degenerate ordered Bell numbers: t=2 specialization vs double sum vs generating function",
     "Eqs. (26)/(27)", "recursion_poly_at_two", "double_sum_and_bell_gf_series"},
    {IdentityId::EQ30_FROBENIUS_FORM, "EQ30_FROBENIUS_FORM",
     "degenerate rows through Frobenius-Euler numbers: sum l^(n-k) S_1(n,k) H_k(t)(t-1)^k",
     "Eq. (30)", "frobenius_euler_combination", "stirling_transform"},
    {IdentityId::EQ31_BELL_FROBENIUS, "EQ31_BELL_FROBENIUS",
     "degenerate ordered Bell numbers through Frobenius-Euler values at 2",
     "Eq. (31)", "frobenius_euler_combination_at_two", "transform_poly_at_two"},
    {IdentityId::EQ41_Q_FORM, "EQ41_Q_FORM",
     "A_{n,l}(-q) = sum (-1)^k l^(n-k) (1+q)^k S_1(n,k) H_k(-q) as rational functions",
     "Eq. (41)", "deg_division_recursion_at_minus_q", "stirling_frobenius_q_sum"},
    {IdentityId::EQ44_46_MOMENT, "EQ44_46_MOMENT",
     "fermionic moment sum |S_{1,l/(1+q)}(n,l)| H_l(-q) equals (-1)^n A_{n,l}(-q)/(1+q)^n",
     "Eqs. (44)/(46)", "moment_stirling_sum", "transform_poly_at_minus_q_scaled"},
    {IdentityId::LIMIT_LAMBDA_ZERO, "LIMIT_LAMBDA_ZERO",
     "l = 0 specializations collapse every degenerate object to its classical value",
     "limits after Eqs. (16)/(23)", "lambda_zero_specialization", "classical_tables_and_enumeration"},
    {IdentityId::BRIDGE_A_EQUALS_H, "BRIDGE_A_EQUALS_H",
     "A_n(t) = (t-1)^n H_n(t) linking the row polynomials to Frobenius-Euler numbers",
     "Eq. (5) vs Eq. (13)", "eulerian_triangle_rows", "frobenius_euler_recurrence"},
    {IdentityId::STIRLING_ORTHOGONALITY, "STIRLING_ORTHOGONALITY",
     "sum_k S_1(n,k) S_2(k,m) = delta_{n,m}: the triangles are inverse",
     "Eqs. (14)/(15)", "triangle_convolution", "kronecker_constant"},
    {IdentityId::BRUTE_FORCE_EULERIAN, "BRUTE_FORCE_EULERIAN",
     "closed form counts permutations by ascents: checked against full enumeration (n <= 8)",
     "Eq. (2)", "eulerian_number_closed_form", "permutation_enumeration"},
}};

std::array<Rational, kVarCount> random_point(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-99, 99);
  std::uniform_int_distribution<long> den(1, 9);
  std::array<Rational, kVarCount> p;
  for (auto& r : p) r = Rational(num(rng), den(rng));
  return p;
}

class Comparator {
 public:
  Comparator(Strategy strategy, std::uint64_t seed) : strategy_(strategy), rng_(seed) {}

  bool equal(const RatFun& a, const RatFun& b) {
    if (strategy_ == Strategy::Symbolic) return a == b;
    for (int i = 0; i < 3; ++i) {
      std::optional<Rational> va, vb;
      do {
        const auto p = random_point(rng_);
        va = a.eval(p);
        vb = b.eval(p);
      } while (!va || !vb);
      if (*va != *vb) return false;
    }
    return true;
  }

  bool equal(const MPoly& a, const MPoly& b) {
    if (strategy_ == Strategy::Symbolic) return a == b;
    return equal(RatFun(a), RatFun(b));
  }

 private:
  Strategy strategy_;
  std::mt19937_64 rng_;
};

/// Collects the first counterexample; checks bail out once one is found.
struct Check {
  Session& s;
  Comparator cmp;
  std::optional<Counterexample> ce;

  bool eq(std::vector<long> idx, const RatFun& lhs, const RatFun& rhs) {
    if (cmp.equal(lhs, rhs)) return true;
    ce = Counterexample{std::move(idx), to_string(lhs), to_string(rhs), to_string(lhs - rhs)};
    return false;
  }
  bool eq(std::vector<long> idx, const MPoly& lhs, const MPoly& rhs) {
    if (cmp.equal(lhs, rhs)) return true;
    ce = Counterexample{std::move(idx), to_string(lhs), to_string(rhs), to_string(lhs - rhs)};
    return false;
  }
  bool eq(std::vector<long> idx, const BigInt& lhs, const BigInt& rhs) {
    if (lhs == rhs) return true;
    ce = Counterexample{std::move(idx), lhs.get_str(), rhs.get_str(), BigInt(lhs - rhs).get_str()};
    return false;
  }
};

MPoly t_poly() { return MPoly::variable(Var::T); }
MPoly x_poly() { return MPoly::variable(Var::X); }
MPoly lambda_poly() { return MPoly::variable(Var::Lambda); }
MPoly q_poly() { return MPoly::variable(Var::Q); }

Rational rbinom(long n, long k) {
  return Rational(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k)));
}

BigInt big_pow(long base, long e) {
  return int_pow(BigInt(base), static_cast<unsigned long>(e));
}

Rational rfact(long n) { return Rational(factorial(static_cast<unsigned long>(n))); }

// (base)(base-1)...(base-n+1)/n!
MPoly binomial_poly(const MPoly& base, long n) {
  MPoly prod(1);
  for (long i = 0; i < n; ++i) prod *= base - Rational(i);
  return prod * rfact(n).inverse();
}

// (1-t)/(e^{x(t-1)} - t) truncated in x.
Series classical_gf_series(long order) {
  Series arg(Var::X, order);
  if (order >= 1) arg.set_coeff(1, RatFun(t_poly() - MPoly(1)));
  Series den = series_exp(arg);
  den.set_coeff(0, den.coeff(0) - RatFun(t_poly()));
  return series_inv(den) * RatFun(MPoly(1) - t_poly());
}

void run_eq01(Check& c, long n_max) {
  const long order = n_max + 1;
  for (long n = 0; n <= n_max; ++n) {
    Series lhs(Var::X, order);
    for (long k = 0; k <= order; ++k) lhs.set_coeff(k, RatFun(Rational(big_pow(k + 1, n))));
    lhs = series_mul(lhs, Series::from_mpoly(Var::X, (MPoly(1) - x_poly()).pow(
                                                         static_cast<unsigned long>(n) + 1),
                                             order));
    Series rhs(Var::X, order);
    for (long m = 0; m < std::max(1L, n) && m <= order; ++m) {
      rhs.set_coeff(m, RatFun(Rational(c.s.eulerian.at(n, m))));
    }
    for (long j = 0; j <= order; ++j) {
      if (!c.eq({n, j}, lhs.coeff(j), rhs.coeff(j))) return;
    }
  }
}

void run_eq02(Check& c, long n_max) {
  for (long n = 0; n <= n_max; ++n) {
    for (long m = 0; m <= n; ++m) {
      if (!c.eq({n, m}, classical::eulerian_number(n, m), c.s.eulerian.at(n, m))) return;
    }
  }
}

void run_eq05(Check& c, long n_max) {
  const Series gf = classical_gf_series(n_max + 1);
  Rational nfact(1);
  for (long n = 0; n <= n_max; ++n) {
    if (n > 0) nfact *= Rational(n);
    if (!c.eq({n}, gf.coeff(n) * RatFun(nfact), RatFun(c.s.eulerian.poly(n)))) return;
  }
}

void run_eq06(Check& c, long n_max) {
  const MPoly t = t_poly();
  for (long n = 0; n <= n_max; ++n) {
    MPoly lhs;
    for (long k = 0; k <= n; ++k) {
      lhs += c.s.eulerian.poly(k) * (t - MPoly(1)).pow(static_cast<unsigned long>(n - k)) *
             rbinom(n, k);
    }
    lhs -= t * c.s.eulerian.poly(n);
    const MPoly rhs = n == 0 ? MPoly(1) - t : MPoly();
    if (!c.eq({n}, lhs, rhs)) return;
  }
}

void run_eq07(Check& c, long n_max) {
  const Series gf = classical_gf_series(n_max + 1);
  const MPoly t = t_poly();
  Rational nfact(1);
  for (long n = 0; n <= n_max; ++n) {
    if (n > 0) nfact *= Rational(n);
    MPoly assembled;
    for (long l = 0; l <= n; ++l) {
      assembled += t.pow(static_cast<unsigned long>(l)) *
                   Rational(classical::eulerian_number(n, l));
    }
    if (!c.eq({n}, RatFun(assembled), gf.coeff(n) * RatFun(nfact))) return;
  }
}

void run_eq08(Check& c, long /*n_max*/) {
  const long order = 10;
  const MPoly t = t_poly();
  for (long k = 0; k <= 3; ++k) {
    Series lhs(Var::T, order);
    for (long j = 0; j <= order; ++j) lhs.set_coeff(j, RatFun(Rational(big_pow(j + 1, k))));
    const Series rhs = series_mul(
        Series::from_mpoly(Var::T, c.s.eulerian.poly(k), order),
        series_inv(Series::from_mpoly(
            Var::T, (MPoly(1) - t).pow(static_cast<unsigned long>(k) + 1), order)));
    for (long j = 0; j <= order; ++j) {
      if (!c.eq({k, j}, lhs.coeff(j), rhs.coeff(j))) return;
    }
  }
}

void run_eq09(Check& c, long n_max) {
  const MPoly x = x_poly();
  for (long n = 1; n <= n_max; ++n) {
    MPoly lhs;
    for (long k = 0; k < n; ++k) {
      lhs += binomial_poly(x + MPoly(Rational(k)), n) * Rational(c.s.eulerian.at(n, k));
    }
    if (!c.eq({n}, lhs, x.pow(static_cast<unsigned long>(n)))) return;
  }
}

void run_eq10(Check& c, long n_max) {
  const MPoly t = t_poly();
  const MPoly t_minus_1 = t - MPoly(1);
  std::vector<MPoly> fam{MPoly(1)};
  for (long n = 1; n <= n_max; ++n) {
    MPoly s;
    for (long l = 0; l < n; ++l) {
      s += fam[static_cast<std::size_t>(l)] *
           t_minus_1.pow(static_cast<unsigned long>(n - l)) * rbinom(n, l);
    }
    fam.push_back(poly_div_exact(s, t_minus_1));
  }
  for (long n = 0; n <= n_max; ++n) {
    if (!c.eq({n}, fam[static_cast<std::size_t>(n)], c.s.eulerian.poly(n))) return;
  }
}

void run_eq11(Check& c, long n_max, long m_max) {
  const MPoly t = t_poly();
  const MPoly t_minus_1 = t - MPoly(1);
  for (long n = 0; n <= n_max; ++n) {
    for (long m = 1; m <= m_max; ++m) {
      MPoly lhs;
      for (long k = 1; k <= m; ++k) {
        lhs += t.pow(static_cast<unsigned long>(k)) * Rational(big_pow(k, n));
      }
      RatFun rhs;
      for (long i = 1; i <= n; ++i) {
        const Rational sign((n + i) % 2 == 0 ? 1 : -1);
        rhs += RatFun(t.pow(static_cast<unsigned long>(m) + 1) * c.s.eulerian.poly(n - i) *
                          (sign * rbinom(n, i) * Rational(big_pow(m, i))),
                      t_minus_1.pow(static_cast<unsigned long>(n - i) + 1));
      }
      const Rational sign(n % 2 == 0 ? 1 : -1);
      rhs += RatFun((t.pow(static_cast<unsigned long>(m)) - MPoly(1)) * t *
                        c.s.eulerian.poly(n) * sign,
                    t_minus_1.pow(static_cast<unsigned long>(n) + 1));
      if (!c.eq({n, m}, RatFun(lhs), rhs)) return;
    }
  }
}

void run_eq12(Check& c, long n_max) {
  const auto gf_family = degenerate::ordered_bell_poly_family(n_max);
  for (long n = 0; n <= n_max; ++n) {
    MPoly conv;
    for (long k = 0; k <= n; ++k) {
      conv += degenerate::ordered_bell(k, c.s.eulerian, c.s.stirling) *
              degenerate::falling_factorial(n - k) * rbinom(n, k);
    }
    if (!c.eq({n}, gf_family[static_cast<std::size_t>(n)], conv)) return;
  }
}

void run_eq13(Check& c, long n_max) {
  const long order = n_max + 1;
  const MPoly u = MPoly::variable(Var::U);
  Series arg1(Var::T, order);
  if (order >= 1) arg1.set_coeff(1, RatFun(1));
  Series den = series_exp(arg1);
  den.set_coeff(0, den.coeff(0) - RatFun(u));
  Series gf = series_inv(den) * RatFun(MPoly(1) - u);
  Series argx(Var::T, order);
  if (order >= 1) argx.set_coeff(1, RatFun(x_poly()));
  gf = series_mul(gf, series_exp(argx));
  Rational nfact(1);
  for (long n = 0; n <= n_max; ++n) {
    if (n > 0) nfact *= Rational(n);
    if (!c.eq({n}, gf.coeff(n) * RatFun(nfact), c.s.frobenius.poly(n))) return;
  }
}

void run_eq14(Check& c, long n_max) {
  const long order = n_max + 1;
  const Series lg = series_log1p(Var::T, order);
  for (long k = 0; k <= n_max; ++k) {
    const Series pw = series_pow(lg, static_cast<unsigned long>(k)) * RatFun(rfact(k).inverse());
    Rational nfact = rfact(k);
    for (long n = k; n <= n_max; ++n) {
      if (n > k) nfact *= Rational(n);
      if (!c.eq({n, k}, pw.coeff(n) * RatFun(nfact), RatFun(Rational(c.s.stirling.s1(n, k)))))
        return;
    }
  }
}

void run_eq15(Check& c, long n_max) {
  const long order = n_max + 1;
  Series arg(Var::T, order);
  if (order >= 1) arg.set_coeff(1, RatFun(1));
  Series em1 = series_exp(arg);
  em1.set_coeff(0, RatFun());
  for (long k = 0; k <= n_max; ++k) {
    const Series pw = series_pow(em1, static_cast<unsigned long>(k)) * RatFun(rfact(k).inverse());
    Rational nfact = rfact(k);
    for (long n = k; n <= n_max; ++n) {
      if (n > k) nfact *= Rational(n);
      if (!c.eq({n, k}, pw.coeff(n) * RatFun(nfact), RatFun(Rational(c.s.stirling.s2(n, k)))))
        return;
    }
  }
}

void run_eq16(Check& c, long n_max) {
  const auto series_fam = degenerate::eulerian_poly_series_family(n_max);
  const auto rec_fam = degenerate::eulerian_poly_recursive_family(n_max);
  for (long n = 0; n <= n_max; ++n) {
    if (!c.eq({n}, series_fam[static_cast<std::size_t>(n)],
               rec_fam[static_cast<std::size_t>(n)]))
      return;
  }
}

void run_eq18(Check& c, long n_max) {
  const MPoly t = t_poly();
  const MPoly t_minus_1 = t - MPoly(1);
  std::vector<MPoly> fam;
  for (long n = 0; n <= n_max; ++n) {
    fam.push_back(degenerate::eulerian_poly(n, c.s.eulerian, c.s.stirling));
  }
  for (long n = 0; n <= n_max; ++n) {
    MPoly lhs;
    for (long k = 0; k <= n; ++k) {
      lhs += fam[static_cast<std::size_t>(k)] *
             degenerate::falling_factorial_of(t_minus_1, n - k) * rbinom(n, k);
    }
    lhs -= t * fam[static_cast<std::size_t>(n)];
    const MPoly rhs = n == 0 ? MPoly(1) - t : MPoly();
    if (!c.eq({n}, lhs, rhs)) return;
  }
}

void run_eq20(Check& c, long n_max) {
  const auto rec_fam = degenerate::eulerian_poly_recursive_family(n_max);
  for (long n = 0; n <= n_max; ++n) {
    if (!c.eq({n}, rec_fam[static_cast<std::size_t>(n)],
               degenerate::eulerian_poly(n, c.s.eulerian, c.s.stirling)))
      return;
  }
}

void run_eq22(Check& c, long n_max) {
  const auto series_fam = degenerate::eulerian_poly_series_family(n_max);
  for (long n = 0; n <= n_max; ++n) {
    if (!c.eq({n}, degenerate::eulerian_poly(n, c.s.eulerian, c.s.stirling),
               series_fam[static_cast<std::size_t>(n)]))
      return;
  }
}

void run_eq23_25_28(Check& c, long n_max) {
  for (long n = 0; n <= n_max; ++n) {
    const MPoly poly = degenerate::eulerian_poly(n, c.s.eulerian, c.s.stirling);
    for (long l = 0; l <= n; ++l) {
      const MPoly extracted = poly.coeff_of(Var::T, static_cast<std::uint32_t>(l));
      if (!c.eq({n, l}, extracted,
                 degenerate::eulerian_number_stirling(n, l, c.s.eulerian, c.s.stirling)))
        return;
      if (!c.eq({n, l}, extracted, degenerate::eulerian_number_closed(n, l, c.s.stirling)))
        return;
    }
  }
}

void run_eq26_27(Check& c, long n_max) {
  const auto rec_fam = degenerate::eulerian_poly_recursive_family(n_max);
  const auto gf_fam = degenerate::ordered_bell_gf_family(n_max);
  for (long n = 0; n <= n_max; ++n) {
    const MPoly at_two = rec_fam[static_cast<std::size_t>(n)].subst(Var::T, Rational(2));
    MPoly double_sum;
    for (long l = 0; l <= n; ++l) {
      double_sum += degenerate::eulerian_number_stirling(n, l, c.s.eulerian, c.s.stirling) *
                    Rational(big_pow(2, l));
    }
    if (!c.eq({n}, at_two, double_sum)) return;
    if (!c.eq({n}, at_two, gf_fam[static_cast<std::size_t>(n)])) return;
  }
}

void run_eq30(Check& c, long n_max) {
  for (long n = 0; n <= n_max; ++n) {
    if (!c.eq({n}, degenerate::eulerian_poly_frobenius(n, c.s.stirling, c.s.frobenius),
               degenerate::eulerian_poly(n, c.s.eulerian, c.s.stirling)))
      return;
  }
}

void run_eq31(Check& c, long n_max) {
  for (long n = 0; n <= n_max; ++n) {
    if (!c.eq({n}, degenerate::ordered_bell_frobenius(n, c.s.stirling, c.s.frobenius),
               degenerate::ordered_bell(n, c.s.eulerian, c.s.stirling)))
      return;
  }
}

void run_eq41(Check& c, long n_max) {
  const auto rec_fam = degenerate::eulerian_poly_recursive_family(n_max);
  const MPoly minus_q = -q_poly();
  const MPoly one_plus_q = MPoly(1) + q_poly();
  for (long n = 0; n <= n_max; ++n) {
    const RatFun lhs(rec_fam[static_cast<std::size_t>(n)].subst(Var::T, minus_q));
    RatFun rhs;
    for (long k = 0; k <= n; ++k) {
      const BigInt& s = c.s.stirling.s1(n, k);
      if (s == 0) continue;
      const Rational sign(k % 2 == 0 ? 1 : -1);
      rhs += RatFun(lambda_poly().pow(static_cast<unsigned long>(n - k)) *
                    one_plus_q.pow(static_cast<unsigned long>(k)) * (sign * Rational(s))) *
             degenerate::h_at_minus_q(k, c.s.frobenius);
    }
    if (!c.eq({n}, lhs, rhs)) return;
  }
}

void run_eq44_46(Check& c, long n_max) {
  const MPoly minus_q = -q_poly();
  const MPoly one_plus_q = MPoly(1) + q_poly();
  for (long n = 0; n <= n_max; ++n) {
    const RatFun mom = degenerate::fermionic_moment(n, c.s.frobenius);
    const MPoly transformed =
        degenerate::eulerian_poly(n, c.s.eulerian, c.s.stirling).subst(Var::T, minus_q);
    const Rational sign(n % 2 == 0 ? 1 : -1);
    const RatFun rhs(transformed * sign, one_plus_q.pow(static_cast<unsigned long>(n)));
    if (!c.eq({n}, mom, rhs)) return;
    if (!try_divide(one_plus_q.pow(static_cast<unsigned long>(n)), mom.den())) {
      c.ce = Counterexample{{n},
                            to_string(mom.den()),
                            to_string(one_plus_q.pow(static_cast<unsigned long>(n))),
                            "moment denominator does not divide (1+q)^n"};
      return;
    }
  }
}

void run_limit_lambda_zero(Check& c, long n_max) {
  for (long n = 0; n <= n_max; ++n) {
    const MPoly deg = degenerate::eulerian_poly(n, c.s.eulerian, c.s.stirling);
    if (!c.eq({n, 0}, deg.subst(Var::Lambda, Rational(0)), c.s.eulerian.poly(n))) return;
    if (!c.eq({n, 1}, degenerate::falling_factorial(n).subst(Var::Lambda, Rational(0)),
               x_poly().pow(static_cast<unsigned long>(n))))
      return;
    const MPoly bell0 =
        degenerate::ordered_bell(n, c.s.eulerian, c.s.stirling).subst(Var::Lambda, Rational(0));
    const MPoly fubini = n <= 5 ? MPoly(Rational(classical::fubini_bruteforce(n)))
                                : c.s.eulerian.poly(n).subst(Var::T, Rational(2));
    if (!c.eq({n, 2}, bell0, fubini)) return;
  }
}

void run_bridge(Check& c, long n_max) {
  const RatFun t(t_poly());
  const MPoly t_minus_1 = t_poly() - MPoly(1);
  for (long n = 0; n <= n_max; ++n) {
    const RatFun rhs = RatFun(t_minus_1.pow(static_cast<unsigned long>(n))) *
                       c.s.frobenius.number(n).subst(Var::U, t);
    if (!c.eq({n}, RatFun(c.s.eulerian.poly(n)), rhs)) return;
  }
}

void run_orthogonality(Check& c, long n_max) {
  for (long n = 0; n <= n_max; ++n) {
    for (long m = 0; m <= n_max; ++m) {
      BigInt acc(0);
      for (long k = m; k <= n; ++k) acc += c.s.stirling.s1(n, k) * c.s.stirling.s2(k, m);
      if (!c.eq({n, m}, acc, BigInt(n == m ? 1 : 0))) return;
    }
  }
}

void run_bruteforce(Check& c, long n_max) {
  for (long n = 0; n <= n_max; ++n) {
    for (long m = 0; m <= n; ++m) {
      if (!c.eq({n, m}, classical::eulerian_number(n, m), classical::eulerian_bruteforce(n, m)))
        return;
    }
  }
}

std::uint64_t probe_seed(IdentityId id, long n_max) {
  return 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(id) + 1) +
         static_cast<std::uint64_t>(n_max);
}

}  // namespace

std::span<const IdentityInfo> list_identities() { return kRegistry; }

const IdentityInfo& identity_info(IdentityId id) {
  return kRegistry[static_cast<std::size_t>(id)];
}

std::string_view to_string(IdentityId id) { return identity_info(id).name; }

IdentityId parse_identity(std::string_view name) {
  for (const auto& info : kRegistry) {
    if (info.name == name) return info.id;
  }
  throw UnknownIdentity("unknown identity tag: " + std::string(name));
}

IdentityReport verify(IdentityId id, long n_max, std::optional<long> m_max, Session* session,
                      Strategy strategy) {
  if (n_max < 0) throw NegativeIndex("verify wants n_max >= 0");
  const IdentityInfo& info = identity_info(id);
  if (info.needs_m && !m_max) {
    throw MissingSecondIndex(std::string(info.name) + " needs m_max");
  }

  Session local;
  Session& s = session ? *session : local;

  IdentityReport report;
  report.id = id;
  report.n_max = n_max;
  if (info.needs_m) report.m_max = m_max;

  Check check{s, Comparator(strategy, probe_seed(id, n_max)), std::nullopt};
  const auto start = std::chrono::steady_clock::now();
  switch (id) {
    case IdentityId::EQ01_GF: run_eq01(check, n_max); break;
    case IdentityId::EQ02_VS_EQ04: run_eq02(check, n_max); break;
    case IdentityId::EQ05_GF: run_eq05(check, n_max); break;
    case IdentityId::EQ06_UMBRAL: run_eq06(check, n_max); break;
    case IdentityId::EQ07_COEFFS: run_eq07(check, n_max); break;
    case IdentityId::EQ08_TABLE: run_eq08(check, n_max); break;
    case IdentityId::EQ09_WORPITZKY: run_eq09(check, n_max); break;
    case IdentityId::EQ10_RECURSION: run_eq10(check, n_max); break;
    case IdentityId::EQ11_POWER_SUM: run_eq11(check, n_max, *m_max); break;
    case IdentityId::EQ12_GF: run_eq12(check, n_max); break;
    case IdentityId::EQ13_GF: run_eq13(check, n_max); break;
    case IdentityId::EQ14_GF: run_eq14(check, n_max); break;
    case IdentityId::EQ15_GF: run_eq15(check, n_max); break;
    case IdentityId::EQ16_GF: run_eq16(check, n_max); break;
    case IdentityId::EQ18_UMBRAL_DEG: run_eq18(check, n_max); break;
    case IdentityId::EQ20_RECURSION_DEG: run_eq20(check, n_max); break;
    case IdentityId::EQ22_STIRLING_TRANSFORM: run_eq22(check, n_max); break;
    case IdentityId::EQ23_25_28_NUMBERS: run_eq23_25_28(check, n_max); break;
    case IdentityId::EQ26_27_ORDERED_BELL: run_eq26_27(check, n_max); break;
    case IdentityId::EQ30_FROBENIUS_FORM: run_eq30(check, n_max); break;
    case IdentityId::EQ31_BELL_FROBENIUS: run_eq31(check, n_max); break;
    case IdentityId::EQ41_Q_FORM: run_eq41(check, n_max); break;
    case IdentityId::EQ44_46_MOMENT: run_eq44_46(check, n_max); break;
    case IdentityId::LIMIT_LAMBDA_ZERO: run_limit_lambda_zero(check, n_max); break;
    case IdentityId::BRIDGE_A_EQUALS_H: run_bridge(check, n_max); break;
    case IdentityId::STIRLING_ORTHOGONALITY: run_orthogonality(check, n_max); break;
    case IdentityId::BRUTE_FORCE_EULERIAN: {
      const long clamped = std::min(n_max, 8L);
      report.n_max = clamped;
      run_bruteforce(check, clamped);
      break;
    }
  }
  report.elapsed = std::chrono::steady_clock::now() - start;
  report.counterexample = std::move(check.ce);
  report.pass = !report.counterexample.has_value();
  return report;
}

std::vector<IdentityReport> verify_all(long n_max, Session* session, Strategy strategy) {
  if (n_max < 0) throw NegativeIndex("verify_all wants n_max >= 0");
  Session local;
  Session& s = session ? *session : local;
  std::vector<IdentityReport> reports;
  reports.reserve(kIdentityCount);
  for (const auto& info : kRegistry) {
    const std::optional<long> m = info.needs_m ? std::optional<long>(6) : std::nullopt;
    reports.push_back(verify(info.id, n_max, m, &s, strategy));
  }
  return reports;
}

}  // namespace eulerian::catalog
