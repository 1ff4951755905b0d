#include "eulerian/series.hpp"

#include <string>

namespace eulerian {

namespace {

void check_coeff_free_of_main(Var main, const RatFun& c) {
  if (c.uses(main)) {
    throw MainVariableInCoefficient("series coefficient mentions the main variable " +
                                    std::string(var_name(main)));
  }
}

void check_same_main(const Series& a, const Series& b) {
  if (a.main_var() != b.main_var()) {
    throw MixedMainVariable("series main variables differ: " +
                            std::string(var_name(a.main_var())) + " vs " +
                            std::string(var_name(b.main_var())));
  }
}

}  // namespace

Series::Series(Var main, long order) : main_(main) {
  if (order < 0) throw NegativeIndex("series order must be nonnegative");
  coeffs_.assign(static_cast<std::size_t>(order) + 1, RatFun());
}

Series Series::constant(Var main, const RatFun& c, long order) {
  Series s(main, order);
  s.set_coeff(0, c);
  return s;
}

Series Series::identity(Var main, long order) {
  Series s(main, order);
  if (order >= 1) s.set_coeff(1, RatFun(1));
  return s;
}

Series Series::from_mpoly(Var main, const MPoly& p, long order) {
  Series s(main, order);
  for (std::uint32_t k = 0; k <= p.degree(main); ++k) {
    if (k > static_cast<std::uint32_t>(order)) break;
    s.set_coeff(k, RatFun(p.coeff_of(main, k)));
  }
  return s;
}

void Series::set_coeff(long j, RatFun c) {
  check_coeff_free_of_main(main_, c);
  coeffs_.at(static_cast<std::size_t>(j)) = std::move(c);
}

Series Series::truncated(long order) const {
  Series s(main_, order);
  for (long j = 0; j <= std::min(order, this->order()); ++j) s.coeffs_[j] = coeffs_[j];
  return s;
}

Series Series::operator-() const {
  Series s = *this;
  for (auto& c : s.coeffs_) c = -c;
  return s;
}

Series operator+(const Series& a, const Series& b) {
  check_same_main(a, b);
  Series s(a.main_var(), std::min(a.order(), b.order()));
  for (long j = 0; j <= s.order(); ++j) s.coeffs_[j] = a.coeff(j) + b.coeff(j);
  return s;
}

Series operator-(const Series& a, const Series& b) { return a + (-b); }

Series operator*(const Series& a, const RatFun& c) {
  check_coeff_free_of_main(a.main_var(), c);
  Series s = a;
  for (auto& v : s.coeffs_) v *= c;
  return s;
}

Series series_mul(const Series& a, const Series& b) {
  check_same_main(a, b);
  Series s(a.main_var(), std::min(a.order(), b.order()));
  for (long j = 0; j <= s.order(); ++j) {
    RatFun acc;
    for (long i = 0; i <= j; ++i) acc += a.coeff(i) * b.coeff(j - i);
    s.set_coeff(j, acc);
  }
  return s;
}

Series series_inv(const Series& a) {
  if (a.coeff(0).is_zero()) {
    throw NonUnitConstantTerm("series inverse requires a nonzero constant term");
  }
  const RatFun inv0 = RatFun(1) / a.coeff(0);
  Series s(a.main_var(), a.order());
  s.set_coeff(0, inv0);
  for (long j = 1; j <= a.order(); ++j) {
    RatFun acc;
    for (long i = 1; i <= j; ++i) acc += a.coeff(i) * s.coeff(j - i);
    s.set_coeff(j, -(inv0 * acc));
  }
  return s;
}

Series series_exp(const Series& a) {
  if (!a.coeff(0).is_zero()) {
    throw NonzeroConstantTerm("series exponential requires a zero constant term");
  }
  // E' = a'·E  =>  n·E_n = Σ_{k=1..n} k·a_k·E_{n−k}
  Series s(a.main_var(), a.order());
  s.set_coeff(0, RatFun(1));
  for (long n = 1; n <= a.order(); ++n) {
    RatFun acc;
    for (long k = 1; k <= n; ++k) acc += a.coeff(k) * RatFun(Rational(k)) * s.coeff(n - k);
    s.set_coeff(n, acc * RatFun(Rational(1, n)));
  }
  return s;
}

Series series_pow(const Series& a, unsigned long k) {
  Series s = Series::constant(a.main_var(), RatFun(1), a.order());
  for (unsigned long i = 0; i < k; ++i) s = series_mul(s, a);
  return s;
}

Series series_log1p(Var main, long order) {
  Series s(main, order);
  for (long j = 1; j <= order; ++j) {
    s.set_coeff(j, RatFun(Rational(j % 2 == 1 ? 1 : -1, j)));
  }
  return s;
}

Series series_deg_pow(Var main, const MPoly& alpha, long order) {
  if (alpha.uses(main)) {
    throw MainVariableInCoefficient("degenerate power exponent mentions the main variable");
  }
  Series s(main, order);
  const MPoly lambda = MPoly::variable(Var::Lambda);
  MPoly fall(1);  // (α)_{m,λ}
  Rational mfact(1);
  for (long m = 0; m <= order; ++m) {
    if (m > 0) {
      fall = fall * (alpha - Rational(m - 1) * lambda);
      mfact *= Rational(m);
    }
    s.set_coeff(m, RatFun(fall * mfact.inverse()));
  }
  return s;
}

Series series_scale_var(const Series& a, const RatFun& s) {
  Series out(a.main_var(), a.order());
  RatFun p(1);
  for (long j = 0; j <= a.order(); ++j) {
    out.set_coeff(j, a.coeff(j) * p);
    p *= s;
  }
  return out;
}

}  // namespace eulerian
