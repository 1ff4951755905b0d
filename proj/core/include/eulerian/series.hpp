#pragma once

#include <vector>

#include "eulerian/ratfun.hpp"

namespace eulerian {

/// Truncated formal power series in one distinguished variable of the
/// universe; coefficients are rational functions that never mention the
/// main variable. Holds exactly order+1 coefficients.
class Series {
 public:
  Series(Var main, long order);

  static Series constant(Var main, const RatFun& c, long order);
  /// The series "v" (coefficient 1 at degree 1).
  static Series identity(Var main, long order);
  /// Distribute powers of the main variable of a polynomial into
  /// coefficient slots; powers beyond the order are truncated away.
  static Series from_mpoly(Var main, const MPoly& p, long order);

  Var main_var() const { return main_; }
  long order() const { return static_cast<long>(coeffs_.size()) - 1; }

  const RatFun& coeff(long j) const { return coeffs_.at(static_cast<std::size_t>(j)); }
  /// Validates that the coefficient is free of the main variable.
  void set_coeff(long j, RatFun c);

  Series truncated(long order) const;

  Series operator-() const;
  friend Series operator+(const Series& a, const Series& b);
  friend Series operator-(const Series& a, const Series& b);
  friend Series operator*(const Series& a, const RatFun& c);

  friend bool operator==(const Series& a, const Series& b) {
    return a.main_ == b.main_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

 private:
  Var main_;
  std::vector<RatFun> coeffs_;
};

/// Cauchy product, truncated to min(a.order, b.order).
Series series_mul(const Series& a, const Series& b);

/// Multiplicative inverse: series_mul(a, series_inv(a)) = 1 up to order.
Series series_inv(const Series& a);

/// exp(a) for series with zero constant term.
Series series_exp(const Series& a);

Series series_pow(const Series& a, unsigned long k);

/// log(1+v) = v - v²/2 + v³/3 - … truncated; log(1+λv) and friends are
/// obtained by rescaling the main variable.
Series series_log1p(Var main, long order);

/// (1+λv)^{α/λ} = Σ_m (α)_{m,λ} v^m/m! for α free of the main variable.
Series series_deg_pow(Var main, const MPoly& alpha, long order);

/// Substitute v ↦ s·v: coefficient j picks up a factor s^j.
Series series_scale_var(const Series& a, const RatFun& s);

}  // namespace eulerian
