#pragma once

#include "eulerian/mpoly.hpp"

namespace eulerian {

/// Reduced quotient of two polynomials. Invariants after construction:
/// den != 0, gcd(num, den) = 1, and den has graded-lex leading
/// coefficient 1 — so operator== is canonical equality, and it agrees
/// with the cross-multiplication test.
class RatFun {
 public:
  RatFun() : num_(), den_(1) {}
  RatFun(long c) : num_(c), den_(1) {}             // NOLINT
  RatFun(const Rational& c) : num_(c), den_(1) {}  // NOLINT
  RatFun(const MPoly& p) : num_(p), den_(1) {}     // NOLINT
  RatFun(MPoly num, MPoly den);

  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_poly() const { return den_ == MPoly(1); }
  /// The underlying polynomial; throws NonExactDivision when den != 1.
  const MPoly& as_poly() const;

  RatFun operator-() const;
  RatFun& operator+=(const RatFun& o);
  RatFun& operator-=(const RatFun& o);
  RatFun& operator*=(const RatFun& o);
  RatFun& operator/=(const RatFun& o);

  friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
  friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
  friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
  friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }

  friend bool operator==(const RatFun& a, const RatFun& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

  /// a/b = c/d iff a·d = c·b; must agree with reduce-then-compare.
  static bool cross_equal(const RatFun& a, const RatFun& b);

  bool uses(Var v) const { return num_.uses(v) || den_.uses(v); }

  RatFun pow(long e) const;
  RatFun subst(Var v, const RatFun& value) const;
  RatFun subst(Var v, const Rational& value) const;
  /// Evaluation at a rational point; nullopt when the denominator vanishes.
  std::optional<Rational> eval(const std::array<Rational, kVarCount>& point) const;

 private:
  void reduce();
  MPoly num_, den_;
};

/// Substitute v by a rational function inside a polynomial.
RatFun subst_ratfun(const MPoly& p, Var v, const RatFun& value);

}  // namespace eulerian
