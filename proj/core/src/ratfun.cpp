#include "eulerian/ratfun.hpp"

namespace eulerian {

RatFun::RatFun(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
  reduce();
}

void RatFun::reduce() {
  if (den_.is_zero()) throw ZeroDenominator("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = MPoly(1);
    return;
  }
  if (!den_.is_constant()) {
    const MPoly g = mpoly_gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = poly_div_exact(num_, g);
      den_ = poly_div_exact(den_, g);
    }
  }
  const Rational lc = den_.leading_coeff();
  if (!lc.is_one()) {
    const Rational inv = lc.inverse();
    num_ *= inv;
    den_ *= inv;
  }
}

const MPoly& RatFun::as_poly() const {
  if (!is_poly()) throw NonExactDivision("rational function is not polynomial");
  return num_;
}

RatFun RatFun::operator-() const {
  RatFun out = *this;
  out.num_ = -out.num_;
  return out;
}

RatFun& RatFun::operator+=(const RatFun& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
    reduce();
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  reduce();
  return *this;
}

RatFun& RatFun::operator-=(const RatFun& o) { return *this += -o; }

RatFun& RatFun::operator*=(const RatFun& o) {
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  reduce();
  return *this;
}

RatFun& RatFun::operator/=(const RatFun& o) {
  if (o.is_zero()) throw ZeroDenominator("rational function division by zero");
  num_ = num_ * o.den_;
  den_ = den_ * o.num_;
  reduce();
  return *this;
}

bool RatFun::cross_equal(const RatFun& a, const RatFun& b) {
  return a.num_ * b.den_ == b.num_ * a.den_;
}

RatFun RatFun::pow(long e) const {
  if (e < 0) return RatFun(den_, num_).pow(-e);
  RatFun out(1);
  for (long i = 0; i < e; ++i) out *= *this;
  return out;
}

RatFun RatFun::subst(Var v, const RatFun& value) const {
  return subst_ratfun(num_, v, value) / subst_ratfun(den_, v, value);
}

RatFun RatFun::subst(Var v, const Rational& value) const {
  return RatFun(num_.subst(v, value), den_.subst(v, value));
}

std::optional<Rational> RatFun::eval(const std::array<Rational, kVarCount>& point) const {
  const Rational d = den_.eval(point);
  if (d.is_zero()) return std::nullopt;
  return num_.eval(point) / d;
}

RatFun subst_ratfun(const MPoly& p, Var v, const RatFun& value) {
  if (!p.uses(v)) return RatFun(p);
  const std::uint32_t d = p.degree(v);
  // Horner in v keeps intermediate reductions small.
  RatFun out(p.coeff_of(v, d));
  for (std::uint32_t k = d; k-- > 0;) {
    out = out * value + RatFun(p.coeff_of(v, k));
  }
  return out;
}

}  // namespace eulerian
