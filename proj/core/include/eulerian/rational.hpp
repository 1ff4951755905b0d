#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>

#include "eulerian/errors.hpp"

namespace eulerian {

using BigInt = mpz_class;

/// Exact arbitrary-precision rational. Always stored reduced with a
/// positive denominator, so structural equality is value equality.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}            // NOLINT(google-explicit-constructor)
  Rational(const BigInt& n) : v_(n) {}   // NOLINT(google-explicit-constructor)
  Rational(long n, long d) : Rational(BigInt(n), BigInt(d)) {}
  Rational(const BigInt& n, const BigInt& d) : v_(n, d) {
    if (sgn(d) == 0) throw ZeroDenominator("rational with zero denominator");
    v_.canonicalize();
  }

  BigInt num() const { return v_.get_num(); }
  BigInt den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw ZeroDenominator("rational division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

  Rational inverse() const {
    if (is_zero()) throw ZeroDenominator("inverse of zero");
    return Rational(den(), num());
  }

  Rational pow(unsigned long e) const;

  /// Lossless rendering: "p/q", or plain "p" for integers.
  std::string str() const;

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

BigInt binomial(unsigned long n, unsigned long k);
BigInt factorial(unsigned long n);
BigInt int_pow(const BigInt& base, unsigned long e);

}  // namespace eulerian
