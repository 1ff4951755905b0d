#pragma once

#include <map>
#include <optional>

#include "eulerian/rational.hpp"
#include "eulerian/variables.hpp"

namespace eulerian {

/// Sparse multivariate polynomial over Rational in the fixed universe
/// (x, t, λ, u, q). Stored terms never carry a zero coefficient and the
/// zero polynomial is the empty map, so operator== is canonical equality.
class MPoly {
 public:
  using TermMap = std::map<ExpVec, Rational, GrlexLess>;

  MPoly() = default;
  MPoly(long c) : MPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  MPoly(const Rational& c) {             // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) terms_.emplace(ExpVec{}, c);
  }

  static MPoly variable(Var v);
  static MPoly monomial(const ExpVec& e, const Rational& c);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (coefficient of the empty monomial).
  Rational constant_term() const;
  /// Value of a constant polynomial; throws std::logic_error otherwise.
  Rational constant_value() const;

  bool uses(Var v) const;
  std::uint32_t degree(Var v) const;
  std::uint64_t total_deg() const;  // 0 for the zero polynomial

  Rational coeff(const ExpVec& e) const;
  /// Coefficient of v^k, as a polynomial free of v.
  MPoly coeff_of(Var v, std::uint32_t k) const;

  /// Largest term under graded-lex order. Zero polynomial: coefficient 0.
  Rational leading_coeff() const;
  ExpVec leading_exponent() const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o) { *this = *this * o; return *this; }
  MPoly& operator*=(const Rational& c);

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Rational& c) { return a *= c; }
  friend MPoly operator*(const Rational& c, MPoly a) { return a *= c; }

  friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  MPoly pow(unsigned long e) const;

  MPoly subst(Var v, const Rational& value) const;
  MPoly subst(Var v, const MPoly& value) const;
  Rational eval(const std::array<Rational, kVarCount>& point) const;

  /// Rational gcd of all coefficients (nonnegative; 0 for the zero poly).
  Rational content() const;
  /// Scalar multiple with coprime integer coefficients and positive
  /// graded-lex leading coefficient; canonical up to nothing (unique).
  MPoly primitive_integer_form() const;

  void add_term(const ExpVec& e, const Rational& c);

 private:
  TermMap terms_;
};

/// Exact quotient a/b when it exists.
std::optional<MPoly> try_divide(const MPoly& a, const MPoly& b);

/// Exact quotient; throws NonExactDivision if any remainder survives.
/// The quotient of an exact division is unique, independent of the
/// variable the division is organized around.
MPoly poly_div_exact(const MPoly& a, const MPoly& b);

/// Polynomial gcd over the rationals, returned in primitive integer form
/// (gcd of constants is 1; gcd with zero is the other argument).
MPoly mpoly_gcd(const MPoly& a, const MPoly& b);

}  // namespace eulerian
