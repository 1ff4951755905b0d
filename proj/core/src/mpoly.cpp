#include "eulerian/mpoly.hpp"

#include <stdexcept>
#include <utility>

namespace eulerian {

MPoly MPoly::variable(Var v) {
  ExpVec e{};
  e[var_index(v)] = 1;
  return monomial(e, Rational(1));
}

MPoly MPoly::monomial(const ExpVec& e, const Rational& c) {
  MPoly p;
  if (!c.is_zero()) p.terms_.emplace(e, c);
  return p;
}

bool MPoly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first == ExpVec{};
}

Rational MPoly::constant_term() const {
  auto it = terms_.find(ExpVec{});
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational MPoly::constant_value() const {
  if (!is_constant()) throw std::logic_error("constant_value on non-constant polynomial");
  return constant_term();
}

bool MPoly::uses(Var v) const {
  const std::size_t i = var_index(v);
  for (const auto& [e, c] : terms_) {
    if (e[i] > 0) return true;
  }
  return false;
}

std::uint32_t MPoly::degree(Var v) const {
  const std::size_t i = var_index(v);
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
  return d;
}

std::uint64_t MPoly::total_deg() const {
  return terms_.empty() ? 0 : total_degree(terms_.rbegin()->first);
}

Rational MPoly::coeff(const ExpVec& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

MPoly MPoly::coeff_of(Var v, std::uint32_t k) const {
  const std::size_t i = var_index(v);
  MPoly out;
  for (const auto& [e, c] : terms_) {
    if (e[i] != k) continue;
    ExpVec r = e;
    r[i] = 0;
    out.add_term(r, c);
  }
  return out;
}

Rational MPoly::leading_coeff() const {
  return terms_.empty() ? Rational(0) : terms_.rbegin()->second;
}

ExpVec MPoly::leading_exponent() const {
  return terms_.empty() ? ExpVec{} : terms_.rbegin()->first;
}

void MPoly::add_term(const ExpVec& e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MPoly MPoly::operator-() const {
  MPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MPoly& MPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly out;
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      ExpVec e;
      for (std::size_t i = 0; i < kVarCount; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MPoly MPoly::pow(unsigned long e) const {
  MPoly out(1);
  for (unsigned long i = 0; i < e; ++i) out *= *this;
  return out;
}

MPoly MPoly::subst(Var v, const Rational& value) const {
  const std::size_t i = var_index(v);
  MPoly out;
  for (const auto& [e, c] : terms_) {
    ExpVec r = e;
    r[i] = 0;
    out.add_term(r, c * value.pow(e[i]));
  }
  return out;
}

MPoly MPoly::subst(Var v, const MPoly& value) const {
  const std::size_t i = var_index(v);
  std::vector<MPoly> powers{MPoly(1)};
  MPoly out;
  for (const auto& [e, c] : terms_) {
    while (powers.size() <= e[i]) powers.push_back(powers.back() * value);
    ExpVec r = e;
    r[i] = 0;
    out += MPoly::monomial(r, c) * powers[e[i]];
  }
  return out;
}

Rational MPoly::eval(const std::array<Rational, kVarCount>& point) const {
  Rational out(0);
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < kVarCount; ++i) {
      if (e[i] > 0) term *= point[i].pow(e[i]);
    }
    out += term;
  }
  return out;
}

Rational MPoly::content() const {
  BigInt gnum(0), lden(1);
  for (const auto& [e, c] : terms_) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), gnum.get_mpz_t(), c.num().get_mpz_t());
    gnum = g;
    BigInt l;
    mpz_lcm(l.get_mpz_t(), lden.get_mpz_t(), c.den().get_mpz_t());
    lden = l;
  }
  return Rational(gnum, lden);
}

MPoly MPoly::primitive_integer_form() const {
  if (is_zero()) return MPoly();
  Rational c = content();
  if (leading_coeff().sign() < 0) c = -c;
  MPoly out = *this;
  out *= c.inverse();
  return out;
}

std::optional<MPoly> try_divide(const MPoly& a, const MPoly& b) {
  if (b.is_zero()) throw ZeroDenominator("polynomial division by zero");
  MPoly q;
  MPoly r = a;
  const ExpVec be = b.leading_exponent();
  const Rational bc = b.leading_coeff();
  while (!r.is_zero()) {
    const ExpVec re = r.leading_exponent();
    ExpVec qe;
    for (std::size_t i = 0; i < kVarCount; ++i) {
      if (re[i] < be[i]) return std::nullopt;
      qe[i] = re[i] - be[i];
    }
    MPoly term = MPoly::monomial(qe, r.leading_coeff() / bc);
    q += term;
    r -= term * b;
  }
  return q;
}

MPoly poly_div_exact(const MPoly& a, const MPoly& b) {
  auto q = try_divide(a, b);
  if (!q) throw NonExactDivision("polynomial division leaves a remainder");
  return *q;
}

namespace {

// Coefficients of p viewed as univariate in v.
std::vector<MPoly> univariate_in(const MPoly& p, Var v) {
  std::vector<MPoly> out(p.degree(v) + 1);
  const std::size_t i = var_index(v);
  for (const auto& [e, c] : p.terms()) {
    ExpVec r = e;
    r[i] = 0;
    out[e[i]].add_term(r, c);
  }
  return out;
}

// gcd of the v-coefficients; divides p exactly and is v-free.
MPoly content_in(const MPoly& p, Var v) {
  MPoly c;
  for (const auto& part : univariate_in(p, v)) {
    if (!part.is_zero()) c = mpoly_gcd(c, part);
    if (c == MPoly(1)) break;
  }
  return c;
}

// Pseudo-remainder of a by b in v, up to v-free factors (which the
// primitive PRS strips anyway).
MPoly pseudo_rem(MPoly a, const MPoly& b, Var v) {
  const std::uint32_t db = b.degree(v);
  const MPoly blead = b.coeff_of(v, db);
  while (!a.is_zero() && a.degree(v) >= db) {
    const std::uint32_t da = a.degree(v);
    const MPoly alead = a.coeff_of(v, da);
    ExpVec shift{};
    shift[var_index(v)] = da - db;
    a = blead * a - MPoly::monomial(shift, Rational(1)) * alead * b;
  }
  return a;
}

std::optional<Var> first_var_used(const MPoly& a, const MPoly& b) {
  for (Var v : kAllVars) {
    if (a.uses(v) || b.uses(v)) return v;
  }
  return std::nullopt;
}

}  // namespace

MPoly mpoly_gcd(const MPoly& a, const MPoly& b) {
  if (a.is_zero()) return b.primitive_integer_form();
  if (b.is_zero()) return a.primitive_integer_form();
  if (a.is_constant() || b.is_constant()) return MPoly(1);

  const Var v = *first_var_used(a, b);
  if (!a.uses(v)) return mpoly_gcd(a, content_in(b, v));
  if (!b.uses(v)) return mpoly_gcd(content_in(a, v), b);

  const MPoly ca = content_in(a, v);
  const MPoly cb = content_in(b, v);
  const MPoly c = mpoly_gcd(ca, cb);
  MPoly pa = poly_div_exact(a, ca);
  MPoly pb = poly_div_exact(b, cb);
  if (pa.degree(v) < pb.degree(v)) std::swap(pa, pb);
  while (!pb.is_zero()) {
    MPoly r = pseudo_rem(pa, pb, v);
    pa = std::move(pb);
    pb = r.is_zero() ? std::move(r) : poly_div_exact(r, content_in(r, v));
  }
  pa = poly_div_exact(pa, content_in(pa, v));
  return (c * pa).primitive_integer_form();
}

}  // namespace eulerian
