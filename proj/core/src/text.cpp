#include "eulerian/text.hpp"

#include <cctype>

namespace eulerian {

namespace {

std::string monomial_str(const ExpVec& e) {
  std::string out;
  for (Var v : kAllVars) {
    const auto k = e[var_index(v)];
    if (k == 0) continue;
    out += var_name(v);
    if (k > 1) {
      out += '^';
      out += std::to_string(k);
    }
  }
  return out;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace

std::string to_string(const Rational& r) { return r.str(); }

std::string to_string(const MPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    if (first) {
      if (c.sign() < 0) out += '-';
      first = false;
    } else {
      out += c.sign() < 0 ? '-' : '+';
    }
    const Rational mag = abs(c);
    const std::string mono = monomial_str(e);
    if (mono.empty()) {
      out += mag.str();
    } else if (mag.is_one()) {
      out += mono;
    } else if (mag.is_integer()) {
      out += mag.str() + mono;
    } else {
      out += mag.str() + "*" + mono;
    }
  }
  return out;
}

std::string to_string(const RatFun& f) {
  if (f.is_poly()) return to_string(f.num());
  return "(" + to_string(f.num()) + ")/(" + to_string(f.den()) + ")";
}

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool accept_word(std::string_view w) {
    skip_ws();
    if (s_.substr(pos_, w.size()) == w) {
      pos_ += w.size();
      return true;
    }
    return false;
  }
  bool at_digit() {
    skip_ws();
    return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
  }

  BigInt integer() {
    skip_ws();
    std::string digits;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      digits += s_[pos_++];
    }
    if (digits.empty()) fail("expected digits");
    return BigInt(digits);
  }

  Rational rational() {
    const BigInt n = integer();
    if (accept('/')) return Rational(n, integer());
    return Rational(n);
  }

  std::optional<Var> variable() {
    skip_ws();
    if (accept_word("lambda") || accept_word("\xce\xbb")) return Var::Lambda;
    for (Var v : {Var::X, Var::T, Var::U, Var::Q}) {
      if (accept_word(var_name(v))) return v;
    }
    return std::nullopt;
  }

  [[noreturn]] void fail(const std::string& why) {
    throw ParseError(why + " at offset " + std::to_string(pos_) + " in \"" +
                     std::string(s_) + "\"");
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

// monomial := (var ['^' digits])+
MPoly parse_monomial(Cursor& c) {
  ExpVec e{};
  bool any = false;
  while (auto v = c.variable()) {
    any = true;
    std::uint32_t k = 1;
    if (c.accept('^')) k = static_cast<std::uint32_t>(c.integer().get_ui());
    e[var_index(*v)] += k;
  }
  if (!any) c.fail("expected a variable");
  return MPoly::monomial(e, Rational(1));
}

// term := rational ['*'] [monomial] | monomial
MPoly parse_term(Cursor& c) {
  if (c.at_digit()) {
    const Rational r = c.rational();
    const bool star = c.accept('*');
    const char p = c.peek();
    const bool var_follows = p == 'x' || p == 't' || p == 'u' || p == 'q' || p == 'l' ||
                             static_cast<unsigned char>(p) == 0xce;
    if (star || var_follows) return parse_monomial(c) * r;
    return MPoly(r);
  }
  return parse_monomial(c);
}

MPoly parse_poly(Cursor& c) {
  MPoly out;
  int sign = 1;
  if (c.accept('-')) {
    sign = -1;
  } else {
    c.accept('+');
  }
  while (true) {
    out += parse_term(c) * Rational(sign);
    if (c.accept('+')) {
      sign = 1;
    } else if (c.accept('-')) {
      sign = -1;
    } else {
      break;
    }
  }
  return out;
}

}  // namespace

Rational parse_rational(std::string_view s) {
  Cursor c(s);
  int sign = 1;
  if (c.accept('-')) sign = -1;
  const Rational r = c.rational();
  if (!c.done()) c.fail("trailing input after rational");
  return r * Rational(sign);
}

MPoly parse_mpoly(std::string_view s) {
  Cursor c(s);
  const MPoly p = parse_poly(c);
  if (!c.done()) c.fail("trailing input after polynomial");
  return p;
}

RatFun parse_ratfun(std::string_view s) {
  Cursor c(s);
  if (c.peek() == '(') {
    c.expect('(');
    const MPoly num = parse_poly(c);
    c.expect(')');
    c.expect('/');
    c.expect('(');
    const MPoly den = parse_poly(c);
    c.expect(')');
    if (!c.done()) c.fail("trailing input after rational function");
    return RatFun(num, den);
  }
  const MPoly p = parse_poly(c);
  if (!c.done()) c.fail("trailing input after polynomial");
  return RatFun(p);
}

}  // namespace eulerian
