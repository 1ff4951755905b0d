#include "eulerian/rational.hpp"

namespace eulerian {

Rational Rational::pow(unsigned long e) const {
  BigInt n, d;
  mpz_pow_ui(n.get_mpz_t(), num().get_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), den().get_mpz_t(), e);
  return Rational(n, d);
}

std::string Rational::str() const {
  if (is_integer()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt int_pow(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

}  // namespace eulerian
