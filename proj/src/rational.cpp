#include "hooklen/rational.hpp"

namespace hooklen {

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigInt int_pow(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

BigRat::BigRat(BigInt num, BigInt den) {
  if (sgn(den) == 0) throw ZeroDivision("rational with zero denominator");
  v_ = mpq_class(std::move(num), std::move(den));
  v_.canonicalize();
}

BigRat BigRat::parse(const std::string& text) {
  mpq_class v;
  if (v.set_str(text, 10) != 0) throw ParseError("invalid rational literal", 0);
  if (sgn(v.get_den()) == 0) throw ZeroDivision("rational with zero denominator");
  v.canonicalize();
  return BigRat(std::move(v));
}

BigRat pow(const BigRat& base, long e) {
  if (e == 0) return BigRat(1);
  bool invert = e < 0;
  if (invert && base.is_zero())
    throw ZeroDivision("pow of zero with negative exponent");
  unsigned long k = invert ? static_cast<unsigned long>(-(e + 1)) + 1
                           : static_cast<unsigned long>(e);
  BigInt n = int_pow(base.num(), k);
  BigInt d = int_pow(base.den(), k);
  return invert ? BigRat(std::move(d), std::move(n))
                : BigRat(std::move(n), std::move(d));
}

}  // namespace hooklen
