#include "hooklen/ratfunc.hpp"

namespace hooklen {

RatFunc RatFunc::make(Poly num, Poly den) {
  if (den.is_zero()) throw ZeroDivision("rational function with zero denominator");
  if (num.is_zero()) return RatFunc();
  Poly g = gcd(num, den);
  if (!g.is_one()) {
    num = Poly::exact_div(num, g);
    den = Poly::exact_div(den, g);
  }
  if (!den.is_monic()) {
    BigRat lead = den.leading();
    den = den.scaled(BigRat(1) / lead);
    num = num.scaled(BigRat(1) / lead);
  }
  return RatFunc(std::move(num), std::move(den), canonical_t{});
}

BigRat RatFunc::constant_value() const {
  if (!is_polynomial() || num_.degree() > 0)
    throw std::logic_error("constant_value of a non-constant rational function");
  return num_.coeff(0);
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.den_.is_one() && b.den_.is_one()) return RatFunc(a.num_ + b.num_);
  // Classical common-denominator form through gcd(den_a, den_b); the
  // result needs one more reduction since the numerators may share a
  // factor with the combined denominator.
  Poly g = gcd(a.den_, b.den_);
  Poly bq = g.is_one() ? b.den_ : Poly::exact_div(b.den_, g);
  Poly aq = g.is_one() ? a.den_ : Poly::exact_div(a.den_, g);
  return RatFunc::make(a.num_ * bq + b.num_ * aq, a.den_ * bq);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc RatFunc::operator-() const {
  return RatFunc(-num_, den_, canonical_t{});
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc();
  if (a.den_.is_one() && b.den_.is_one()) return RatFunc(a.num_ * b.num_);
  // Cross-cancel before multiplying; with canonical inputs the result is
  // already reduced, and the denominator stays monic.
  Poly g1 = gcd(a.num_, b.den_);
  Poly g2 = gcd(b.num_, a.den_);
  Poly num = (g1.is_one() ? a.num_ : Poly::exact_div(a.num_, g1)) *
             (g2.is_one() ? b.num_ : Poly::exact_div(b.num_, g2));
  Poly den = (g2.is_one() ? a.den_ : Poly::exact_div(a.den_, g2)) *
             (g1.is_one() ? b.den_ : Poly::exact_div(b.den_, g1));
  if (den.is_one()) return RatFunc(std::move(num));
  return RatFunc(std::move(num), std::move(den), RatFunc::canonical_t{});
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw ZeroDivision("rational function division by zero");
  if (a.is_zero()) return RatFunc();
  return RatFunc::make(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc pow(const RatFunc& f, long e) {
  if (f.is_zero()) {
    if (e <= 0) throw ZeroDivision("pow of zero with non-positive exponent");
    return RatFunc();
  }
  if (e == 0) return RatFunc::one();
  bool invert = e < 0;
  unsigned k = invert ? static_cast<unsigned>(-(e + 1)) + 1u
                      : static_cast<unsigned>(e);
  Poly n = pow(f.num(), k);
  Poly d = pow(f.den(), k);
  // Powers of a reduced fraction stay reduced; only re-normalize the sign
  // and scale via make when inverting.
  if (invert) return RatFunc::make(std::move(d), std::move(n));
  if (d.is_one()) return RatFunc(std::move(n));
  return RatFunc(std::move(n), std::move(d), RatFunc::canonical_t{});
}

BigRat RatFunc::eval(const BigRat& point) const {
  BigRat d = den_.eval(point);
  if (d.is_zero())
    throw PoleError("pole at t = " + point.str());
  return num_.eval(point) / d;
}

std::string RatFunc::str() const {
  if (den_.is_one()) return num_.str();
  return "(" + num_.str() + ") / (" + den_.str() + ")";
}

}  // namespace hooklen
