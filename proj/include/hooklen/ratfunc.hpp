#pragma once

#include <string>
#include <string_view>

#include "hooklen/poly.hpp"

namespace hooklen {

// Rational function num/den over Q, kept in the unique canonical form:
// gcd(num, den) = 1 and den monic, with any scalar folded into num.
// Equality of canonical forms is therefore plain memberwise equality.
class RatFunc {
 public:
  RatFunc() : den_(BigRat(1)) {}  // zero, stored as 0/1
  RatFunc(const BigRat& c) : num_(c), den_(BigRat(1)) {}
  RatFunc(Poly p) : num_(std::move(p)), den_(BigRat(1)) {}
  static RatFunc one() { return RatFunc(BigRat(1)); }

  // Reduces to canonical form.  Throws ZeroDivision when den is zero.
  static RatFunc make(Poly num, Poly den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  // pre: is_polynomial() and degree 0 or zero
  BigRat constant_value() const;

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  // f^e for any integer e; pow(f, 0) = 1 for f != 0.  Throws ZeroDivision
  // for pow(0, e) with e <= 0.
  friend RatFunc pow(const RatFunc& f, long e);

  // Exact value at t = point; throws PoleError at a denominator root.
  BigRat eval(const BigRat& point) const;

  // "<numerator>" when the denominator is 1, otherwise
  // "(<numerator>) / (<denominator>)", both expanded canonically.
  std::string str() const;

  // Inverse of str(); accepts the full expression grammar (integers, t,
  // + - * /, ^ with non-negative integer exponents, parentheses).
  // Throws ParseError with a position on malformed input.
  static RatFunc parse(std::string_view text);

 private:
  struct canonical_t {};
  RatFunc(Poly num, Poly den, canonical_t)
      : num_(std::move(num)), den_(std::move(den)) {}
  Poly num_;
  Poly den_;
};

}  // namespace hooklen
