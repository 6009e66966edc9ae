#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hooklen/rational.hpp"

namespace hooklen {

// Dense univariate polynomial over BigRat in the indeterminate t.
// coeffs()[i] is the coefficient of t^i.  The coefficient vector is kept
// trimmed: its last entry is nonzero, and the zero polynomial stores an
// empty vector.
class Poly {
 public:
  // degree() of the zero polynomial, standing in for minus infinity.
  static constexpr int kZeroDegree = -1;

  Poly() = default;  // zero
  Poly(const BigRat& c);
  static Poly t();
  static Poly monomial(BigRat c, int exponent);
  static Poly from_coeffs(std::vector<BigRat> coeffs);
  // c1*t + c0
  static Poly linear(BigRat c1, BigRat c0);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
  const std::vector<BigRat>& coeffs() const { return coeffs_; }
  // Zero beyond the stored range.
  const BigRat& coeff(int i) const;
  const BigRat& leading() const { return coeffs_.back(); }  // pre: nonzero
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back().is_one(); }

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;
  Poly scaled(const BigRat& s) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  BigRat eval(const BigRat& x) const;
  Poly monic() const;  // pre: nonzero
  friend Poly pow(const Poly& base, unsigned e);

  // Euclidean division: a = q*b + r with deg r < deg b.  Throws
  // ZeroDivision when b is zero.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  // Quotient of an exact division; the remainder must be zero.
  static Poly exact_div(const Poly& a, const Poly& b);

  // Canonical expanded form, terms in decreasing degree, e.g.
  // "4/3*t^3 + 8*t^2 + 12*t".  The zero polynomial prints "0".
  std::string str() const;

 private:
  void trim();
  std::vector<BigRat> coeffs_;
};

// Monic greatest common divisor over the rationals.  Throws ZeroDivision
// when both inputs are zero.
Poly gcd(const Poly& a, const Poly& b);

}  // namespace hooklen
