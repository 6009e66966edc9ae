#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>

#include "hooklen/errors.hpp"

namespace hooklen {

using BigInt = mpz_class;

BigInt factorial(unsigned long n);
BigInt binomial(unsigned long n, unsigned long k);
// base^e for a non-negative integer exponent.
BigInt int_pow(const BigInt& base, unsigned long e);

// Arbitrary-precision rational.  Always stored reduced with a positive
// denominator; zero is 0/1.
class BigRat {
 public:
  BigRat() : v_(0) {}
  BigRat(long n) : v_(n) {}
  BigRat(long num, long den) : BigRat(BigInt(num), BigInt(den)) {}
  explicit BigRat(BigInt n) : v_(std::move(n)) {}
  BigRat(BigInt num, BigInt den);

  // Accepts the canonical textual form "p" or "p/q".
  static BigRat parse(const std::string& text);

  const BigInt& num() const { return v_.get_num(); }
  const BigInt& den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  // "p/q", with "/q" omitted when the denominator is 1.
  std::string str() const { return v_.get_str(); }

  friend BigRat operator+(const BigRat& a, const BigRat& b) { return BigRat(a.v_ + b.v_); }
  friend BigRat operator-(const BigRat& a, const BigRat& b) { return BigRat(a.v_ - b.v_); }
  friend BigRat operator*(const BigRat& a, const BigRat& b) { return BigRat(a.v_ * b.v_); }
  friend BigRat operator/(const BigRat& a, const BigRat& b) {
    if (b.is_zero()) throw ZeroDivision("rational division by zero");
    return BigRat(mpq_class(a.v_ / b.v_));
  }
  BigRat operator-() const { return BigRat(mpq_class(-v_)); }

  BigRat& operator+=(const BigRat& o) { v_ += o.v_; return *this; }
  BigRat& operator-=(const BigRat& o) { v_ -= o.v_; return *this; }
  BigRat& operator*=(const BigRat& o) { v_ *= o.v_; return *this; }
  BigRat& operator/=(const BigRat& o) { return *this = *this / o; }

  friend bool operator==(const BigRat& a, const BigRat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const BigRat& a, const BigRat& b) { return a.v_ != b.v_; }
  friend bool operator<(const BigRat& a, const BigRat& b) { return a.v_ < b.v_; }
  friend bool operator>(const BigRat& a, const BigRat& b) { return a.v_ > b.v_; }
  friend bool operator<=(const BigRat& a, const BigRat& b) { return a.v_ <= b.v_; }
  friend bool operator>=(const BigRat& a, const BigRat& b) { return a.v_ >= b.v_; }

  // base^e; a negative exponent requires a nonzero base.
  friend BigRat pow(const BigRat& base, long e);
  friend BigRat abs(const BigRat& a) { return BigRat(mpq_class(::abs(a.v_))); }

 private:
  explicit BigRat(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

}  // namespace hooklen
