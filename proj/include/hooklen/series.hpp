#pragma once

#include <vector>

#include "hooklen/ratfunc.hpp"

namespace hooklen {

// Truncated formal power series in x, with coefficients that are exact
// rational functions of t.  Arithmetic on two series of order N yields
// order N; everything beyond x^N is discarded.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order) : coeffs_(static_cast<size_t>(order) + 1) {}
  static TruncatedSeries one(int order);
  static TruncatedSeries x(int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const RatFunc& coeff(int i) const { return coeffs_[static_cast<size_t>(i)]; }
  void set_coeff(int i, RatFunc v) { coeffs_[static_cast<size_t>(i)] = std::move(v); }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  TruncatedSeries scaled(const RatFunc& s) const;

  // exp of the series as sum_k a^k / k! truncated at the order.
  // Throws std::domain_error unless the constant term is zero.
  TruncatedSeries exp() const;

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  std::vector<RatFunc> coeffs_;  // coeffs_[i] multiplies x^i
};

// The tree function y(x): the unique series with constant term 1
// satisfying y = exp(x*y), computed by fixed-point iteration.  Its
// coefficients come out as (n+1)^(n-1)/n!.
TruncatedSeries tree_function(int order);

// The power y(x)^t: coefficient of x^n is the Abel-type polynomial
// t(n+t)^(n-1)/n!, with the n = 0 coefficient defined as 1.
TruncatedSeries tree_function_power(int order);

// Normalized Abel polynomial t(n+t)^(n-1)/n! (n = 0 gives 1).
RatFunc abel_coefficient(int n);
// Same with t doubled: 2t(n+2t)^(n-1)/n!.
RatFunc abel_coefficient_doubled(int n);

struct SeriesRow {
  int n = 0;
  RatFunc lhs;
  RatFunc rhs;
  bool pass = false;
};

// Squaring check: coefficients of tree_function_power(N)^2 against the
// doubled Abel coefficients, order by order.
std::vector<SeriesRow> square_rows(int order);
bool verify_square(int order);

// Convolution form of the same identity at a single n:
// 2t(n+2t)^(n-1)/n! = sum_{k=0}^{n} A_k A_{n-k} with A_j = t(j+t)^(j-1)/j!.
std::vector<SeriesRow> convolution_rows(int n_max);
bool verify_convolution(int n);

// tree_function coefficient check against (n+1)^(n-1)/n!; a row passes
// only if additionally the x^n coefficient of y - exp(x*y) vanishes.
std::vector<SeriesRow> tree_function_rows(int order);

}  // namespace hooklen
