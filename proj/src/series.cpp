#include "hooklen/series.hpp"

#include <stdexcept>

namespace hooklen {

TruncatedSeries TruncatedSeries::one(int order) {
  TruncatedSeries s(order);
  s.set_coeff(0, RatFunc::one());
  return s;
}

TruncatedSeries TruncatedSeries::x(int order) {
  TruncatedSeries s(order);
  if (order >= 1) s.set_coeff(1, RatFunc::one());
  return s;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order() != b.order()) throw std::invalid_argument("series order mismatch");
  TruncatedSeries r(a.order());
  for (int i = 0; i <= a.order(); ++i) r.set_coeff(i, a.coeff(i) + b.coeff(i));
  return r;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order() != b.order()) throw std::invalid_argument("series order mismatch");
  TruncatedSeries r(a.order());
  for (int i = 0; i <= a.order(); ++i) {
    if (a.coeff(i).is_zero()) continue;
    for (int j = 0; i + j <= a.order(); ++j) {
      if (b.coeff(j).is_zero()) continue;
      r.coeffs_[static_cast<size_t>(i + j)] += a.coeff(i) * b.coeff(j);
    }
  }
  return r;
}

TruncatedSeries TruncatedSeries::scaled(const RatFunc& s) const {
  TruncatedSeries r(order());
  for (int i = 0; i <= order(); ++i) r.set_coeff(i, coeff(i) * s);
  return r;
}

TruncatedSeries TruncatedSeries::exp() const {
  if (!coeff(0).is_zero())
    throw std::domain_error("series exp requires a zero constant term");
  TruncatedSeries acc = one(order());
  TruncatedSeries power = one(order());
  BigRat kfact(1);
  // a^k contributes nothing below x^k, so k stops at the order.
  for (int k = 1; k <= order(); ++k) {
    power = power * *this;
    kfact *= BigRat(k);
    acc = acc + power.scaled(RatFunc(BigRat(1) / kfact));
  }
  return acc;
}

TruncatedSeries tree_function(int order) {
  TruncatedSeries y = TruncatedSeries::one(order);
  const TruncatedSeries x = TruncatedSeries::x(order);
  // Each round fixes one more coefficient; order+1 rounds suffice.
  for (int round = 0; round <= order; ++round) y = (x * y).exp();
  return y;
}

RatFunc abel_coefficient(int n) {
  if (n == 0) return RatFunc::one();  // the t*(0+t)^(-1) convention
  Poly p = Poly::t() * pow(Poly::linear(BigRat(1), BigRat(n)), static_cast<unsigned>(n - 1));
  return RatFunc(p.scaled(BigRat(BigInt(1), factorial(static_cast<unsigned long>(n)))));
}

RatFunc abel_coefficient_doubled(int n) {
  if (n == 0) return RatFunc::one();
  Poly p = Poly::t().scaled(BigRat(2)) *
           pow(Poly::linear(BigRat(2), BigRat(n)), static_cast<unsigned>(n - 1));
  return RatFunc(p.scaled(BigRat(BigInt(1), factorial(static_cast<unsigned long>(n)))));
}

TruncatedSeries tree_function_power(int order) {
  TruncatedSeries s(order);
  for (int n = 0; n <= order; ++n) s.set_coeff(n, abel_coefficient(n));
  return s;
}

std::vector<SeriesRow> square_rows(int order) {
  TruncatedSeries lhs = tree_function_power(order);
  TruncatedSeries sq = lhs * lhs;
  std::vector<SeriesRow> rows;
  for (int n = 0; n <= order; ++n) {
    SeriesRow row;
    row.n = n;
    row.lhs = sq.coeff(n);
    row.rhs = abel_coefficient_doubled(n);
    row.pass = row.lhs == row.rhs;
    rows.push_back(std::move(row));
  }
  return rows;
}

bool verify_square(int order) {
  for (const SeriesRow& r : square_rows(order))
    if (!r.pass) return false;
  return true;
}

std::vector<SeriesRow> convolution_rows(int n_max) {
  std::vector<SeriesRow> rows;
  for (int n = 0; n <= n_max; ++n) {
    SeriesRow row;
    row.n = n;
    RatFunc sum;
    for (int k = 0; k <= n; ++k) sum += abel_coefficient(k) * abel_coefficient(n - k);
    row.lhs = abel_coefficient_doubled(n);
    row.rhs = std::move(sum);
    row.pass = row.lhs == row.rhs;
    rows.push_back(std::move(row));
  }
  return rows;
}

bool verify_convolution(int n) {
  std::vector<SeriesRow> rows = convolution_rows(n);
  return rows.back().pass;
}

std::vector<SeriesRow> tree_function_rows(int order) {
  TruncatedSeries y = tree_function(order);
  // Residual y - exp(x*y); identically zero through the order when y is
  // the genuine fixed point.
  TruncatedSeries residual = y + (TruncatedSeries::x(order) * y).exp().scaled(RatFunc(BigRat(-1)));
  std::vector<SeriesRow> rows;
  for (int n = 0; n <= order; ++n) {
    SeriesRow row;
    row.n = n;
    row.lhs = y.coeff(n);
    row.rhs = RatFunc(BigRat(int_pow(BigInt(n + 1), static_cast<unsigned long>(n == 0 ? 0 : n - 1)),
                             factorial(static_cast<unsigned long>(n))));
    row.pass = row.lhs == row.rhs && residual.coeff(n).is_zero();
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace hooklen
