#include "hooklen/poly.hpp"

#include <algorithm>

namespace hooklen {

namespace {
const BigRat kZero{};
}

Poly::Poly(const BigRat& c) {
  if (!c.is_zero()) coeffs_.push_back(c);
}

Poly Poly::t() { return monomial(BigRat(1), 1); }

Poly Poly::monomial(BigRat c, int exponent) {
  Poly p;
  if (c.is_zero()) return p;
  p.coeffs_.assign(static_cast<size_t>(exponent) + 1, BigRat());
  p.coeffs_.back() = std::move(c);
  return p;
}

Poly Poly::from_coeffs(std::vector<BigRat> coeffs) {
  Poly p;
  p.coeffs_ = std::move(coeffs);
  p.trim();
  return p;
}

Poly Poly::linear(BigRat c1, BigRat c0) {
  return from_coeffs({std::move(c0), std::move(c1)});
}

const BigRat& Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZero;
  return coeffs_[static_cast<size_t>(i)];
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly r;
  r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (size_t i = 0; i < r.coeffs_.size(); ++i) {
    if (i < a.coeffs_.size()) r.coeffs_[i] += a.coeffs_[i];
    if (i < b.coeffs_.size()) r.coeffs_[i] += b.coeffs_[i];
  }
  r.trim();
  return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  Poly r;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, BigRat());
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j)
      r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  r.trim();  // leading product of nonzero coefficients cannot vanish over Q
  return r;
}

Poly Poly::scaled(const BigRat& s) const {
  if (s.is_zero()) return Poly();
  Poly r = *this;
  for (auto& c : r.coeffs_) c *= s;
  return r;
}

BigRat Poly::eval(const BigRat& x) const {
  BigRat acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::monic() const { return scaled(BigRat(1) / leading()); }

Poly pow(const Poly& base, unsigned e) {
  Poly r = BigRat(1);
  Poly b = base;
  while (e > 0) {
    if (e & 1u) r *= b;
    e >>= 1u;
    if (e > 0) b *= b;
  }
  return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw ZeroDivision("polynomial division by zero");
  Poly q, r = a;
  int db = b.degree();
  while (!r.is_zero() && r.degree() >= db) {
    int shift = r.degree() - db;
    BigRat c = r.leading() / b.leading();
    // r -= c * t^shift * b, dropping the cancelled leading term exactly.
    r.coeffs_.pop_back();
    for (int i = 0; i < db; ++i)
      r.coeffs_[static_cast<size_t>(i + shift)] -= c * b.coeffs_[static_cast<size_t>(i)];
    r.trim();
    if (q.coeffs_.size() < static_cast<size_t>(shift) + 1)
      q.coeffs_.resize(static_cast<size_t>(shift) + 1, BigRat());
    q.coeffs_[static_cast<size_t>(shift)] = std::move(c);
  }
  return {std::move(q), std::move(r)};
}

Poly Poly::exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::logic_error("exact_div with nonzero remainder");
  return q;
}

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero())
    throw ZeroDivision("gcd of two zero polynomials");
  Poly u = a, v = b;
  // Euclid over Q; remainders are made monic to keep coefficients small.
  while (!v.is_zero()) {
    Poly r = Poly::divmod(u, v).second;
    u = std::move(v);
    v = r.is_zero() ? Poly() : r.monic();
  }
  return u.monic();
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const BigRat& c = coeffs_[static_cast<size_t>(i)];
    if (c.is_zero()) continue;
    BigRat mag = abs(c);
    if (out.empty()) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    bool unit = mag.is_one();
    if (i == 0) {
      out += mag.str();
    } else {
      if (!unit) {
        out += mag.str();
        out += "*";
      }
      out += i == 1 ? "t" : "t^" + std::to_string(i);
    }
  }
  return out;
}

}  // namespace hooklen
