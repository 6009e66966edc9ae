#include "hooklen/engine.hpp"

#include <chrono>

namespace hooklen {

const char* method_name(Method m) {
  switch (m) {
    case Method::Brute: return "brute";
    case Method::Recurrence: return "recurrence";
    case Method::Both: return "both";
  }
  return "?";
}

std::optional<Method> method_from_name(std::string_view name) {
  if (name == "brute") return Method::Brute;
  if (name == "recurrence") return Method::Recurrence;
  if (name == "both") return Method::Both;
  return std::nullopt;
}

RatFunc rhs_value(Identity id, int n) {
  if (n < 1) throw std::invalid_argument("rhs_value requires n >= 1");
  unsigned long un = static_cast<unsigned long>(n);
  switch (id) {
    case Identity::Postnikov:
      // 2^n (n+1)^(n-1) / n!
      return RatFunc(BigRat(int_pow(BigInt(2), un) * int_pow(BigInt(n + 1), un - 1),
                            factorial(un)));
    case Identity::Lascoux: {
      // (1/(n+1)!) * prod_{k=0}^{n-1} ((n+1+k) t + n+1-k)
      Poly prod = BigRat(1);
      for (int k = 0; k < n; ++k)
        prod *= Poly::linear(BigRat(n + 1 + k), BigRat(n + 1 - k));
      return RatFunc(prod.scaled(BigRat(BigInt(1), factorial(un + 1))));
    }
    case Identity::Han:
      // (2^n/n!) t (t+n)^(n-1)
      return RatFunc(
          (Poly::t() * pow(Poly::linear(BigRat(1), BigRat(n)), static_cast<unsigned>(n - 1)))
              .scaled(BigRat(int_pow(BigInt(2), un), factorial(un))));
    case Identity::Half:
    case Identity::Ternary:
    case Identity::Forest:
      // (2n+1)^(n-1) / n!
      return RatFunc(BigRat(int_pow(BigInt(2 * n + 1), un - 1), factorial(un)));
  }
  throw std::logic_error("unknown identity");
}

RatFunc Engine::sum_brute(Family family, int n, const HookWeight& w) const {
  check_cap(family, n, caps_.of(family));
  return brute_sum_parallel(family, n, w);
}

Engine::Tables& Engine::grow_tables(Family family, const HookWeight& w, int up_to) {
  Tables& tab = rec_[{family, w.id()}];
  if (tab.main.empty()) tab.main.push_back(RatFunc::one());
  switch (family) {
    case Family::Binary:
      while (static_cast<int>(tab.main.size()) <= up_to) {
        int n = static_cast<int>(tab.main.size());
        RatFunc conv;
        for (int k = 0; k <= n - 1; ++k) conv += tab.main[k] * tab.main[n - 1 - k];
        tab.main.push_back(w(n) * conv);
      }
      break;
    case Family::Ternary:
      // aux[m] = sum_{a+b=m} A(a) A(b), so each level's triple sum
      // sum_{a+b+c=n-1} A(a)A(b)A(c) costs one extra convolution.
      if (tab.aux.empty()) tab.aux.push_back(RatFunc::one());
      while (static_cast<int>(tab.main.size()) <= up_to) {
        int n = static_cast<int>(tab.main.size());
        while (static_cast<int>(tab.aux.size()) <= n - 1) {
          int m = static_cast<int>(tab.aux.size());
          RatFunc pair_conv;
          for (int a = 0; a <= m; ++a) pair_conv += tab.main[a] * tab.main[m - a];
          tab.aux.push_back(pair_conv);
        }
        RatFunc conv;
        for (int a = 0; a <= n - 1; ++a) conv += tab.main[a] * tab.aux[n - 1 - a];
        tab.main.push_back(w(n) * conv);
      }
      break;
    case Family::Forest:
      // aux[m] = Tr(m) = w(m) F(m-1), the single-tree values.
      if (tab.aux.empty()) tab.aux.push_back(RatFunc());  // Tr(0) unused
      while (static_cast<int>(tab.main.size()) <= up_to) {
        int n = static_cast<int>(tab.main.size());
        tab.aux.push_back(w(n) * tab.main[n - 1]);
        RatFunc conv;
        for (int m = 1; m <= n; ++m) conv += tab.aux[m] * tab.main[n - m];
        tab.main.push_back(conv);
      }
      break;
  }
  return tab;
}

RatFunc Engine::sum_binary_rec(int n, const HookWeight& w) {
  std::lock_guard lock(mu_);
  return grow_tables(Family::Binary, w, n).main[n];
}

RatFunc Engine::sum_ternary_rec(int n, const HookWeight& w) {
  std::lock_guard lock(mu_);
  return grow_tables(Family::Ternary, w, n).main[n];
}

RatFunc Engine::sum_forest_rec(int n, const HookWeight& w) {
  std::lock_guard lock(mu_);
  return grow_tables(Family::Forest, w, n).main[n];
}

RatFunc Engine::sum_rec(Family family, int n, const HookWeight& w) {
  switch (family) {
    case Family::Binary: return sum_binary_rec(n, w);
    case Family::Ternary: return sum_ternary_rec(n, w);
    case Family::Forest: return sum_forest_rec(n, w);
  }
  throw std::logic_error("unknown family");
}

const HookWeight& Engine::weight(Identity id) {
  std::lock_guard lock(mu_);
  return weights_.try_emplace(id, id).first->second;
}

VerificationReport Engine::verify(Identity id, int n, Method method) {
  using clock = std::chrono::steady_clock;
  auto ms_since = [](clock::time_point start) {
    return std::chrono::duration<double, std::milli>(clock::now() - start).count();
  };

  VerificationReport rep;
  rep.id = id;
  rep.n = n;
  rep.method = method;
  Family family = identity_family(id);
  const HookWeight& w = weight(id);

  rep.rhs = rhs_value(id, n);

  // The recurrence side is always computed; brute force joins in on
  // request (it is the expensive, cap-limited route).
  auto t0 = clock::now();
  rep.lhs_rec = sum_rec(family, n, w);
  rep.ms_rec = ms_since(t0);

  if (method != Method::Recurrence) {
    t0 = clock::now();
    rep.lhs_brute = sum_brute(family, n, w);
    rep.ms_brute = ms_since(t0);
  }

  rep.pass = rep.lhs_rec == rep.rhs &&
             (!rep.lhs_brute || *rep.lhs_brute == rep.rhs);

  // For `half`, the specialization route: the han sums at t = 1/2 must
  // coincide with the sums computed directly from the half weight.
  if (id == Identity::Half) {
    RatFunc han_sum = sum_binary_rec(n, weight(Identity::Han));
    rep.lhs_han_at_half = RatFunc(han_sum.eval(BigRat(1, 2)));
    rep.pass = rep.pass && *rep.lhs_han_at_half == rep.rhs;
  }
  return rep;
}

}  // namespace hooklen
