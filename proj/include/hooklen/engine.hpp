#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "hooklen/brute.hpp"
#include "hooklen/ratfunc.hpp"
#include "hooklen/trees.hpp"
#include "hooklen/weights.hpp"

namespace hooklen {

enum class Method { Brute, Recurrence, Both };
const char* method_name(Method m);
std::optional<Method> method_from_name(std::string_view name);

// Closed-form right-hand side of an identity at n >= 1, as an exact
// rational function of t (a polynomial for every identity; constant in t
// except for lascoux and han).
RatFunc rhs_value(Identity id, int n);

// Per-n comparison record: left-hand sides (brute-force enumeration and
// convolution recurrence) against the closed form.  `pass` holds iff all
// present sides are identical canonical values.
struct VerificationReport {
  Identity id;
  int n = 0;
  Method method = Method::Recurrence;
  std::optional<RatFunc> lhs_brute;
  RatFunc lhs_rec;
  RatFunc rhs;
  // Only for the `half` identity: the han sums specialized at t = 1/2,
  // which must agree with the directly-computed sides.
  std::optional<RatFunc> lhs_han_at_half;
  bool pass = false;
  double ms_brute = 0.0;
  double ms_rec = 0.0;
};

// Weighted hook sums over the three families, by brute-force enumeration
// and by memoized convolution recurrences.  Recurrence tables are keyed
// by (family, identity) and retained for the lifetime of the engine;
// lookups may run concurrently.
class Engine {
 public:
  explicit Engine(Caps caps = {}) : caps_(caps) {}
  const Caps& caps() const { return caps_; }

  // Sum over all shapes of size n of the product of w over hook lengths.
  // Cap-checked; delegates to the parallel enumeration kernel.
  RatFunc sum_brute(Family family, int n, const HookWeight& w) const;
  RatFunc sum_binary_brute(int n, const HookWeight& w) const {
    return sum_brute(Family::Binary, n, w);
  }

  // S(0) = 1; S(n) = w(n) * sum_{k=0}^{n-1} S(k) S(n-1-k).
  RatFunc sum_binary_rec(int n, const HookWeight& w);
  // A(0) = 1; A(n) = w(n) * sum_{a+b+c=n-1} A(a) A(b) A(c).
  RatFunc sum_ternary_rec(int n, const HookWeight& w);
  // F(0) = 1; Tr(m) = w(m) * F(m-1); F(n) = sum_{m=1}^{n} Tr(m) F(n-m).
  RatFunc sum_forest_rec(int n, const HookWeight& w);
  RatFunc sum_rec(Family family, int n, const HookWeight& w);

  const HookWeight& weight(Identity id);

  VerificationReport verify(Identity id, int n, Method method);

 private:
  // rec_[(family, identity)]: .main = S/A/F values from index 0; for the
  // ternary family .aux[m] caches sum_{a+b=m} A(a) A(b), for forests it
  // holds the per-tree values Tr.
  struct Tables {
    std::vector<RatFunc> main;
    std::vector<RatFunc> aux;
  };
  Tables& grow_tables(Family family, const HookWeight& w, int up_to);

  Caps caps_;
  std::mutex mu_;
  std::map<std::pair<Family, Identity>, Tables> rec_;
  std::map<Identity, HookWeight> weights_;
};

}  // namespace hooklen
