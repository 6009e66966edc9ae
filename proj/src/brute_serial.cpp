#include "hooklen/brute.hpp"

namespace hooklen {

namespace {

RatFunc product_over(const HookMultiset& hooks, const HookWeight& w) {
  RatFunc prod = RatFunc::one();
  for (int h : hooks) prod *= w(h);
  return prod;
}

}  // namespace

RatFunc brute_sum_serial(Family family, int n, const HookWeight& w) {
  RatFunc total;
  switch (family) {
    case Family::Binary:
      for_each_binary(n, [&](BinaryTree t) { total += product_over(hooks_binary(t), w); });
      break;
    case Family::Ternary:
      for_each_ternary(n, [&](TernaryTree t) { total += product_over(hooks_ternary(t), w); });
      break;
    case Family::Forest:
      for_each_forest(n, [&](PlaneForest f) { total += product_over(hooks_forest(f), w); });
      break;
  }
  return total;
}

}  // namespace hooklen
