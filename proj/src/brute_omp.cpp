#include <algorithm>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hooklen/brute.hpp"

namespace hooklen {

namespace {

struct HookHash {
  size_t operator()(const HookMultiset& h) const {
    size_t acc = 1469598103934665603ull;  // FNV-1a
    for (int v : h) {
      acc ^= static_cast<size_t>(v);
      acc *= 1099511628211ull;
    }
    return acc;
  }
};

using Hist = std::unordered_map<HookMultiset, unsigned long long, HookHash>;

void add_sorted(Hist& hist, HookMultiset key) {
  std::sort(key.begin(), key.end());
  ++hist[std::move(key)];
}

// One histogram task per root split; the per-shape work is pure integer
// bookkeeping, all rational-function algebra is deferred to phase 2.
void hist_binary_split(int n, int k, Hist& hist) {
  for_each_binary(k, [&](BinaryTree left) {
    HookMultiset base = hooks_binary(left);
    base.push_back(n);
    for_each_binary(n - 1 - k, [&](BinaryTree right) {
      HookMultiset key = base;
      HookMultiset rh = hooks_binary(right);
      key.insert(key.end(), rh.begin(), rh.end());
      add_sorted(hist, std::move(key));
    });
  });
}

void hist_ternary_split(int n, int a, int b, Hist& hist) {
  int c = n - 1 - a - b;
  for_each_ternary(a, [&](TernaryTree ta) {
    HookMultiset ha = hooks_ternary(ta);
    ha.push_back(n);
    for_each_ternary(b, [&](TernaryTree tb) {
      HookMultiset hab = ha;
      HookMultiset hb = hooks_ternary(tb);
      hab.insert(hab.end(), hb.begin(), hb.end());
      for_each_ternary(c, [&](TernaryTree tc) {
        HookMultiset key = hab;
        HookMultiset hc = hooks_ternary(tc);
        key.insert(key.end(), hc.begin(), hc.end());
        add_sorted(hist, std::move(key));
      });
    });
  });
}

void hist_forest_split(int n, int m, Hist& hist) {
  // First tree of size m = a root over a forest of size m-1.
  for_each_forest(m - 1, [&](PlaneForest children) {
    HookMultiset base = hooks_forest(children);
    base.push_back(m);
    for_each_forest(n - m, [&](PlaneForest rest) {
      HookMultiset key = base;
      HookMultiset hr = hooks_forest(rest);
      key.insert(key.end(), hr.begin(), hr.end());
      add_sorted(hist, std::move(key));
    });
  });
}

// count * prod over distinct hook values h of w(h)^multiplicity.
RatFunc multiset_term(const HookMultiset& hooks, unsigned long long count,
                      const HookWeight& w) {
  RatFunc prod(BigRat(BigInt(static_cast<unsigned long>(count))));
  for (size_t i = 0; i < hooks.size();) {
    size_t j = i;
    while (j < hooks.size() && hooks[j] == hooks[i]) ++j;
    prod *= pow(w(hooks[i]), static_cast<long>(j - i));
    i = j;
  }
  return prod;
}

}  // namespace

RatFunc brute_sum_parallel(Family family, int n, const HookWeight& w) {
  if (n == 0) return RatFunc::one();

  // Phase 1: histogram hook multisets over every shape, partitioned by
  // the root split so the tasks are independent.
  std::vector<std::pair<int, int>> splits;
  if (family == Family::Ternary) {
    for (int a = 0; a <= n - 1; ++a)
      for (int b = 0; b <= n - 1 - a; ++b) splits.emplace_back(a, b);
  } else {
    for (int k = 0; k < n; ++k) splits.emplace_back(k, 0);
  }
  std::vector<Hist> parts(splits.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (size_t s = 0; s < splits.size(); ++s) {
    switch (family) {
      case Family::Binary: hist_binary_split(n, splits[s].first, parts[s]); break;
      case Family::Ternary: hist_ternary_split(n, splits[s].first, splits[s].second, parts[s]); break;
      case Family::Forest: hist_forest_split(n, splits[s].first + 1, parts[s]); break;
    }
  }
  Hist hist;
  for (auto& p : parts)
    for (auto& [key, count] : p) hist[key] += count;

  // Deterministic work list (the sum itself is order-independent in
  // exact arithmetic; sorting just makes runs reproducible end to end).
  std::vector<std::pair<HookMultiset, unsigned long long>> items(hist.begin(), hist.end());
  std::sort(items.begin(), items.end());

  // Phase 2: the rational-function algebra, one term per distinct
  // multiset, reduced over threads.
  RatFunc total;
#pragma omp parallel
  {
    RatFunc local;
#pragma omp for schedule(dynamic, 8) nowait
    for (size_t i = 0; i < items.size(); ++i)
      local += multiset_term(items[i].first, items[i].second, w);
#pragma omp critical(brute_sum_reduce)
    total += local;
  }
  return total;
}

}  // namespace hooklen
