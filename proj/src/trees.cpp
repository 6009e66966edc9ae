#include "hooklen/trees.hpp"

#include <algorithm>

#include "hooklen/errors.hpp"

namespace hooklen {

const char* family_name(Family f) {
  switch (f) {
    case Family::Binary: return "binary";
    case Family::Ternary: return "ternary";
    case Family::Forest: return "forest";
  }
  return "?";
}

int Caps::of(Family f) const {
  switch (f) {
    case Family::Binary: return binary;
    case Family::Ternary: return ternary;
    case Family::Forest: return forest;
  }
  return 0;
}

BigInt catalan(unsigned long n) { return binomial(2 * n, n) / BigInt(n + 1); }

BigInt ternary_count(unsigned long n) { return binomial(3 * n, n) / BigInt(2 * n + 1); }

BigInt family_count(Family f, unsigned long n) {
  return f == Family::Ternary ? ternary_count(n) : catalan(n);
}

void check_cap(Family f, int n, int cap) {
  if (n <= cap) return;
  throw CapExceeded("enumerating " + std::string(family_name(f)) + " shapes at n=" +
                    std::to_string(n) + " would generate " +
                    family_count(f, static_cast<unsigned long>(n)).get_str() +
                    " shapes, above the cap of " + std::to_string(cap));
}

namespace detail {

// Root split sizes ascending; left/first component varies slowest.
void binary_shapes(int n, VisitRef<BinaryTree> visit) {
  if (n == 0) {
    visit(nullptr);
    return;
  }
  for (int k = 0; k <= n - 1; ++k) {
    auto with_left = [&](BinaryTree left) {
      auto with_right = [&](BinaryTree right) {
        BinaryNode root{left, right};
        visit(&root);
      };
      binary_shapes(n - 1 - k, VisitRef<BinaryTree>(with_right));
    };
    binary_shapes(k, VisitRef<BinaryTree>(with_left));
  }
}

void ternary_shapes(int n, VisitRef<TernaryTree> visit) {
  if (n == 0) {
    visit(nullptr);
    return;
  }
  for (int a = 0; a <= n - 1; ++a) {
    for (int b = 0; b <= n - 1 - a; ++b) {
      int c = n - 1 - a - b;
      auto with_a = [&](TernaryTree ta) {
        auto with_b = [&](TernaryTree tb) {
          auto with_c = [&](TernaryTree tc) {
            TernaryNode root{{ta, tb, tc}};
            visit(&root);
          };
          ternary_shapes(c, VisitRef<TernaryTree>(with_c));
        };
        ternary_shapes(b, VisitRef<TernaryTree>(with_b));
      };
      ternary_shapes(a, VisitRef<TernaryTree>(with_a));
    }
  }
}

void forest_shapes(int n, VisitRef<PlaneForest> visit) {
  if (n == 0) {
    visit(nullptr);
    return;
  }
  for (int m = 1; m <= n; ++m) {  // size of the first tree
    auto with_children = [&](PlaneForest children) {
      PlaneTreeNode first{children};
      auto with_rest = [&](PlaneForest rest) {
        ForestLink link{&first, rest};
        visit(&link);
      };
      forest_shapes(n - m, VisitRef<PlaneForest>(with_rest));
    };
    forest_shapes(m - 1, VisitRef<PlaneForest>(with_children));
  }
}

}  // namespace detail

int binary_size(BinaryTree t) {
  if (!t) return 0;
  return 1 + binary_size(t->left) + binary_size(t->right);
}

int ternary_internal_count(TernaryTree t) {
  if (!t) return 0;
  int s = 1;
  for (TernaryTree c : t->child) s += ternary_internal_count(c);
  return s;
}

int forest_size(PlaneForest f) {
  int s = 0;
  for (; f; f = f->tail) s += 1 + forest_size(f->head->children);
  return s;
}

namespace {

int collect_binary(BinaryTree t, HookMultiset& out) {
  if (!t) return 0;
  int s = 1 + collect_binary(t->left, out) + collect_binary(t->right, out);
  out.push_back(s);
  return s;
}

int collect_ternary(TernaryTree t, HookMultiset& out) {
  if (!t) return 0;
  int s = 1;
  for (TernaryTree c : t->child) s += collect_ternary(c, out);
  out.push_back(s);
  return s;
}

int collect_forest(PlaneForest f, HookMultiset& out) {
  int total = 0;
  for (; f; f = f->tail) {
    int s = 1 + collect_forest(f->head->children, out);
    out.push_back(s);
    total += s;
  }
  return total;
}

}  // namespace

HookMultiset hooks_binary(BinaryTree t) {
  HookMultiset h;
  collect_binary(t, h);
  std::sort(h.begin(), h.end());
  return h;
}

HookMultiset hooks_ternary(TernaryTree t) {
  HookMultiset h;
  collect_ternary(t, h);
  std::sort(h.begin(), h.end());
  return h;
}

HookMultiset hooks_forest(PlaneForest f) {
  HookMultiset h;
  collect_forest(f, h);
  std::sort(h.begin(), h.end());
  return h;
}

std::string hooks_str(const HookMultiset& h) {
  std::string out = "{";
  for (size_t i = 0; i < h.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(h[i]);
  }
  return out + "}";
}

std::string encode_binary(BinaryTree t) {
  if (!t) return "·";
  return "(" + encode_binary(t->left) + ")(" + encode_binary(t->right) + ")";
}

std::string encode_ternary(TernaryTree t) {
  if (!t) return "*";
  std::string out;
  for (TernaryTree c : t->child) out += "(" + encode_ternary(c) + ")";
  return out;
}

std::string encode_forest(PlaneForest f) {
  std::string out;
  for (; f; f = f->tail) out += "(" + encode_forest(f->head->children) + ")";
  return out;
}

BinaryTree TreeArena::bin(BinaryTree left, BinaryTree right) {
  bins_.push_back(BinaryNode{left, right});
  return &bins_.back();
}

TernaryTree TreeArena::ter(TernaryTree a, TernaryTree b, TernaryTree c) {
  ters_.push_back(TernaryNode{{a, b, c}});
  return &ters_.back();
}

const PlaneTreeNode* TreeArena::tree(PlaneForest children) {
  trees_.push_back(PlaneTreeNode{children});
  return &trees_.back();
}

PlaneForest TreeArena::forest(const PlaneTreeNode* head, PlaneForest tail) {
  links_.push_back(ForestLink{head, tail});
  return &links_.back();
}

}  // namespace hooklen
