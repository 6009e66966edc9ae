#pragma once

#include <deque>
#include <string>
#include <vector>

#include "hooklen/rational.hpp"

namespace hooklen {

enum class Family { Binary, Ternary, Forest };
const char* family_name(Family f);

// Enumeration caps; desk-scale protection, overridable per run.
struct Caps {
  int binary = 14;
  int ternary = 9;
  int forest = 14;
  int of(Family f) const;
};

// |B(n)| and |F(n)|: the Catalan number (2n choose n)/(n+1).
BigInt catalan(unsigned long n);
// Number of 3-ary trees with n internal vertices: (3n choose n)/(2n+1).
BigInt ternary_count(unsigned long n);
BigInt family_count(Family f, unsigned long n);

// Throws CapExceeded with the would-be shape count in the message.
void check_cap(Family f, int n, int cap);

// ---------------------------------------------------------------------
// Tree shapes.  Enumeration hands the visitor trees assembled from
// stack-owned nodes: the pointers stay valid only for the duration of
// the visit call.  Build persistent trees through TreeArena.

struct BinaryNode {
  const BinaryNode* left;   // null = absent child
  const BinaryNode* right;
};
using BinaryTree = const BinaryNode*;  // null = empty tree (n = 0)

struct TernaryNode {
  const TernaryNode* child[3];  // null = leaf
};
using TernaryTree = const TernaryNode*;  // null = leaf-only tree (n = 0)

struct PlaneTreeNode;
struct ForestLink {
  const PlaneTreeNode* head;
  const ForestLink* tail;
};
using PlaneForest = const ForestLink*;  // null = empty forest
struct PlaneTreeNode {
  PlaneForest children;
};

namespace detail {

// Non-owning callable reference; keeps the recursive enumerators out of
// template-instantiation recursion and avoids std::function allocations.
template <class T>
class VisitRef {
 public:
  template <class F>
  VisitRef(F&& f)  // NOLINT: intentional implicit binding
      : obj_(const_cast<void*>(static_cast<const void*>(&f))),
        call_([](void* o, T v) { (*static_cast<std::remove_reference_t<F>*>(o))(v); }) {}
  void operator()(T v) const { call_(obj_, v); }

 private:
  void* obj_;
  void (*call_)(void*, T);
};

void binary_shapes(int n, VisitRef<BinaryTree> visit);
void ternary_shapes(int n, VisitRef<TernaryTree> visit);
void forest_shapes(int n, VisitRef<PlaneForest> visit);

}  // namespace detail

// Visit every shape of the family exactly once, in canonical order:
// root-split sizes ascending, leftmost component varying slowest.
template <class F>
void for_each_binary(int n, F&& visit) {
  detail::binary_shapes(n, detail::VisitRef<BinaryTree>(visit));
}
template <class F>
void for_each_ternary(int n, F&& visit) {
  detail::ternary_shapes(n, detail::VisitRef<TernaryTree>(visit));
}
template <class F>
void for_each_forest(int n, F&& visit) {
  detail::forest_shapes(n, detail::VisitRef<PlaneForest>(visit));
}

// ---------------------------------------------------------------------
// Hook statistics.  A hook multiset is kept sorted ascending.

using HookMultiset = std::vector<int>;

int binary_size(BinaryTree t);
int ternary_internal_count(TernaryTree t);
int forest_size(PlaneForest f);

// One entry per vertex: the size of its subtree.
HookMultiset hooks_binary(BinaryTree t);
// One entry per internal vertex: the number of internal vertices in its
// subtree (itself included).  Leaves carry no hook.
HookMultiset hooks_ternary(TernaryTree t);
// One entry per vertex, subtree size within its own tree.
HookMultiset hooks_forest(PlaneForest f);

// "{1,2,3}"; "{}" for the empty multiset.
std::string hooks_str(const HookMultiset& h);

// ---------------------------------------------------------------------
// Canonical balanced-parenthesis encodings (unique per shape).

std::string encode_binary(BinaryTree t);    // "(L)(R)", "·" for an absent child
std::string encode_ternary(TernaryTree t);  // "(A)(B)(C)", "*" for a leaf
std::string encode_forest(PlaneForest f);   // concatenated "(children)" trees

// Owns hand-built nodes; used for fixtures and tests.
class TreeArena {
 public:
  BinaryTree bin(BinaryTree left, BinaryTree right);
  TernaryTree ter(TernaryTree a, TernaryTree b, TernaryTree c);
  const PlaneTreeNode* tree(PlaneForest children);
  PlaneForest forest(const PlaneTreeNode* head, PlaneForest tail);

 private:
  std::deque<BinaryNode> bins_;
  std::deque<TernaryNode> ters_;
  std::deque<PlaneTreeNode> trees_;
  std::deque<ForestLink> links_;
};

}  // namespace hooklen
