#pragma once

#include "hooklen/ratfunc.hpp"
#include "hooklen/trees.hpp"
#include "hooklen/weights.hpp"

namespace hooklen {

// Exhaustive weighted hook sums: enumerate every shape of the family and
// accumulate prod_v w(h_v).  No cap checking here; callers gate on Caps.
//
// The serial kernel is the direct per-shape reference: one product per
// shape, one running sum.  The parallel kernel enumerates the same
// shapes, but groups them by hook multiset first (the weight product
// depends on nothing else) and distributes the rational-function algebra
// over OpenMP threads.  Both return identical canonical values.
RatFunc brute_sum_serial(Family family, int n, const HookWeight& w);
RatFunc brute_sum_parallel(Family family, int n, const HookWeight& w);

}  // namespace hooklen
