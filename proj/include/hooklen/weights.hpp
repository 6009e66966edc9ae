#pragma once

#include <deque>
#include <optional>
#include <shared_mutex>
#include <string_view>

#include "hooklen/ratfunc.hpp"
#include "hooklen/trees.hpp"

namespace hooklen {

// The six verified identities.  Each pairs a per-vertex hook weight with
// a closed-form right-hand side over one tree family.
enum class Identity { Postnikov, Lascoux, Han, Half, Ternary, Forest };

const char* identity_name(Identity id);
std::optional<Identity> identity_from_name(std::string_view name);
Family identity_family(Identity id);
bool identity_is_constant(Identity id);  // weight free of t

// Per-vertex hook weight w(h) as an exact rational function of t,
// total on h >= 1 and never zero.  Values are memoized; the cache is
// a deque so references stay valid while concurrent readers extend it.
class HookWeight {
 public:
  explicit HookWeight(Identity id) : id_(id) {}
  Identity id() const { return id_; }
  const RatFunc& operator()(int h) const;

 private:
  RatFunc compute(int h) const;
  Identity id_;
  mutable std::shared_mutex mu_;
  mutable std::deque<RatFunc> cache_;  // cache_[h-1] = w(h)
};

}  // namespace hooklen
