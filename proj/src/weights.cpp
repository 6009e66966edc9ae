#include "hooklen/weights.hpp"

#include <mutex>
#include <stdexcept>

namespace hooklen {

const char* identity_name(Identity id) {
  switch (id) {
    case Identity::Postnikov: return "postnikov";
    case Identity::Lascoux: return "lascoux";
    case Identity::Han: return "han";
    case Identity::Half: return "half";
    case Identity::Ternary: return "ternary";
    case Identity::Forest: return "forest";
  }
  return "?";
}

std::optional<Identity> identity_from_name(std::string_view name) {
  for (Identity id : {Identity::Postnikov, Identity::Lascoux, Identity::Han,
                      Identity::Half, Identity::Ternary, Identity::Forest})
    if (name == identity_name(id)) return id;
  return std::nullopt;
}

Family identity_family(Identity id) {
  switch (id) {
    case Identity::Ternary: return Family::Ternary;
    case Identity::Forest: return Family::Forest;
    default: return Family::Binary;
  }
}

bool identity_is_constant(Identity id) {
  return id != Identity::Lascoux && id != Identity::Han;
}

const RatFunc& HookWeight::operator()(int h) const {
  if (h < 1) throw std::invalid_argument("hook length must be >= 1");
  size_t idx = static_cast<size_t>(h) - 1;
  {
    std::shared_lock lock(mu_);
    if (idx < cache_.size()) return cache_[idx];
  }
  std::unique_lock lock(mu_);
  while (cache_.size() <= idx) cache_.push_back(compute(static_cast<int>(cache_.size()) + 1));
  return cache_[idx];
}

RatFunc HookWeight::compute(int h) const {
  switch (id_) {
    case Identity::Postnikov:
      // 1 + 1/h
      return RatFunc(BigRat(h + 1, h));
    case Identity::Lascoux:
      // t + 1/h
      return RatFunc(Poly::linear(BigRat(1), BigRat(1, h)));
    case Identity::Han:
      // (t+h)^(h-1) / (h * (2t+h-1)^(h-2)); the integer-exponent pow makes
      // h = 1 (a reciprocal) and h = 2 (an empty power) uniform.
      return pow(RatFunc(Poly::linear(BigRat(1), BigRat(h))), h - 1) *
             pow(RatFunc(Poly::linear(BigRat(2), BigRat(h - 1))), -(h - 2)) *
             RatFunc(BigRat(1, h));
    case Identity::Half:
      // (1 + 1/(2h))^(h-1)
      return RatFunc(pow(BigRat(2 * h + 1, 2 * h), h - 1));
    case Identity::Ternary:
      // 2/3 + 1/(3h)
      return RatFunc(BigRat(2 * h + 1, 3 * h));
    case Identity::Forest:
      // 2 - 1/h
      return RatFunc(BigRat(2 * h - 1, h));
  }
  throw std::logic_error("unknown identity");
}

}  // namespace hooklen
