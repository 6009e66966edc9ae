#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hooklen {

// Division by a zero rational, polynomial or rational function,
// including pow of zero with a non-positive exponent.
struct ZeroDivision : std::domain_error {
  using std::domain_error::domain_error;
};

// Evaluation of a rational function at a root of its denominator.
struct PoleError : std::domain_error {
  using std::domain_error::domain_error;
};

// Malformed rational-function text.  `pos` is the 0-based offset of the
// offending character in the input.
struct ParseError : std::runtime_error {
  std::size_t pos;
  ParseError(const std::string& what, std::size_t pos_)
      : std::runtime_error(what + " at position " + std::to_string(pos_)),
        pos(pos_) {}
};

// Enumeration request above the configured cap.  The message states how
// many shapes the request would have generated.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace hooklen
