#include <cctype>
#include <string>

#include "hooklen/ratfunc.hpp"

namespace hooklen {

namespace {

// Recursive-descent parser for the rational-function grammar:
//
//   expr  := term (('+' | '-') term)*
//   term  := unary (('*' | '/') unary)*
//   unary := '-' unary | power
//   power := atom ('^' integer)?          (non-negative exponent)
//   atom  := integer | 't' | '(' expr ')'
//
// All arithmetic runs on RatFunc, so "/" builds genuine quotients.
class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  RatFunc run() {
    RatFunc v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  std::string integer() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected integer");
    return std::string(text_.substr(start, pos_ - start));
  }

  RatFunc expr() {
    RatFunc v = term();
    for (;;) {
      if (eat('+')) {
        v += term();
      } else if (eat('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  RatFunc term() {
    RatFunc v = unary();
    for (;;) {
      if (eat('*')) {
        v *= unary();
      } else if (eat('/')) {
        RatFunc d = unary();
        size_t at = pos_;
        if (d.is_zero()) throw ParseError("division by zero", at);
        v = v / d;
      } else {
        return v;
      }
    }
  }

  RatFunc unary() {
    if (eat('-')) return -unary();
    return power();
  }

  RatFunc power() {
    RatFunc base = atom();
    if (!eat('^')) return base;
    size_t at = pos_;
    std::string digits = integer();
    unsigned long e = 0;
    try {
      e = std::stoul(digits);
    } catch (const std::out_of_range&) {
      throw ParseError("exponent out of range", at);
    }
    if (base.is_zero() && e == 0) throw ParseError("0^0 is undefined", at);
    return pow(base, static_cast<long>(e));
  }

  RatFunc atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      RatFunc v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (c == 't') {
      ++pos_;
      return RatFunc(Poly::t());
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return RatFunc(BigRat(BigInt(integer())));
    }
    fail("expected integer, 't' or '('");
  }

  std::string_view text_;
  size_t pos_ = 0;
};

}  // namespace

RatFunc RatFunc::parse(std::string_view text) { return Parser(text).run(); }

}  // namespace hooklen
