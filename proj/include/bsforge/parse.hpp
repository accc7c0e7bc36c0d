#pragma once

// Text input: polynomials in x1, x2 with rational coefficients, and weight
// pairs "w1,w2". Errors carry the 1-based column of the offending character.

#include <cctype>
#include <string>
#include <string_view>

#include "poly.hpp"

namespace bsforge {

namespace detail {

// expr   := ['+'|'-'] term (('+'|'-') term)*
// term   := factor ('*' factor)*
// factor := atom ['^' integer]
// atom   := integer ['/' integer] | 'x1' | 'x2' | '(' expr ')'
class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : s_(text) {}

  SparsePoly parse() {
    skip();
    if (at_end()) fail("empty polynomial");
    SparsePoly p = expr();
    skip();
    if (!at_end()) fail(std::string("unexpected '") + s_[pos_] + "'");
    return p;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;

  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::Parse, "column " + std::to_string(pos_ + 1) + ": " + msg);
  }

  std::string digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::string(s_.substr(start, pos_ - start));
  }

  SparsePoly expr() {
    skip();
    bool neg = false;
    if (peek() == '+' || peek() == '-') {
      neg = peek() == '-';
      ++pos_;
    }
    SparsePoly acc = term();
    if (neg) acc = -acc;
    for (;;) {
      skip();
      char c = peek();
      if (c != '+' && c != '-') return acc;
      ++pos_;
      SparsePoly t = term();
      acc = c == '+' ? acc + t : acc - t;
    }
  }

  SparsePoly term() {
    SparsePoly acc = factor();
    for (;;) {
      skip();
      if (peek() != '*') return acc;
      ++pos_;
      acc = acc * factor();
    }
  }

  SparsePoly factor() {
    SparsePoly base = atom();
    skip();
    if (peek() != '^') return base;
    ++pos_;
    skip();
    std::string e = digits();
    if (e.size() > 6) fail("exponent too large");
    return base.pow(static_cast<unsigned>(std::stoul(e)));
  }

  SparsePoly atom() {
    skip();
    char c = peek();
    if (c == '(') {
      ++pos_;
      SparsePoly inner = expr();
      skip();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == 'x') {
      ++pos_;
      char v = peek();
      if (v != '1' && v != '2') fail("unknown variable, expected x1 or x2");
      ++pos_;
      if (std::isalnum(static_cast<unsigned char>(peek()))) fail("unknown variable, expected x1 or x2");
      return v == '1' ? SparsePoly::x1() : SparsePoly::x2();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = digits();
      std::string den = "1";
      skip();
      if (peek() == '/') {
        ++pos_;
        skip();
        den = digits();
        if (den.find_first_not_of('0') == std::string::npos) fail("zero denominator");
      }
      return SparsePoly::constant(parse_rational(num + "/" + den));
    }
    if (at_end()) fail("unexpected end of input");
    fail(std::string("unexpected '") + c + "'");
  }
};

}  // namespace detail

inline SparsePoly parse_poly(std::string_view text) { return detail::PolyParser(text).parse(); }

inline Rational parse_rational_arg(std::string_view text, const std::string& what) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument& e) {
    throw Error(ErrorKind::Parse, what + ": " + e.what());
  }
}

/// "w1,w2" with integer or num/den entries.
inline WeightSystem parse_weights(std::string_view text) {
  auto comma = text.find(',');
  if (comma == std::string_view::npos) throw Error(ErrorKind::Parse, "weights must look like w1,w2");
  auto trim = [](std::string_view t) {
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.remove_prefix(1);
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.remove_suffix(1);
    return t;
  };
  Rational w1 = parse_rational_arg(trim(text.substr(0, comma)), "first weight");
  Rational w2 = parse_rational_arg(trim(text.substr(comma + 1)), "second weight");
  if (w1 <= 0 || w2 <= 0) throw Error(ErrorKind::Parse, "weights must be positive");
  return {w1, w2};
}

}  // namespace bsforge
