#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "poly.hpp"

namespace bsforge {

/// Terms ordered by first exponent descending, then second descending.
/// Coefficients of 1 and -1 are implicit, e.g. "-9*x1^2*x2^2 + 4*x1*x2".
inline std::string render(const SparsePoly& p, const std::string& v1 = "x1", const std::string& v2 = "x2",
                          const std::string& plus = " + ", const std::string& minus = " - ") {
  if (p.is_zero()) return "0";
  std::vector<std::pair<ExponentPair, Rational>> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) {
    return x.first.i != y.first.i ? x.first.i > y.first.i : x.first.j > y.first.j;
  });
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms) {
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first)
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? minus : plus;
    first = false;
    std::vector<std::string> parts;
    bool constant = e.i == 0 && e.j == 0;
    if (mag != 1 || constant) parts.push_back(to_string(mag));
    auto var = [&](const std::string& v, std::uint32_t k) {
      if (k == 1) parts.push_back(v);
      if (k > 1) parts.push_back(v + "^" + std::to_string(k));
    };
    var(v1, e.i);
    var(v2, e.j);
    for (std::size_t k = 0; k < parts.size(); ++k) out += (k ? "*" : "") + parts[k];
  }
  return out;
}

template <class Range>
std::string join(const Range& items, const std::string& sep) {
  std::ostringstream os;
  bool first = true;
  for (const auto& x : items) {
    if (!first) os << sep;
    first = false;
    os << x;
  }
  return os.str();
}

inline std::string render_exponent(ExponentPair e) {
  return "(" + std::to_string(e.i) + "," + std::to_string(e.j) + ")";
}

}  // namespace bsforge
