#pragma once

// Sparse bivariate polynomials over Q, weight systems and the two local
// monomial orders used by the division theorem.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "error.hpp"
#include "rational.hpp"

namespace bsforge {

struct ExponentPair {
  std::uint32_t i = 0;
  std::uint32_t j = 0;

  friend auto operator<=>(const ExponentPair&, const ExponentPair&) = default;

  friend ExponentPair operator+(ExponentPair a, ExponentPair b) { return {a.i + b.i, a.j + b.j}; }

  /// Componentwise a <= b, i.e. x^a divides x^b.
  bool divides(ExponentPair b) const { return i <= b.i && j <= b.j; }

  /// b - a; caller guarantees a.divides(b).
  friend ExponentPair operator-(ExponentPair b, ExponentPair a) { return {b.i - a.i, b.j - a.j}; }
};

inline ExponentPair lcm(ExponentPair a, ExponentPair b) {
  return {std::max(a.i, b.i), std::max(a.j, b.j)};
}

class SparsePoly {
 public:
  using Terms = std::map<ExponentPair, Rational>;

  SparsePoly() = default;
  SparsePoly(std::initializer_list<std::pair<const ExponentPair, Rational>> terms) {
    for (const auto& [e, c] : terms) add_term(e, c);
  }

  static SparsePoly constant(const Rational& c) { return monomial({0, 0}, c); }
  static SparsePoly monomial(ExponentPair e, const Rational& c = 1) {
    SparsePoly p;
    p.add_term(e, c);
    return p;
  }
  static SparsePoly x1(std::uint32_t k = 1) { return monomial({k, 0}); }
  static SparsePoly x2(std::uint32_t k = 1) { return monomial({0, k}); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coefficient(ExponentPair e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(ExponentPair e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  SparsePoly& operator+=(const SparsePoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  SparsePoly& operator-=(const SparsePoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  SparsePoly& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  /// this += c * x^shift * p
  void add_scaled(const SparsePoly& p, const Rational& c, ExponentPair shift = {0, 0}) {
    if (c == 0) return;
    for (const auto& [e, pc] : p.terms_) add_term(e + shift, c * pc);
  }

  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator-(SparsePoly a) { return a *= Rational(-1); }
  friend SparsePoly operator*(SparsePoly a, const Rational& s) { return a *= s; }
  friend SparsePoly operator*(const Rational& s, SparsePoly a) { return a *= s; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }

  SparsePoly pow(unsigned n) const {
    SparsePoly r = constant(1);
    for (unsigned k = 0; k < n; ++k) r = r * *this;
    return r;
  }

  friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

 private:
  Terms terms_;
};

/// Partial derivative with respect to x1 (var == 1) or x2 (var == 2).
inline SparsePoly derivative(const SparsePoly& p, int var) {
  SparsePoly r;
  for (const auto& [e, c] : p.terms()) {
    if (var == 1 && e.i > 0) r.add_term({e.i - 1, e.j}, c * e.i);
    if (var == 2 && e.j > 0) r.add_term({e.i, e.j - 1}, c * e.j);
  }
  return r;
}

inline std::set<ExponentPair> newton_diagram(const SparsePoly& p) {
  std::set<ExponentPair> out;
  for (const auto& [e, c] : p.terms()) out.insert(e);
  return out;
}

/// A positive rational weight pair; L(i, j) = w1 * i + w2 * j.
struct WeightSystem {
  Rational w1;
  Rational w2;

  WeightSystem() : w1(1), w2(1) {}
  WeightSystem(Rational a, Rational b) : w1(std::move(a)), w2(std::move(b)) {
    w1.canonicalize();
    w2.canonicalize();
    if (w1 <= 0 || w2 <= 0) throw Error(ErrorKind::InvalidArgument, "weights must be positive");
  }

  Rational of(ExponentPair e) const { return w1 * e.i + w2 * e.j; }

  friend bool operator==(const WeightSystem&, const WeightSystem&) = default;
};

inline bool collinear(const WeightSystem& a, const WeightSystem& b) {
  return a.w1 * b.w2 == a.w2 * b.w1;
}

namespace detail {
inline void require_nonzero(const SparsePoly& p, const char* what) {
  if (p.is_zero()) throw Error(ErrorKind::UndefinedWeight, std::string(what) + " of the zero polynomial");
}
}  // namespace detail

/// rho_alpha(p): minimal weight over the Newton diagram.
inline Rational weight(const SparsePoly& p, const WeightSystem& a) {
  detail::require_nonzero(p, "weight");
  std::optional<Rational> best;
  for (const auto& [e, c] : p.terms()) {
    Rational w = a.of(e);
    if (!best || w < *best) best = std::move(w);
  }
  return *best;
}

/// deg_alpha(p): maximal weight over the Newton diagram.
inline Rational degree(const SparsePoly& p, const WeightSystem& a) {
  detail::require_nonzero(p, "degree");
  std::optional<Rational> best;
  for (const auto& [e, c] : p.terms()) {
    Rational w = a.of(e);
    if (!best || w > *best) best = std::move(w);
  }
  return *best;
}

inline SparsePoly initial_form(const SparsePoly& p, const WeightSystem& a) {
  Rational rho = weight(p, a);
  SparsePoly r;
  for (const auto& [e, c] : p.terms())
    if (a.of(e) == rho) r.add_term(e, c);
  return r;
}

inline bool is_quasi_homogeneous(const SparsePoly& p, const WeightSystem& a) {
  return p.is_zero() || weight(p, a) == degree(p, a);
}

enum class TieBreak {
  PreferLowJ,  // the order <1: among equal weights the smaller j is larger
  PreferLowI,  // the order <2
};

/// Local order: lower weight is larger; ties broken by the tie-break axis.
struct LocalOrder {
  WeightSystem weights;
  TieBreak tiebreak = TieBreak::PreferLowJ;

  /// True when a <_o b, i.e. b is preferred as privileged exponent.
  bool less(ExponentPair a, ExponentPair b) const {
    Rational la = weights.of(a), lb = weights.of(b);
    if (la != lb) return la > lb;
    if (tiebreak == TieBreak::PreferLowJ) return a.j > b.j;
    return a.i > b.i;
  }

  /// Strict weak ordering putting the privileged (maximal) exponent first.
  struct Descending {
    const LocalOrder* order;
    bool operator()(ExponentPair a, ExponentPair b) const { return order->less(b, a); }
  };
};

inline ExponentPair priv_exponent(const SparsePoly& p, const LocalOrder& o) {
  detail::require_nonzero(p, "privileged exponent");
  auto it = p.terms().begin();
  ExponentPair best = it->first;
  for (++it; it != p.terms().end(); ++it)
    if (o.less(best, it->first)) best = it->first;
  return best;
}

inline Rational priv_coefficient(const SparsePoly& p, const LocalOrder& o) {
  return p.coefficient(priv_exponent(p, o));
}

/// p scaled so its privileged coefficient is 1.
inline SparsePoly monic(const SparsePoly& p, const LocalOrder& o) {
  Rational c = priv_coefficient(p, o);
  return p * Rational(1 / c);
}

inline SparsePoly jacobian(const SparsePoly& f1, const SparsePoly& f2) {
  return derivative(f1, 1) * derivative(f2, 2) - derivative(f1, 2) * derivative(f2, 1);
}

/// Euler operator chi_alpha = w1 x1 d1 + w2 x2 d2; scales each monomial by its weight.
inline SparsePoly euler(const SparsePoly& p, const WeightSystem& a) {
  SparsePoly r;
  for (const auto& [e, c] : p.terms()) r.add_term(e, c * a.of(e));
  return r;
}

/// Terms of p whose weight is strictly above a threshold.
inline SparsePoly terms_above(const SparsePoly& p, const WeightSystem& a, const Rational& bound) {
  SparsePoly r;
  for (const auto& [e, c] : p.terms())
    if (a.of(e) > bound) r.add_term(e, c);
  return r;
}

}  // namespace bsforge
