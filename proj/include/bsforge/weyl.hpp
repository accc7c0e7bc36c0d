#pragma once

// Weyl-algebra operators in right normal form sum d^beta s1^k s2^l u(x), and
// their action on the symbols g(x, s) f1^(s1 - m) f2^(s2 - n).

#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "poly.hpp"

namespace bsforge {

/// Index of a right-normal-form term: d1^b1 d2^b2 s1^k s2^l.
struct OpKey {
  std::uint32_t b1 = 0, b2 = 0, k = 0, l = 0;

  std::uint32_t order() const { return b1 + b2; }

  friend bool operator==(const OpKey&, const OpKey&) = default;
};

/// Derivative multi-index graded-lex, then (k, l) lex.
inline bool operator<(const OpKey& x, const OpKey& y) {
  if (x.order() != y.order()) return x.order() < y.order();
  if (x.b1 != y.b1) return x.b1 > y.b1;
  if (x.k != y.k) return x.k < y.k;
  return x.l < y.l;
}

class WeylOperator {
 public:
  using Terms = std::map<OpKey, SparsePoly>;

  WeylOperator() = default;
  static WeylOperator identity() { return coefficient(SparsePoly::constant(1)); }
  static WeylOperator coefficient(const SparsePoly& u) {
    WeylOperator p;
    p.add({}, u);
    return p;
  }
  static WeylOperator d(int var) {
    WeylOperator p;
    p.add(var == 1 ? OpKey{1, 0, 0, 0} : OpKey{0, 1, 0, 0}, SparsePoly::constant(1));
    return p;
  }
  static WeylOperator s(int var) {
    WeylOperator p;
    p.add(var == 1 ? OpKey{0, 0, 1, 0} : OpKey{0, 0, 0, 1}, SparsePoly::constant(1));
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  std::size_t monomial_count() const {
    std::size_t n = 0;
    for (const auto& [k, u] : terms_) n += u.size();
    return n;
  }

  SparsePoly coefficient_at(const OpKey& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? SparsePoly() : it->second;
  }

  void add(const OpKey& k, const SparsePoly& u) {
    if (u.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, u);
    if (!inserted) {
      it->second += u;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// this += c * x^e at key k.
  void add_monomial(const OpKey& k, ExponentPair e, const Rational& c) {
    if (c == 0) return;
    auto& u = terms_[k];
    u.add_term(e, c);
    if (u.is_zero()) terms_.erase(k);
  }

  WeylOperator& operator+=(const WeylOperator& o) {
    for (const auto& [k, u] : o.terms_) add(k, u);
    return *this;
  }
  WeylOperator& operator-=(const WeylOperator& o) {
    for (const auto& [k, u] : o.terms_) add(k, -u);
    return *this;
  }
  friend WeylOperator operator+(WeylOperator a, const WeylOperator& b) { return a += b; }
  friend WeylOperator operator-(WeylOperator a, const WeylOperator& b) { return a -= b; }

  /// (c1 s1 + c2 s2 + c0) * this; s1, s2 are central.
  WeylOperator times_affine(const Rational& c1, const Rational& c2, const Rational& c0) const {
    WeylOperator r;
    for (const auto& [k, u] : terms_) {
      if (c1 != 0) r.add({k.b1, k.b2, k.k + 1, k.l}, u * c1);
      if (c2 != 0) r.add({k.b1, k.b2, k.k, k.l + 1}, u * c2);
      if (c0 != 0) r.add(k, u * c0);
    }
    return r;
  }

  /// this * v for a function v: the coefficients absorb v.
  WeylOperator times_function(const SparsePoly& v) const {
    WeylOperator r;
    for (const auto& [k, u] : terms_) r.add(k, u * v);
    return r;
  }

  friend bool operator==(const WeylOperator&, const WeylOperator&) = default;

 private:
  Terms terms_;
};

namespace detail {

inline Rational binom(std::uint32_t n, std::uint32_t k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return Rational(r);
}

/// d^delta u with delta = (p, q).
inline SparsePoly multi_derivative(SparsePoly u, std::uint32_t p, std::uint32_t q) {
  for (std::uint32_t t = 0; t < p && !u.is_zero(); ++t) u = derivative(u, 1);
  for (std::uint32_t t = 0; t < q && !u.is_zero(); ++t) u = derivative(u, 2);
  return u;
}

}  // namespace detail

/// P * Q in right normal form, using u d^g = sum_delta (-1)^|delta| C(g, delta) d^(g - delta) (d^delta u).
inline WeylOperator weyl_multiply(const WeylOperator& P, const WeylOperator& Q) {
  WeylOperator r;
  for (const auto& [kp, u] : P.terms())
    for (const auto& [kq, v] : Q.terms())
      for (std::uint32_t p = 0; p <= kq.b1; ++p)
        for (std::uint32_t q = 0; q <= kq.b2; ++q) {
          SparsePoly du = detail::multi_derivative(u, p, q);
          if (du.is_zero()) continue;
          Rational c = detail::binom(kq.b1, p) * detail::binom(kq.b2, q);
          if ((p + q) % 2) c = -c;
          OpKey k{kp.b1 + kq.b1 - p, kp.b2 + kq.b2 - q, kp.k + kq.k, kp.l + kq.l};
          r.add(k, du * v * c);
        }
  return r;
}

/// Polynomial in (x1, x2, s1, s2) with exponents packed into 16-bit fields.
class Poly4 {
 public:
  using Key = std::uint64_t;

  static Key pack(std::uint32_t e1, std::uint32_t e2, std::uint32_t k, std::uint32_t l) {
    if ((e1 | e2 | k | l) >= (1u << 16)) throw Error(ErrorKind::InvalidArgument, "exponent overflow");
    return Key(e1) | (Key(e2) << 16) | (Key(k) << 32) | (Key(l) << 48);
  }
  static std::uint32_t x1_exp(Key k) { return std::uint32_t(k & 0xffff); }
  static std::uint32_t x2_exp(Key k) { return std::uint32_t((k >> 16) & 0xffff); }
  static std::uint32_t s1_exp(Key k) { return std::uint32_t((k >> 32) & 0xffff); }
  static std::uint32_t s2_exp(Key k) { return std::uint32_t((k >> 48) & 0xffff); }
  static ExponentPair x_part(Key k) { return {x1_exp(k), x2_exp(k)}; }

  Poly4() = default;
  static Poly4 from_x(const SparsePoly& p, std::uint32_t k = 0, std::uint32_t l = 0) {
    Poly4 r;
    for (const auto& [e, c] : p.terms()) r.add(pack(e.i, e.j, k, l), c);
    return r;
  }
  /// A polynomial in (s1, s2) stored in a SparsePoly's exponent slots.
  static Poly4 from_s(const SparsePoly& p) {
    Poly4 r;
    for (const auto& [e, c] : p.terms()) r.add(pack(0, 0, e.i, e.j), c);
    return r;
  }

  const std::unordered_map<Key, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add(Key k, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Poly4& operator+=(const Poly4& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  Poly4& operator-=(const Poly4& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }

  friend Poly4 operator*(const Poly4& a, const Poly4& b) {
    Poly4 r;
    r.terms_.reserve(a.size() * b.size());
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_) r.add(ka + kb, ca * cb);
    return r;
  }

  /// (s_var - m) * this.
  Poly4 times_s_minus(int var, long m) const {
    Poly4 r;
    Key shift = var == 1 ? (Key(1) << 32) : (Key(1) << 48);
    for (const auto& [k, c] : terms_) {
      r.add(k + shift, c);
      if (m != 0) r.add(k, c * Rational(-m));
    }
    return r;
  }

  Poly4 dx(int var) const {
    Poly4 r;
    for (const auto& [k, c] : terms_) {
      std::uint32_t e = var == 1 ? x1_exp(k) : x2_exp(k);
      if (e == 0) continue;
      r.add(k - (var == 1 ? Key(1) : (Key(1) << 16)), c * e);
    }
    return r;
  }

  /// Keeps the terms whose key satisfies `keep`.
  template <class Keep>
  void retain(Keep keep) {
    for (auto it = terms_.begin(); it != terms_.end();)
      if (keep(it->first))
        ++it;
      else
        it = terms_.erase(it);
  }

  friend bool operator==(const Poly4&, const Poly4&) = default;

 private:
  std::unordered_map<Key, Rational> terms_;
};

/// Weight bookkeeping for truncated module computations: a term at shift
/// (m, n) with x-exponent e weighs L(e) - m rho(f1) - n rho(f2), s weighs 0.
struct ModuleTruncation {
  std::vector<WeightSystem> systems;
  std::vector<Rational> rho_f1, rho_f2;
  Rational cap;
  mutable std::size_t dropped = 0;

  Rational module_weight(std::size_t a, ExponentPair e, int m, int n) const {
    return systems[a].of(e) - rho_f1[a] * m - rho_f2[a] * n;
  }

  /// True when the term's weight, lowered by `slack[a]`, stays above the cap
  /// in every system.
  bool droppable(ExponentPair e, int m, int n, const std::vector<Rational>& slack) const {
    if (systems.empty()) return false;
    for (std::size_t a = 0; a < systems.size(); ++a)
      if (module_weight(a, e, m, n) - slack[a] <= cap) return false;
    ++dropped;
    return true;
  }
};

/// sum over (m, n) of g_(m,n)(x, s) f1^(s1 - m) f2^(s2 - n).
class ModuleElement {
 public:
  using Shift = std::pair<int, int>;

  ModuleElement() = default;
  ModuleElement(Shift sh, Poly4 g) { add(sh, std::move(g)); }

  /// xi_(i1, i2): falling factorials [s1]_i1 [s2]_i2 at shift (i1, i2); an
  /// index of -1 carries no prefactor.
  static ModuleElement xi(int i1, int i2) {
    Poly4 g;
    g.add(Poly4::pack(0, 0, 0, 0), 1);
    for (int t = 0; t < i1; ++t) g = g.times_s_minus(1, t);
    for (int t = 0; t < i2; ++t) g = g.times_s_minus(2, t);
    return {{i1, i2}, g};
  }

  const std::map<Shift, Poly4>& parts() const { return parts_; }
  bool is_zero() const { return parts_.empty(); }

  std::size_t size() const {
    std::size_t n = 0;
    for (const auto& [s, g] : parts_) n += g.size();
    return n;
  }

  void add(Shift sh, const Poly4& g) {
    if (g.is_zero()) return;
    auto& slot = parts_[sh];
    slot += g;
    if (slot.is_zero()) parts_.erase(sh);
  }

  ModuleElement& operator+=(const ModuleElement& o) {
    for (const auto& [sh, g] : o.parts_) add(sh, g);
    return *this;
  }
  ModuleElement& operator-=(const ModuleElement& o) {
    for (const auto& [sh, g] : o.parts_) {
      Poly4 neg;
      for (const auto& [k, c] : g.terms()) neg.add(k, -c);
      add(sh, neg);
    }
    return *this;
  }

  ModuleElement times(const Poly4& h) const {
    ModuleElement r;
    for (const auto& [sh, g] : parts_) r.add(sh, g * h);
    return r;
  }

  void truncate(const ModuleTruncation& t, const std::vector<Rational>& slack) {
    for (auto it = parts_.begin(); it != parts_.end();) {
      auto [m, n] = it->first;
      it->second.retain([&](Poly4::Key k) { return !t.droppable(Poly4::x_part(k), m, n, slack); });
      if (it->second.is_zero())
        it = parts_.erase(it);
      else
        ++it;
    }
  }

 private:
  std::map<Shift, Poly4> parts_;
};

/// Partial derivatives of f1 and f2 as Poly4, reused by every derivative step.
struct PairDerivatives {
  Poly4 f1, f2;
  Poly4 f1_x[2], f2_x[2];

  PairDerivatives(const SparsePoly& g1, const SparsePoly& g2)
      : f1(Poly4::from_x(g1)),
        f2(Poly4::from_x(g2)),
        f1_x{Poly4::from_x(derivative(g1, 1)), Poly4::from_x(derivative(g1, 2))},
        f2_x{Poly4::from_x(derivative(g2, 1)), Poly4::from_x(derivative(g2, 2))} {}
};

/// d_var (g f1^(s1-m) f2^(s2-n)) = g_x f^.. + (s1-m) g f1_x [m+1, n] + (s2-n) g f2_x [m, n+1].
inline ModuleElement apply_d(int var, const ModuleElement& el, const PairDerivatives& pd) {
  ModuleElement r;
  int v = var - 1;
  for (const auto& [sh, g] : el.parts()) {
    auto [m, n] = sh;
    r.add(sh, g.dx(var));
    if (!pd.f1_x[v].is_zero()) r.add({m + 1, n}, (g * pd.f1_x[v]).times_s_minus(1, m));
    if (!pd.f2_x[v].is_zero()) r.add({m, n + 1}, (g * pd.f2_x[v]).times_s_minus(2, n));
  }
  return r;
}

/// P applied to el. Terms of P are grouped by derivative index and the
/// derivatives are applied by nested Horner steps. With a truncation, terms
/// whose weight stays above the cap after all pending derivatives are dropped.
inline ModuleElement apply(const WeylOperator& P, const ModuleElement& el, const PairDerivatives& pd,
                           const ModuleTruncation* trunc = nullptr) {
  std::map<std::uint32_t, std::map<std::uint32_t, Poly4>> groups;  // b1 -> b2 -> sum s^k u
  for (const auto& [k, u] : P.terms()) groups[k.b1][k.b2] += Poly4::from_x(u, k.k, k.l);
  if (groups.empty()) return {};
  auto slack = [&](std::uint32_t b1, std::uint32_t b2) {
    std::vector<Rational> s;
    if (trunc)
      for (const auto& a : trunc->systems) s.push_back(a.w1 * b1 + a.w2 * b2);
    return s;
  };
  std::uint32_t max_b1 = groups.rbegin()->first;
  ModuleElement outer;
  for (std::uint32_t b1 = max_b1 + 1; b1-- > 0;) {
    if (b1 < max_b1) {
      outer = apply_d(1, outer, pd);
      if (trunc) outer.truncate(*trunc, slack(b1, 0));
    }
    auto it = groups.find(b1);
    if (it == groups.end()) continue;
    const auto& inner_groups = it->second;
    std::uint32_t max_b2 = inner_groups.rbegin()->first;
    ModuleElement inner;
    for (std::uint32_t b2 = max_b2 + 1; b2-- > 0;) {
      if (b2 < max_b2) {
        inner = apply_d(2, inner, pd);
        if (trunc) inner.truncate(*trunc, slack(b1, b2));
      }
      auto jt = inner_groups.find(b2);
      if (jt == inner_groups.end()) continue;
      ModuleElement piece = el.times(jt->second);
      if (trunc) piece.truncate(*trunc, slack(b1, b2));
      inner += piece;
    }
    outer += inner;
  }
  return outer;
}

/// Rewrites every part at one common shift (the componentwise maximum) by
/// multiplying with powers of f1 and f2; the result represents the same
/// element, and it is zero iff the element is.
inline std::pair<ModuleElement::Shift, Poly4> common_shift(const ModuleElement& el, const PairDerivatives& pd,
                                                           const ModuleTruncation* trunc = nullptr) {
  if (el.is_zero()) return {{0, 0}, Poly4()};
  int M = el.parts().begin()->first.first, N = el.parts().begin()->first.second;
  for (const auto& [sh, g] : el.parts()) {
    M = std::max(M, sh.first);
    N = std::max(N, sh.second);
  }
  std::vector<Rational> zero_slack;
  if (trunc) zero_slack.assign(trunc->systems.size(), Rational(0));
  auto keep = [&](int m, int n) {
    return [&, m, n](Poly4::Key k) { return !trunc || !trunc->droppable(Poly4::x_part(k), m, n, zero_slack); };
  };
  Poly4 total;
  for (const auto& [sh, g] : el.parts()) {
    auto [m, n] = sh;
    Poly4 h = g;
    while (m < M) {
      h = h * pd.f1;
      ++m;
      h.retain(keep(m, n));
    }
    while (n < N) {
      h = h * pd.f2;
      ++n;
      h.retain(keep(m, n));
    }
    total += h;
  }
  return {{M, N}, total};
}

}  // namespace bsforge
