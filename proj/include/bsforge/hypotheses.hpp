#pragma once

// Conditions (1)-(6) on a pair (f1, f2) with weight systems a1 = (b, a) and
// a2 = (d, c): the axis exponents, the weights of f1 and f2, bc > ad, and
// finite colength plus initial-ideal equality for <f1, J> and <f2, J>.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "standard_basis.hpp"

namespace bsforge {

enum class Verdict { Pass, Fail, Inconclusive };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

struct ConditionResult {
  Verdict verdict = Verdict::Inconclusive;
  std::string detail;
};

/// Witness data for conditions (5) and (6).
struct IdealWitness {
  std::vector<SparsePoly> basis;           // standard basis of <f, J>
  std::vector<ExponentPair> staircase;     // privileged exponents
  std::optional<Cobase> cobase;
  std::vector<SparsePoly> initial_forms;   // of the basis elements
  std::vector<SparsePoly> initial_pair;    // in(f), in(J)
};

struct HypothesisReport {
  std::array<ConditionResult, 6> conditions;
  WeightSystem alpha1, alpha2;
  Rational a, b, c, d;
  Rational bc_minus_ad;
  SparsePoly f1, f2, jacobian;
  IdealWitness ideal1, ideal2;

  bool passed() const {
    for (const auto& c : conditions)
      if (c.verdict != Verdict::Pass) return false;
    return true;
  }
  bool failed() const {
    for (const auto& c : conditions)
      if (c.verdict == Verdict::Fail) return true;
    return false;
  }
  bool inconclusive() const { return !passed() && !failed(); }
  /// Integer a and d as required by the construction; valid when (1) passed.
  unsigned a_int() const { return static_cast<unsigned>(a.get_num().get_ui()); }
  unsigned d_int() const { return static_cast<unsigned>(d.get_num().get_ui()); }
};

struct HypothesisOptions {
  BasisOptions basis;
  std::size_t max_generators = 64;
};

namespace detail {

inline bool positive_integer(const Rational& r) { return is_integer(r) && r > 0 && r.get_num().fits_uint_p(); }

inline void fill_constants(HypothesisReport& rep, const SparsePoly& f1, const SparsePoly& f2,
                           const WeightSystem& a1, const WeightSystem& a2) {
  if (collinear(a1, a2)) throw Error(ErrorKind::CollinearWeights, "weight systems are proportional");
  rep.alpha1 = a1;
  rep.alpha2 = a2;
  rep.b = a1.w1;
  rep.a = a1.w2;
  rep.d = a2.w1;
  rep.c = a2.w2;
  rep.bc_minus_ad = rep.b * rep.c - rep.a * rep.d;
  rep.f1 = f1;
  rep.f2 = f2;
  rep.jacobian = jacobian(f1, f2);
}

inline void check_first_four(HypothesisReport& rep) {
  auto& c = rep.conditions;
  // (1)
  if (!positive_integer(rep.a) || !positive_integer(rep.d)) {
    c[0] = {Verdict::Fail, "a = " + to_string(rep.a) + " and d = " + to_string(rep.d) + " must be positive integers"};
  } else {
    ExponentPair ea{rep.a_int(), 0}, ed{0, rep.d_int()};
    bool in1 = rep.f1.coefficient(ea) != 0, in2 = rep.f2.coefficient(ed) != 0;
    std::string w = "(" + to_string(rep.a) + ",0) in DN(f1): " + (in1 ? "yes" : "no") + "; (0," + to_string(rep.d) +
                    ") in DN(f2): " + (in2 ? "yes" : "no");
    c[0] = {in1 && in2 ? Verdict::Pass : Verdict::Fail, w};
  }
  // (2), (3)
  auto weight_check = [](const SparsePoly& f, const WeightSystem& al, const Rational& want, const char* name) {
    if (f.is_zero()) return ConditionResult{Verdict::Fail, std::string(name) + " is zero"};
    Rational r = weight(f, al);
    return ConditionResult{r == want ? Verdict::Pass : Verdict::Fail,
                           std::string("weight of ") + name + " = " + to_string(r) + ", expected " + to_string(want)};
  };
  c[1] = weight_check(rep.f1, rep.alpha1, rep.a * rep.b, "f1");
  c[2] = weight_check(rep.f2, rep.alpha2, rep.c * rep.d, "f2");
  // (4)
  c[3] = {rep.bc_minus_ad > 0 ? Verdict::Pass : Verdict::Fail, "bc - ad = " + to_string(rep.bc_minus_ad)};
}

/// True when every element reduces to zero against a standard basis of the
/// ideal spanned by `pair`. Quasi-homogeneous inputs keep every division
/// inside a finite weight slice, so this terminates.
inline std::optional<bool> contained_in(const std::vector<SparsePoly>& elements, const std::vector<SparsePoly>& pair,
                                        const LocalOrder& order, const HypothesisOptions& opts) {
  auto tb = complete_standard_basis(pair, order, opts.basis, opts.max_generators);
  if (tb.verdict != BasisVerdict::Certified) return std::nullopt;
  for (const auto& g : elements) {
    auto z = reduces_to_zero(g, tb.elements, order, opts.basis);
    if (!z) return std::nullopt;
    if (!*z) return false;
  }
  return true;
}

inline ConditionResult finish_ideal_condition(IdealWitness& w, const std::vector<SparsePoly>& basis,
                                              const LocalOrder& order) {
  w.basis = basis;
  w.staircase.clear();
  w.initial_forms.clear();
  for (const auto& g : basis) {
    w.staircase.push_back(priv_exponent(g, order));
    w.initial_forms.push_back(initial_form(g, order.weights));
  }
  DeltaPartition delta(w.staircase);
  if (!delta.complement_is_finite()) return {Verdict::Fail, "staircase misses an axis: infinite colength"};
  w.cobase = Cobase{delta.complement()};
  return {Verdict::Pass, "colength " + std::to_string(w.cobase->colength())};
}

inline ConditionResult check_ideal(IdealWitness& w, const SparsePoly& f, const SparsePoly& j, const LocalOrder& order,
                                   const HypothesisOptions& opts) {
  if (j.is_zero()) return {Verdict::Fail, "Jacobian is zero"};
  auto tb = complete_standard_basis({f, j}, order, opts.basis, opts.max_generators);
  if (tb.verdict != BasisVerdict::Certified) return {Verdict::Inconclusive, "standard basis: " + tb.message};
  auto res = finish_ideal_condition(w, tb.elements, order);
  if (res.verdict != Verdict::Pass) return res;
  w.initial_pair = {initial_form(f, order.weights), initial_form(j, order.weights)};
  auto inside = contained_in(w.initial_forms, w.initial_pair, order, opts);
  if (!inside) return {Verdict::Inconclusive, "initial ideal membership truncated"};
  if (!*inside) return {Verdict::Fail, "initial ideal is larger than <in(f), in(J)>"};
  res.detail += "; initial ideal generated by in(f), in(J)";
  return res;
}

}  // namespace detail

inline LocalOrder order1(const WeightSystem& a1) { return {a1, TieBreak::PreferLowJ}; }
inline LocalOrder order2(const WeightSystem& a2) { return {a2, TieBreak::PreferLowI}; }

inline HypothesisReport check_all(const SparsePoly& f1, const SparsePoly& f2, const WeightSystem& a1,
                                  const WeightSystem& a2, const HypothesisOptions& opts = {}) {
  HypothesisReport rep;
  detail::fill_constants(rep, f1, f2, a1, a2);
  detail::check_first_four(rep);
  rep.conditions[4] = detail::check_ideal(rep.ideal1, f1, rep.jacobian, order1(a1), opts);
  rep.conditions[5] = detail::check_ideal(rep.ideal2, f2, rep.jacobian, order2(a2), opts);
  return rep;
}

/// f1 = x1^a + x2^b + g1, f2 = x1^c + x2^d + g2.
inline std::pair<SparsePoly, SparsePoly> binomial_pair(unsigned a, unsigned b, unsigned c, unsigned d,
                                                       const SparsePoly& g1 = {}, const SparsePoly& g2 = {}) {
  return {SparsePoly::x1(a) + SparsePoly::x2(b) + g1, SparsePoly::x1(c) + SparsePoly::x2(d) + g2};
}

/// Checks (5) and (6) through the explicit bases {f1, J, K} and {f2, J, K'}
/// with K = x2^(d-1) f1 - x1 J / ad and K' = x1^(a-1) f2 - x2 J / ad.
inline HypothesisReport prop1_fast_path(unsigned a, unsigned b, unsigned c, unsigned d, const SparsePoly& g1 = {},
                                        const SparsePoly& g2 = {}, const HypothesisOptions& opts = {}) {
  if (a == 0 || b == 0 || c == 0 || d == 0) throw Error(ErrorKind::InvalidArgument, "a, b, c, d must be positive");
  if (b * c <= a * d) throw Error(ErrorKind::InvalidArgument, "requires bc > ad");
  WeightSystem a1(b, a), a2(d, c);
  if (!g1.is_zero() && weight(g1, a1) <= a * b)
    throw Error(ErrorKind::InvalidArgument, "g1 must have weight above ab");
  if (!g2.is_zero() && weight(g2, a2) <= c * d)
    throw Error(ErrorKind::InvalidArgument, "g2 must have weight above cd");

  auto [f1, f2] = binomial_pair(a, b, c, d, g1, g2);
  HypothesisReport rep;
  detail::fill_constants(rep, f1, f2, a1, a2);
  detail::check_first_four(rep);

  Rational ad(a * d);
  SparsePoly jm = rep.jacobian * Rational(1 / ad);
  SparsePoly inj = SparsePoly::monomial({a - 1, d - 1});

  auto fast = [&](IdealWitness& w, const SparsePoly& f, const SparsePoly& k, const LocalOrder& o,
                  const SparsePoly& expected_ink) -> ConditionResult {
    auto chk = is_standard_basis({f, jm, k}, o, opts.basis);
    if (chk.verdict == BasisVerdict::Inconclusive) return {Verdict::Inconclusive, chk.message};
    if (chk.verdict == BasisVerdict::NotStandard) return {Verdict::Fail, chk.message};
    auto res = detail::finish_ideal_condition(w, chk.certificate->generators, o);
    if (res.verdict != Verdict::Pass) return res;
    w.initial_pair = {initial_form(f, o.weights), initial_form(jm, o.weights)};
    if (w.initial_pair[1] != inj || w.initial_forms[2] != expected_ink)
      return {Verdict::Fail, "unexpected initial forms"};
    res.detail += "; in(K) = x^m in(f) - x in(J) explicitly";
    return res;
  };

  SparsePoly k1 = SparsePoly::x2(d - 1) * f1 - SparsePoly::x1() * jm;
  // x2^(d-1) in(f1) - x1 in(J)/ad = x2^(b+d-1)
  rep.conditions[4] = fast(rep.ideal1, f1, k1, order1(a1), SparsePoly::x2(b + d - 1));
  SparsePoly k2 = SparsePoly::x1(a - 1) * f2 - SparsePoly::x2() * jm;
  rep.conditions[5] = fast(rep.ideal2, f2, k2, order2(a2), SparsePoly::x1(a + c - 1));
  return rep;
}

}  // namespace bsforge
