#pragma once

// The explicit candidate b(s1, s2) = (s1+1)(s2+1) prod (ab s1 + ad s2 + a+b+r)
// prod (ad s1 + cd s2 + c+d+r), its Euler-operator data and weight sets.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "format.hpp"
#include "hypotheses.hpp"

namespace bsforge {

/// c1 s1 + c2 s2 + c0.
struct AffineFactor {
  Rational c1, c2, c0;

  friend bool operator==(const AffineFactor&, const AffineFactor&) = default;

  bool is_constant() const { return c1 == 0 && c2 == 0; }
  bool is_homogeneous() const { return c0 == 0; }

  /// Scaled so the first nonzero coefficient among (c1, c2, c0) is 1.
  AffineFactor normalized() const {
    Rational lead = c1 != 0 ? c1 : (c2 != 0 ? c2 : c0);
    if (lead == 0) return *this;
    return {c1 / lead, c2 / lead, c0 / lead};
  }

  bool proportional(const AffineFactor& o) const { return normalized() == o.normalized(); }

  AffineFactor homogeneous_part() const { return {c1, c2, 0}; }

  /// As a polynomial in (s1, s2), exponents stored in ExponentPair slots.
  SparsePoly as_poly() const { return SparsePoly{{{1, 0}, c1}, {{0, 1}, c2}, {{0, 0}, c0}}; }

  std::string render() const { return bsforge::render(as_poly(), "s1", "s2", "+", "-"); }
};

inline bool operator<(const AffineFactor& x, const AffineFactor& y) {
  if (x.c1 != y.c1) return x.c1 < y.c1;
  if (x.c2 != y.c2) return x.c2 < y.c2;
  return x.c0 < y.c0;
}

/// A scalar times a product of affine factors.
struct FactoredPoly {
  Rational scalar = 1;
  std::vector<AffineFactor> factors;

  SparsePoly expand() const {
    SparsePoly p = SparsePoly::constant(scalar);
    for (const auto& f : factors) p = p * f.as_poly();
    return p;
  }

  std::size_t degree() const {
    std::size_t n = 0;
    for (const auto& f : factors)
      if (!f.is_constant()) ++n;
    return n;
  }

  /// Normalized non-constant factors with multiplicities.
  std::map<AffineFactor, unsigned> multiset() const {
    std::map<AffineFactor, unsigned> m;
    for (const auto& f : factors)
      if (!f.is_constant()) ++m[f.normalized()];
    return m;
  }

  /// Distinct normalized factors (the zero set of the product).
  std::vector<AffineFactor> radical() const {
    std::vector<AffineFactor> out;
    for (const auto& [f, k] : multiset()) out.push_back(f);
    return out;
  }

  std::string render() const {
    std::vector<std::string> parts;
    if (scalar != 1) parts.push_back(to_string(scalar));
    for (std::size_t k = 0; k < factors.size();) {
      std::size_t run = 1;
      while (k + run < factors.size() && factors[k + run] == factors[k]) ++run;
      parts.push_back("(" + factors[k].render() + ")" + (run > 1 ? "^" + std::to_string(run) : ""));
      k += run;
    }
    return parts.empty() ? "1" : join(parts, "*");
  }
};

/// Linear factors are irreducible, so divisibility of nonzero products is
/// inclusion of the normalized factor multisets.
inline bool divides(const FactoredPoly& p, const FactoredPoly& q) {
  if (q.scalar == 0) return true;
  if (p.scalar == 0) return false;
  auto mp = p.multiset(), mq = q.multiset();
  for (const auto& [f, k] : mp) {
    auto it = mq.find(f);
    if (it == mq.end() || it->second < k) return false;
  }
  return true;
}

struct EulerData {
  SparsePoly f11, f12, f21, f22;  // f_ij = chi_i(f_j) - rho_i(f_j) f_j
};

inline EulerData euler_data(const SparsePoly& f1, const SparsePoly& f2, const WeightSystem& a1,
                            const WeightSystem& a2) {
  auto combo = [](const SparsePoly& f, const WeightSystem& a) { return euler(f, a) - f * weight(f, a); };
  return {combo(f1, a1), combo(f1, a2), combo(f2, a1), combo(f2, a2)};
}

/// The eight weight inequalities satisfied by the Euler data; zero entries
/// satisfy them vacuously.
inline bool euler_inequalities_hold(const EulerData& e, const SparsePoly& f1, const SparsePoly& f2,
                                    const WeightSystem& a1, const WeightSystem& a2) {
  auto gt = [](const SparsePoly& g, const SparsePoly& f, const WeightSystem& a) {
    return g.is_zero() || weight(g, a) > weight(f, a);
  };
  auto ge = [](const SparsePoly& g, const SparsePoly& f, const WeightSystem& a) {
    return g.is_zero() || weight(g, a) >= weight(f, a);
  };
  return gt(e.f11, f1, a1) && gt(e.f11, f1, a2) && ge(e.f12, f1, a1) && gt(e.f12, f1, a2) && gt(e.f21, f2, a1) &&
         ge(e.f21, f2, a2) && gt(e.f22, f2, a1) && gt(e.f22, f2, a2);
}

struct NBounds {
  Rational n_i1;  // rho1(f1) + rho1(J) - (a + b)
  Rational n_i2;  // rho2(f2) + rho2(J) - (c + d)
  Rational n1;    // 2ab + ad - 2a - 2b
  Rational n2;    // 2cd + ad - 2c - 2d
};

inline NBounds n_bounds(const SparsePoly& f1, const SparsePoly& f2, const WeightSystem& a1, const WeightSystem& a2) {
  const Rational &b = a1.w1, &a = a1.w2, &d = a2.w1, &c = a2.w2;
  SparsePoly j = jacobian(f1, f2);
  NBounds n;
  n.n_i1 = weight(f1, a1) + weight(j, a1) - (a + b);
  n.n_i2 = weight(f2, a2) + weight(j, a2) - (c + d);
  n.n1 = 2 * a * b + a * d - 2 * a - 2 * b;
  n.n2 = 2 * c * d + a * d - 2 * c - 2 * d;
  return n;
}

/// Distinct values w1 i + w2 j <= bound, ascending.
inline std::vector<Rational> w_set(const WeightSystem& a, const Rational& bound) {
  std::set<Rational> vals;
  if (bound < 0) return {};
  for (std::uint32_t i = 0; a.w1 * i <= bound; ++i)
    for (std::uint32_t j = 0; a.of({i, j}) <= bound; ++j) vals.insert(a.of({i, j}));
  return {vals.begin(), vals.end()};
}

struct BSCandidate {
  std::vector<AffineFactor> unit_factors;  // s1 + 1, s2 + 1
  std::vector<AffineFactor> family1;
  std::vector<AffineFactor> family2;
  std::vector<Rational> w1, w2;
  Rational bound1, bound2;  // N1 + rho1(f2), N2 + rho2(f1)
  NBounds bounds;
  WeightSystem alpha1, alpha2;
  bool smooth = false;  // a = d = 1

  FactoredPoly factored() const {
    FactoredPoly p;
    for (const auto* fam : {&unit_factors, &family1, &family2}) p.factors.insert(p.factors.end(), fam->begin(), fam->end());
    return p;
  }

  SparsePoly expand() const { return factored().expand(); }
  std::size_t degree() const { return unit_factors.size() + family1.size() + family2.size(); }

  /// "(s1+1)*(s2+1)*prod[(6*s1+4*s2+5+r) for r in {0,2,...}]*..."
  std::string render() const {
    std::string out = "(s1+1)*(s2+1)";
    auto fam = [&](const std::vector<AffineFactor>& f, const std::vector<Rational>& ws) {
      if (f.empty()) return;
      AffineFactor base = f.front();
      base.c0 -= ws.front();
      std::string head = base.render();
      std::vector<std::string> rs;
      for (const auto& w : ws) rs.push_back(to_string(w));
      out += "*prod[(" + head + "+r) for r in {" + join(rs, ",") + "}]";
    };
    fam(family1, w1);
    fam(family2, w2);
    return out;
  }
};

inline AffineFactor unit_factor(int which) {
  return which == 1 ? AffineFactor{1, 0, 1} : AffineFactor{0, 1, 1};
}

/// Builds the candidate from a passing hypothesis report.
inline BSCandidate bs_candidate(const HypothesisReport& rep) {
  if (rep.failed()) {
    std::string why;
    for (std::size_t k = 0; k < rep.conditions.size(); ++k)
      if (rep.conditions[k].verdict == Verdict::Fail)
        why += (why.empty() ? "" : "; ") + std::string("(") + std::to_string(k + 1) + ") " + rep.conditions[k].detail;
    throw Error(ErrorKind::HypothesesFailed, why);
  }
  if (!rep.passed()) throw Error(ErrorKind::Inconclusive, "hypotheses could not be certified");
  BSCandidate bc;
  bc.alpha1 = rep.alpha1;
  bc.alpha2 = rep.alpha2;
  bc.unit_factors = {unit_factor(1), unit_factor(2)};
  bc.bounds = n_bounds(rep.f1, rep.f2, rep.alpha1, rep.alpha2);
  if (rep.a == 1 && rep.d == 1) {
    bc.smooth = true;
    return bc;
  }
  const Rational &a = rep.a, &b = rep.b, &c = rep.c, &d = rep.d;
  Rational r1f1 = weight(rep.f1, rep.alpha1), r1f2 = weight(rep.f2, rep.alpha1);
  Rational r2f1 = weight(rep.f1, rep.alpha2), r2f2 = weight(rep.f2, rep.alpha2);
  bc.bound1 = bc.bounds.n1 + r1f2;
  bc.bound2 = bc.bounds.n2 + r2f1;
  bc.w1 = w_set(rep.alpha1, bc.bound1);
  bc.w2 = w_set(rep.alpha2, bc.bound2);
  for (const auto& r : bc.w1) bc.family1.push_back({r1f1, r1f2, a + b + r});
  for (const auto& r : bc.w2) bc.family2.push_back({r2f1, r2f2, c + d + r});
  return bc;
}

inline BSCandidate bs_candidate(const SparsePoly& f1, const SparsePoly& f2, const WeightSystem& a1,
                                const WeightSystem& a2, const HypothesisOptions& opts = {}) {
  return bs_candidate(check_all(f1, f2, a1, a2, opts));
}

/// Top-degree part: s1 s2 (ab s1 + ad s2)^|W1| (ad s1 + cd s2)^|W2|.
inline FactoredPoly final_part(const BSCandidate& b) {
  FactoredPoly p;
  for (const auto* fam : {&b.unit_factors, &b.family1, &b.family2})
    for (const auto& f : *fam) p.factors.push_back(f.homogeneous_part());
  return p;
}

}  // namespace bsforge
