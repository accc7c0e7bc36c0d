#pragma once

// S-functions, the Buchberger criterion for local orders, basis completion
// with cofactor tracking, staircases and monomial cobases.

#include <cstddef>
#include <deque>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "division.hpp"

namespace bsforge {

/// x^(m - exp f) / cp(f) * f - x^(m - exp g) / cp(g) * g with m = lcm of the
/// privileged exponents, so the privileged terms cancel.
inline SparsePoly s_function(const SparsePoly& f, const SparsePoly& g, const LocalOrder& order) {
  ExponentPair ef = priv_exponent(f, order), eg = priv_exponent(g, order);
  ExponentPair m = lcm(ef, eg);
  SparsePoly s;
  s.add_scaled(f, Rational(1 / f.coefficient(ef)), m - ef);
  s.add_scaled(g, Rational(-1 / g.coefficient(eg)), m - eg);
  return s;
}

struct SPairReduction {
  std::size_t first = 0;
  std::size_t second = 0;
  DivisionResult result;
};

struct StandardBasisCertificate {
  std::vector<SparsePoly> generators;  // monic
  std::vector<Rational> scalings;      // generator = input / scaling
  LocalOrder order;
  std::vector<SPairReduction> spair_reductions;
};

enum class BasisVerdict { Certified, NotStandard, Inconclusive };

inline const char* to_string(BasisVerdict v) {
  switch (v) {
    case BasisVerdict::Certified: return "Certified";
    case BasisVerdict::NotStandard: return "NotStandard";
    case BasisVerdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

struct StandardBasisCheck {
  BasisVerdict verdict = BasisVerdict::Inconclusive;
  std::optional<StandardBasisCertificate> certificate;
  /// Offending pair and its nonzero (or unfinished) remainder.
  std::optional<std::pair<std::size_t, std::size_t>> pair;
  SparsePoly remainder;
  std::string message;

  bool ok() const { return verdict == BasisVerdict::Certified; }
};

struct BasisOptions {
  std::optional<WeightCap> cap;
  std::size_t certify_after = 256;
  std::size_t step_budget = 200'000;
};

namespace detail {

inline DivisionOptions spair_division_options(const BasisOptions& o) {
  DivisionOptions d;
  d.cap = o.cap;
  d.certify_after = o.certify_after;
  d.step_budget = o.step_budget;
  return d;
}

}  // namespace detail

inline StandardBasisCheck is_standard_basis(const std::vector<SparsePoly>& gens, const LocalOrder& order,
                                            const BasisOptions& opts = {}) {
  StandardBasisCheck out;
  StandardBasisCertificate cert;
  cert.order = order;
  for (const auto& g : gens) {
    if (g.is_zero()) throw Error(ErrorKind::InvalidArgument, "zero generator");
    Rational c = priv_coefficient(g, order);
    cert.generators.push_back(g * Rational(1 / c));
    cert.scalings.push_back(c);
  }
  auto dopts = detail::spair_division_options(opts);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      SparsePoly s = s_function(cert.generators[i], cert.generators[j], order);
      DivisionResult r;
      try {
        r = divide(s, cert.generators, order, dopts);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::NeedsCap) throw;
        r.status = DivisionStatus::Truncated;
        r.leftover = s;
      }
      if (r.status == DivisionStatus::Truncated) {
        out.verdict = BasisVerdict::Inconclusive;
        out.pair = {i, j};
        out.remainder = r.leftover;
        out.message = "reduction of S-function " + std::to_string(i) + "," + std::to_string(j) +
                      " was truncated before certification";
        return out;
      }
      if (!r.remainder.is_zero()) {
        out.verdict = BasisVerdict::NotStandard;
        out.pair = {i, j};
        out.remainder = r.remainder;
        out.message = "S-function of generators " + std::to_string(i) + " and " + std::to_string(j) +
                      " has a nonzero remainder";
        return out;
      }
      cert.spair_reductions.push_back({i, j, std::move(r)});
    }
  }
  out.verdict = BasisVerdict::Certified;
  out.certificate = std::move(cert);
  return out;
}

/// A basis of an ideal where each element is recorded as a combination of
/// the original generators: elements[k] = sum_m cofactors[k][m] * inputs[m].
struct TrackedBasis {
  std::vector<SparsePoly> inputs;
  std::vector<SparsePoly> elements;
  std::vector<std::vector<SparsePoly>> cofactors;
  LocalOrder order;
  std::optional<StandardBasisCertificate> certificate;
  BasisVerdict verdict = BasisVerdict::Inconclusive;
  std::string message;

  /// Rewrites element quotients q_k (sum q_k elements[k]) as input quotients.
  std::vector<SparsePoly> to_inputs(const std::vector<SparsePoly>& quotients) const {
    std::vector<SparsePoly> out(inputs.size());
    for (std::size_t k = 0; k < elements.size() && k < quotients.size(); ++k) {
      if (quotients[k].is_zero()) continue;
      for (std::size_t m = 0; m < inputs.size(); ++m)
        if (!cofactors[k][m].is_zero()) out[m] += quotients[k] * cofactors[k][m];
    }
    return out;
  }
};

/// Buchberger-style completion for a local order. An S-function whose
/// division reaches an exponent outside the current staircase contributes the
/// partially reduced element as a new generator; completion stops once every
/// pair reduces to zero.
inline TrackedBasis complete_standard_basis(const std::vector<SparsePoly>& inputs, const LocalOrder& order,
                                            const BasisOptions& opts = {}, std::size_t max_generators = 64) {
  TrackedBasis tb;
  tb.inputs = inputs;
  tb.order = order;
  for (std::size_t m = 0; m < inputs.size(); ++m) {
    if (inputs[m].is_zero()) throw Error(ErrorKind::InvalidArgument, "zero generator");
    Rational c = priv_coefficient(inputs[m], order);
    tb.elements.push_back(inputs[m] * Rational(1 / c));
    std::vector<SparsePoly> cof(inputs.size());
    cof[m] = SparsePoly::constant(Rational(1 / c));
    tb.cofactors.push_back(std::move(cof));
  }

  std::deque<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < tb.elements.size(); ++i)
    for (std::size_t j = i + 1; j < tb.elements.size(); ++j) pairs.emplace_back(i, j);

  DivisionOptions stop_opts;
  stop_opts.cap = opts.cap;
  stop_opts.step_budget = opts.step_budget;
  stop_opts.stop_at_complement = true;
  stop_opts.certify_after = opts.certify_after;

  while (!pairs.empty()) {
    auto [i, j] = pairs.front();
    pairs.pop_front();
    const SparsePoly& gi = tb.elements[i];
    const SparsePoly& gj = tb.elements[j];
    ExponentPair ei = priv_exponent(gi, order), ej = priv_exponent(gj, order);
    ExponentPair m = lcm(ei, ej);
    SparsePoly s = s_function(gi, gj, order);
    if (s.is_zero()) continue;
    DivisionResult r;
    try {
      r = divide(s, tb.elements, order, stop_opts);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NeedsCap) throw;
      tb.verdict = BasisVerdict::Inconclusive;
      tb.message = "step budget exhausted during completion";
      return tb;
    }
    if (r.status == DivisionStatus::Truncated) {
      tb.verdict = BasisVerdict::Inconclusive;
      tb.message = "completion hit the weight cap";
      return tb;
    }
    if (!r.stopped_at_complement) continue;  // reduces to zero
    if (tb.elements.size() >= max_generators) {
      tb.verdict = BasisVerdict::Inconclusive;
      tb.message = "generator limit reached";
      return tb;
    }
    // h = s - sum q_k g_k, tracked through the input cofactors.
    SparsePoly h = r.leftover;
    Rational ch = priv_coefficient(h, order);
    std::vector<SparsePoly> cof(inputs.size());
    for (std::size_t t = 0; t < inputs.size(); ++t) {
      SparsePoly c;
      c.add_scaled(tb.cofactors[i][t], Rational(1), m - ei);
      c.add_scaled(tb.cofactors[j][t], Rational(-1), m - ej);
      for (std::size_t k = 0; k < tb.elements.size(); ++k)
        if (!r.quotients[k].is_zero()) c -= r.quotients[k] * tb.cofactors[k][t];
      cof[t] = c * Rational(1 / ch);
    }
    std::size_t n = tb.elements.size();
    tb.elements.push_back(h * Rational(1 / ch));
    tb.cofactors.push_back(std::move(cof));
    for (std::size_t k = 0; k < n; ++k) pairs.emplace_back(k, n);
  }

  auto check = is_standard_basis(tb.elements, order, opts);
  tb.verdict = check.verdict;
  tb.message = check.message;
  tb.certificate = std::move(check.certificate);
  return tb;
}

struct Cobase {
  std::vector<ExponentPair> monomials;

  std::size_t colength() const { return monomials.size(); }
};

/// Monomials outside the staircase of the privileged exponents. Throws
/// Infinite when the staircase misses an axis.
inline Cobase cobase(const std::vector<SparsePoly>& gens, const LocalOrder& order) {
  std::vector<ExponentPair> exps;
  for (const auto& g : gens) exps.push_back(priv_exponent(g, order));
  return Cobase{DeltaPartition(exps).complement()};
}

inline Cobase cobase(const StandardBasisCertificate& cert) { return cobase(cert.generators, cert.order); }

inline std::vector<SparsePoly> initial_ideal_generators(const StandardBasisCertificate& cert, const WeightSystem& a) {
  std::vector<SparsePoly> out;
  for (const auto& g : cert.generators) out.push_back(initial_form(g, a));
  return out;
}

/// Ideal membership against a certified basis: remainder zero (Exact or
/// CertifiedZero). Returns nullopt when the division was truncated.
inline std::optional<bool> reduces_to_zero(const SparsePoly& f, const std::vector<SparsePoly>& basis,
                                           const LocalOrder& order, const BasisOptions& opts = {}) {
  if (f.is_zero()) return true;
  auto r = divide(f, basis, order, detail::spair_division_options(opts));
  if (r.status == DivisionStatus::Truncated) return std::nullopt;
  return r.remainder.is_zero();
}

}  // namespace bsforge
