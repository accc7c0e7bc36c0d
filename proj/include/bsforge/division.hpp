#pragma once

// Division by a finite family in the local ring, following the elementary
// division recurrence: remove the privileged term into the remainder when it
// lies outside every staircase, otherwise cancel it with the first divisor
// whose staircase contains it.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "poly.hpp"

namespace bsforge {

/// Partition of N^2 into the staircase cells of a list of exponents and the
/// complement. Cell k holds (base_k + N^2) minus the earlier cells.
class DeltaPartition {
 public:
  /// The trivial partition: one cell covering N^2.
  DeltaPartition() : bases_{{0, 0}} {}

  explicit DeltaPartition(std::vector<ExponentPair> bases) : bases_(std::move(bases)) {
    if (bases_.empty()) throw Error(ErrorKind::InvalidArgument, "partition needs at least one exponent");
  }

  const std::vector<ExponentPair>& bases() const { return bases_; }

  /// Index of the cell containing e, or nullopt for the complement.
  std::optional<std::size_t> region_of(ExponentPair e) const {
    for (std::size_t k = 0; k < bases_.size(); ++k)
      if (bases_[k].divides(e)) return k;
    return std::nullopt;
  }

  bool in_complement(ExponentPair e) const { return !region_of(e).has_value(); }

  /// The complement is finite iff both coordinate axes meet the staircase.
  bool complement_is_finite() const { return axis_bound_i().has_value() && axis_bound_j().has_value(); }

  /// Complement exponents, rows j = 0, 1, ... then i ascending. Throws
  /// Infinite when the complement is unbounded.
  std::vector<ExponentPair> complement() const {
    if (!complement_is_finite()) throw Error(ErrorKind::Infinite, "staircase misses a coordinate axis");
    std::vector<ExponentPair> out;
    for (std::uint32_t j = 0; j < *axis_bound_j(); ++j) {
      std::uint32_t limit = *axis_bound_i();
      for (const auto& b : bases_)
        if (b.j <= j) limit = std::min(limit, b.i);
      for (std::uint32_t i = 0; i < limit; ++i) out.push_back({i, j});
    }
    return out;
  }

  /// Maximal weight of a complement monomial; nullopt if the complement is
  /// infinite or empty.
  std::optional<Rational> max_complement_weight(const WeightSystem& a) const {
    if (!complement_is_finite()) return std::nullopt;
    std::optional<Rational> best;
    for (auto e : complement()) {
      Rational w = a.of(e);
      if (!best || w > *best) best = std::move(w);
    }
    return best;
  }

 private:
  std::optional<std::uint32_t> axis_bound_i() const {
    std::optional<std::uint32_t> m;
    for (const auto& b : bases_)
      if (b.j == 0 && (!m || b.i < *m)) m = b.i;
    return m;
  }
  std::optional<std::uint32_t> axis_bound_j() const {
    std::optional<std::uint32_t> m;
    for (const auto& b : bases_)
      if (b.i == 0 && (!m || b.j < *m)) m = b.j;
    return m;
  }

  std::vector<ExponentPair> bases_;
};

inline DeltaPartition partition(const std::vector<ExponentPair>& exps) { return DeltaPartition(exps); }

/// A term is dropped when its weight exceeds the bound in every listed system.
struct WeightCap {
  std::vector<std::pair<WeightSystem, Rational>> bounds;

  WeightCap() = default;
  WeightCap(const WeightSystem& a, Rational bound) { bounds.emplace_back(a, std::move(bound)); }

  WeightCap& also(const WeightSystem& a, Rational bound) {
    bounds.emplace_back(a, std::move(bound));
    return *this;
  }

  bool exceeds(ExponentPair e) const {
    if (bounds.empty()) return false;
    for (const auto& [a, b] : bounds)
      if (a.of(e) <= b) return false;
    return true;
  }

  friend bool operator==(const WeightCap&, const WeightCap&) = default;
};

inline constexpr std::size_t kDefaultStepBudget = 1'000'000;

struct DivisionOptions {
  std::optional<WeightCap> cap;
  /// Allow the certified-zero exit once this many elementary divisions ran.
  std::optional<std::size_t> certify_after;
  std::size_t step_budget = kDefaultStepBudget;
  /// Stop (status Exact, stopped_at_complement set) as soon as a privileged
  /// exponent falls outside every staircase; the pending dividend is returned
  /// in leftover. Used by basis completion.
  bool stop_at_complement = false;
};

enum class DivisionStatus { Exact, CertifiedZero, Truncated };

inline const char* to_string(DivisionStatus s) {
  switch (s) {
    case DivisionStatus::Exact: return "Exact";
    case DivisionStatus::CertifiedZero: return "CertifiedZero";
    case DivisionStatus::Truncated: return "Truncated";
  }
  return "?";
}

struct DivisionResult {
  std::vector<SparsePoly> quotients;
  SparsePoly remainder;
  DivisionStatus status = DivisionStatus::Exact;
  std::optional<WeightCap> cap;
  std::size_t steps = 0;
  /// Truncated: the discarded high-weight terms. CertifiedZero: the pending
  /// dividend whose remaining division can only feed the quotients.
  SparsePoly leftover;
  DeltaPartition delta;
  bool stopped_at_complement = false;
};

namespace detail {

struct Divisor {
  ExponentPair exp;
  Rational coeff;
  const SparsePoly* poly;
};

}  // namespace detail

inline DivisionResult divide(const SparsePoly& f, const std::vector<SparsePoly>& divisors, const LocalOrder& order,
                             const DivisionOptions& opts = {}) {
  if (divisors.empty()) throw Error(ErrorKind::InvalidArgument, "no divisors");
  std::vector<detail::Divisor> divs;
  std::vector<ExponentPair> bases;
  for (const auto& g : divisors) {
    if (g.is_zero()) throw Error(ErrorKind::InvalidArgument, "zero divisor");
    ExponentPair e = priv_exponent(g, order);
    divs.push_back({e, g.coefficient(e), &g});
    bases.push_back(e);
  }
  DeltaPartition delta(bases);
  std::optional<Rational> cert_bound;
  if (opts.certify_after) {
    cert_bound = delta.max_complement_weight(order.weights);
    // A unit divisor leaves an empty complement: nothing can reach the remainder.
    if (!cert_bound && delta.complement_is_finite()) cert_bound = Rational(-1);
  }

  DivisionResult res{std::vector<SparsePoly>(divisors.size()), {}, DivisionStatus::Exact, opts.cap, 0, {}, delta};

  using Dividend = std::map<ExponentPair, Rational, LocalOrder::Descending>;
  Dividend cur(LocalOrder::Descending{&order});
  auto add = [&](ExponentPair e, const Rational& c) {
    if (c == 0) return;
    if (opts.cap && opts.cap->exceeds(e)) {
      res.leftover.add_term(e, c);
      return;
    }
    auto [it, inserted] = cur.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) cur.erase(it);
    }
  };
  for (const auto& [e, c] : f.terms()) add(e, c);

  while (!cur.empty()) {
    if (res.steps >= opts.step_budget)
      throw Error(ErrorKind::NeedsCap, "division exceeded step budget of " + std::to_string(opts.step_budget));
    auto top = cur.begin();
    ExponentPair e = top->first;
    if (cert_bound && res.leftover.is_zero() && res.steps >= *opts.certify_after &&
        order.weights.of(e) > *cert_bound) {
      // Every later privileged exponent weighs at least this much, so none
      // can fall in the complement again.
      res.status = DivisionStatus::CertifiedZero;
      res.leftover = SparsePoly();
      for (const auto& [pe, pc] : cur) res.leftover.add_term(pe, pc);
      return res;
    }
    Rational c = top->second;
    ++res.steps;
    auto k = delta.region_of(e);
    if (!k) {
      if (opts.stop_at_complement) {
        --res.steps;
        res.stopped_at_complement = true;
        for (const auto& [pe, pc] : cur) res.leftover.add_term(pe, pc);
        return res;
      }
      res.remainder.add_term(e, c);
      cur.erase(top);
      continue;
    }
    const auto& d = divs[*k];
    Rational scale = c / d.coeff;
    ExponentPair shift = e - d.exp;
    res.quotients[*k].add_term(shift, scale);
    cur.erase(top);
    for (const auto& [ge, gc] : d.poly->terms()) {
      if (ge == d.exp) continue;
      add(ge + shift, -scale * gc);
    }
  }
  if (!res.leftover.is_zero()) res.status = DivisionStatus::Truncated;
  return res;
}

/// Convenience form: single-weight cap measured in the order's own weights.
inline DivisionResult divide(const SparsePoly& f, const std::vector<SparsePoly>& divisors, const LocalOrder& order,
                             std::optional<Rational> cap, std::size_t step_budget = kDefaultStepBudget) {
  DivisionOptions opts;
  if (cap) opts.cap = WeightCap(order.weights, *cap);
  opts.step_budget = step_budget;
  return divide(f, divisors, order, opts);
}

/// Sum of q_k * g_k + remainder.
inline SparsePoly reconstruct(const DivisionResult& r, const std::vector<SparsePoly>& divisors) {
  SparsePoly s = r.remainder;
  for (std::size_t k = 0; k < divisors.size(); ++k) s += r.quotients[k] * divisors[k];
  return s;
}

}  // namespace bsforge
