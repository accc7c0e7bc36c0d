#pragma once

// Weight raising, division and rewriting over the xi-grid, ending with an
// operator P and an exact (or weight-truncated) check of
// b(s) f1^s1 f2^s2 = P f1^(s1+1) f2^(s2+1).

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "bernstein.hpp"
#include "format.hpp"
#include "weyl.hpp"

namespace bsforge {

using GridIndex = std::pair<int, int>;

/// sum over the grid of P_(i1,i2) xi_(i1,i2).
class XiExpression {
 public:
  using Grid = std::map<GridIndex, WeylOperator>;

  const Grid& grid() const { return grid_; }
  bool is_zero() const { return grid_.empty(); }

  WeylOperator at(GridIndex g) const {
    auto it = grid_.find(g);
    return it == grid_.end() ? WeylOperator() : it->second;
  }

  void add(GridIndex g, const WeylOperator& P) {
    if (P.is_zero()) return;
    auto& slot = grid_[g];
    slot += P;
    if (slot.is_zero()) grid_.erase(g);
  }
  void add(GridIndex g, const OpKey& k, const SparsePoly& u) {
    if (u.is_zero()) return;
    WeylOperator P;
    P.add(k, u);
    add(g, P);
  }
  void add_monomial(GridIndex g, const OpKey& k, ExponentPair e, const Rational& c) {
    if (c == 0) return;
    auto& slot = grid_[g];
    slot.add_monomial(k, e, c);
    if (slot.is_zero()) grid_.erase(g);
  }
  void erase(GridIndex g) { grid_.erase(g); }

  std::size_t monomial_count() const {
    std::size_t n = 0;
    for (const auto& [g, P] : grid_) n += P.monomial_count();
    return n;
  }

  /// Largest i1 and i2 present.
  std::pair<int, int> extent() const {
    int m1 = -1, m2 = -1;
    for (const auto& [g, P] : grid_) {
      m1 = std::max(m1, g.first);
      m2 = std::max(m2, g.second);
    }
    return {m1, m2};
  }

  friend bool operator==(const XiExpression&, const XiExpression&) = default;

 private:
  Grid grid_;
};

/// Fixed data for one pair: f1, f2, J, both weight systems and the weights
/// of f1, f2 under each.
struct PairContext {
  SparsePoly f1, f2, J;
  WeightSystem alpha[2];
  Rational rho_f1[2], rho_f2[2];
  Rational a, b, c, d;
  EulerData euler;

  PairContext(const SparsePoly& g1, const SparsePoly& g2, const WeightSystem& a1, const WeightSystem& a2)
      : f1(g1), f2(g2), J(jacobian(g1, g2)), alpha{a1, a2} {
    for (int t = 0; t < 2; ++t) {
      rho_f1[t] = weight(f1, alpha[t]);
      rho_f2[t] = weight(f2, alpha[t]);
    }
    b = a1.w1;
    a = a1.w2;
    d = a2.w1;
    c = a2.w2;
    euler = euler_data(f1, f2, a1, a2);
  }

  /// rho_alpha(xi_(i1,i2)) = -i1 rho(f1) - i2 rho(f2).
  Rational xi_weight(int t, GridIndex g) const { return -rho_f1[t] * g.first - rho_f2[t] * g.second; }

  /// Weight a derivative index can remove: b1 w1 + b2 w2.
  Rational d_weight(int t, const OpKey& k) const { return alpha[t].w1 * k.b1 + alpha[t].w2 * k.b2; }

  Rational term_weight(int t, ExponentPair e, GridIndex g) const { return alpha[t].of(e) + xi_weight(t, g); }
};

/// Minimal weight over the terms of P xi_g; nullopt for P = 0.
inline std::optional<Rational> entry_weight(const PairContext& ctx, int t, const WeylOperator& P, GridIndex g) {
  std::optional<Rational> best;
  for (const auto& [k, u] : P.terms()) {
    Rational w = weight(u, ctx.alpha[t]) + ctx.xi_weight(t, g);
    if (!best || w < *best) best = w;
  }
  return best;
}

struct RaiseResult {
  XiExpression expr;  // P0 at (i1,i2), P1 at (i1+1,i2), P2 at (i1,i2+1)
  AffineFactor factor;
};

/// factor * u xi = chi~ u xi - u' xi - f_1i u xi_(i1+1,i2) - f_2i u xi_(i1,i2+1),
/// with chi~ = w1 d1 x1 + w2 d2 x2 and u' = chi(u) - rho(u) u.
inline RaiseResult apply_chi_tilde(int which, const SparsePoly& u, GridIndex g, const PairContext& ctx) {
  if (g.first < 0 || g.second < 0) throw Error(ErrorKind::InvalidArgument, "raising needs a nonnegative grid index");
  int t = which - 1;
  const WeightSystem& al = ctx.alpha[t];
  RaiseResult r;
  Rational rho = weight(u, al) + ctx.xi_weight(t, g);
  r.factor = {ctx.rho_f1[t], ctx.rho_f2[t], al.w1 + al.w2 + rho};
  r.expr.add(g, OpKey{1, 0, 0, 0}, SparsePoly::x1() * u * al.w1);
  r.expr.add(g, OpKey{0, 1, 0, 0}, SparsePoly::x2() * u * al.w2);
  SparsePoly u_prime = euler(u, al) - u * weight(u, al);
  r.expr.add(g, OpKey{}, -u_prime);
  const SparsePoly& first = which == 1 ? ctx.euler.f11 : ctx.euler.f12;
  const SparsePoly& second = which == 1 ? ctx.euler.f21 : ctx.euler.f22;
  r.expr.add({g.first + 1, g.second}, OpKey{}, -(first * u));
  r.expr.add({g.first, g.second + 1}, OpKey{}, -(second * u));
  return r;
}

struct PipelineOptions {
  /// Residual weight cap; none means exact divisions (which may not terminate).
  std::optional<Rational> cap;
  std::size_t step_budget = kDefaultStepBudget;
  BasisOptions basis;
};

/// Runtime record of one pipeline run.
struct PipelineTrace {
  std::vector<std::string> lines;
  std::size_t dropped_terms = 0;

  void log(const std::string& s) { lines.push_back(s); }
};

struct Thresholds {
  Rational t1;  // N(I1) + rho1(f2)
  Rational t2;  // N(I2) + rho2(f1)
};

inline Thresholds etape_thresholds(const PairContext& ctx) {
  auto nb = n_bounds(ctx.f1, ctx.f2, ctx.alpha[0], ctx.alpha[1]);
  return {nb.n_i1 + ctx.rho_f2[0], nb.n_i2 + ctx.rho_f1[1]};
}

/// Largest threshold plus rho1(f1) + rho2(f2).
inline Rational default_cap(const PairContext& ctx) {
  Thresholds th = etape_thresholds(ctx);
  return std::max(th.t1, th.t2) + ctx.rho_f1[0] + ctx.rho_f2[1];
}

namespace detail {

inline std::string grid_summary(const XiExpression& e) {
  auto [m1, m2] = e.extent();
  std::ostringstream os;
  os << e.grid().size() << " grid entries, " << e.monomial_count() << " monomials, extent (" << m1 << "," << m2
     << ")";
  return os.str();
}

/// Per-term cap for a coefficient of d^beta at grid g: a monomial is dropped
/// when its weight after beta derivatives still exceeds the cap in both systems.
inline std::optional<WeightCap> term_cap(const PairContext& ctx, const std::optional<Rational>& cap, const OpKey& k,
                                         GridIndex g) {
  if (!cap) return std::nullopt;
  WeightCap wc;
  for (int t = 0; t < 2; ++t) wc.also(ctx.alpha[t], *cap + ctx.d_weight(t, k) - ctx.xi_weight(t, g));
  return wc;
}

}  // namespace detail

/// Applies every factor of the two families to 1 * xi_(0,0): terms whose
/// weight matches the factor are raised, the others are multiplied through.
inline XiExpression etape1(const PairContext& ctx, const BSCandidate& cand, PipelineTrace* trace = nullptr) {
  XiExpression expr;
  expr.add({0, 0}, WeylOperator::identity());
  auto run_family = [&](int which, const std::vector<AffineFactor>& family) {
    int t = which - 1;
    const WeightSystem& al = ctx.alpha[t];
    for (const auto& F : family) {
      Rational target = F.c0 - al.w1 - al.w2;
      XiExpression next;
      std::size_t raised = 0, passed = 0;
      for (const auto& [g, P] : expr.grid()) {
        WeylOperator through;
        for (const auto& [k, u] : P.terms()) {
          SparsePoly keep;
          for (const auto& [e, coef] : u.terms()) {
            if (ctx.term_weight(t, e, g) != target) {
              keep.add_term(e, coef);
              ++passed;
              continue;
            }
            ++raised;
            auto rr = apply_chi_tilde(which, SparsePoly::monomial(e, coef), g, ctx);
            for (const auto& [g2, Q] : rr.expr.grid())
              for (const auto& [k2, q] : Q.terms())
                next.add(g2, OpKey{k.b1 + k2.b1, k.b2 + k2.b2, k.k, k.l}, q);
          }
          through.add(k, keep);
        }
        next.add(g, through.times_affine(F.c1, F.c2, F.c0));
      }
      expr = std::move(next);
      if (trace)
        trace->log("etape1: factor " + F.render() + ": raised " + std::to_string(raised) + ", passed " +
                   std::to_string(passed) + "; " + detail::grid_summary(expr));
    }
  };
  run_family(1, cand.family1);
  run_family(2, cand.family2);

  Thresholds th = etape_thresholds(ctx);
  for (const auto& [g, P] : expr.grid())
    for (const auto& [k, u] : P.terms())
      for (const auto& [e, coef] : u.terms()) {
        Rational w1 = ctx.term_weight(0, e, g), w2 = ctx.term_weight(1, e, g);
        if (w1 <= th.t1 || w2 <= th.t2)
          throw Error(ErrorKind::WeightGoalNotMet,
                      "term x^" + render_exponent(e) + " at xi" + render_exponent({std::uint32_t(g.first), std::uint32_t(g.second)}) +
                          " has weights (" + to_string(w1) + "," + to_string(w2) + "), thresholds (" +
                          to_string(th.t1) + "," + to_string(th.t2) + ")");
      }
  return expr;
}

/// Divides interior coefficients by (f1, f2) under <1 and moves the quotients
/// one step toward the boundary; afterwards only xi_(i1,-1) and xi_(-1,i2) remain.
inline XiExpression etape2(XiExpression expr, const PairContext& ctx, const PipelineOptions& opts = {},
                           PipelineTrace* trace = nullptr) {
  LocalOrder o1{ctx.alpha[0], TieBreak::PreferLowJ};
  std::vector<SparsePoly> divisors{ctx.f1, ctx.f2};
  int top = -1;
  for (const auto& [g, P] : expr.grid())
    if (g.first >= 0 && g.second >= 0) top = std::max(top, g.first + g.second);
  std::size_t divisions = 0;
  for (int level = top; level >= 0; --level) {
    for (int i1 = level; i1 >= 0; --i1) {
      GridIndex g{i1, level - i1};
      auto it = expr.grid().find(g);
      if (it == expr.grid().end()) continue;
      WeylOperator P = it->second;
      expr.erase(g);
      for (const auto& [k, u] : P.terms()) {
        DivisionOptions dopt;
        dopt.cap = detail::term_cap(ctx, opts.cap, k, g);
        dopt.step_budget = opts.step_budget;
        auto r = divide(u, divisors, o1, dopt);
        ++divisions;
        if (!r.remainder.is_zero())
          throw Error(ErrorKind::WeightGoalNotMet,
                      "coefficient at xi(" + std::to_string(g.first) + "," + std::to_string(g.second) +
                          ") is not in <f1, f2>: remainder " + render(r.remainder));
        if (trace) trace->dropped_terms += r.leftover.size();
        WeylOperator q1, q2;
        q1.add(k, r.quotients[0]);
        q2.add(k, r.quotients[1]);
        // f1 xi_(i1,i2) = (s1 - i1 + 1) xi_(i1-1,i2), and xi_(-1,i2) for i1 = 0
        if (g.first > 0)
          expr.add({g.first - 1, g.second}, q1.times_affine(1, 0, 1 - g.first));
        else
          expr.add({-1, g.second}, q1);
        if (g.second > 0)
          expr.add({g.first, g.second - 1}, q2.times_affine(0, 1, 1 - g.second));
        else
          expr.add({g.first, -1}, q2);
      }
    }
  }
  if (trace) trace->log("etape2: " + std::to_string(divisions) + " divisions; " + detail::grid_summary(expr));
  return expr;
}

struct IdealBases {
  TrackedBasis i1;  // <f1, J> under <1
  TrackedBasis i2;  // <f2, J> under <2
};

inline IdealBases ideal_bases(const PairContext& ctx, const BasisOptions& opts = {}) {
  IdealBases ib{complete_standard_basis({ctx.f1, ctx.J}, {ctx.alpha[0], TieBreak::PreferLowJ}, opts),
                complete_standard_basis({ctx.f2, ctx.J}, {ctx.alpha[1], TieBreak::PreferLowI}, opts)};
  if (ib.i1.verdict != BasisVerdict::Certified || ib.i2.verdict != BasisVerdict::Certified)
    throw Error(ErrorKind::Inconclusive, "standard bases of <f1, J>, <f2, J> not certified");
  return ib;
}

struct VerifyResult {
  enum class Kind { Zero, ZeroModuloWeight, Nonzero };
  Kind kind = Kind::Nonzero;
  std::optional<Rational> cap;
  /// Nonzero: lowest-weight residual term, as shift (m, n), exponents of x and s, coefficient.
  std::optional<std::pair<GridIndex, Poly4::Key>> witness;
  Rational witness_coefficient;
  std::size_t residual_terms = 0;
  std::size_t dropped_terms = 0;

  bool ok() const { return kind != Kind::Nonzero; }
};

inline const char* to_string(VerifyResult::Kind k) {
  switch (k) {
    case VerifyResult::Kind::Zero: return "Zero";
    case VerifyResult::Kind::ZeroModuloWeight: return "ZeroModuloWeight";
    case VerifyResult::Kind::Nonzero: return "Nonzero";
  }
  return "?";
}

/// Compares b(s) f1^s1 f2^s2 with P f1^(s1+1) f2^(s2+1) in the module of
/// symbols. With a cap, terms weighing more than the cap in both systems are
/// discarded as they appear.
inline VerifyResult verify_identity(const SparsePoly& b_expanded, const WeylOperator& P, const PairContext& ctx,
                                    const std::optional<Rational>& cap = std::nullopt) {
  PairDerivatives pd(ctx.f1, ctx.f2);
  ModuleTruncation trunc;
  if (cap) {
    trunc.cap = *cap;
    for (int t = 0; t < 2; ++t) {
      trunc.systems.push_back(ctx.alpha[t]);
      trunc.rho_f1.push_back(ctx.rho_f1[t]);
      trunc.rho_f2.push_back(ctx.rho_f2[t]);
    }
  }
  const ModuleTruncation* tp = cap ? &trunc : nullptr;
  ModuleElement diff = apply(P, ModuleElement::xi(-1, -1), pd, tp);
  diff -= ModuleElement({0, 0}, Poly4::from_s(b_expanded));
  auto [shift, total] = common_shift(diff, pd, tp);
  VerifyResult res;
  res.cap = cap;
  res.dropped_terms = trunc.dropped;
  if (tp) {
    std::vector<Rational> zero(2, Rational(0));
    total.retain([&](Poly4::Key k) { return !trunc.droppable(Poly4::x_part(k), shift.first, shift.second, zero); });
    res.dropped_terms = trunc.dropped;
  }
  res.residual_terms = total.size();
  if (total.is_zero()) {
    res.kind = res.dropped_terms == 0 ? VerifyResult::Kind::Zero : VerifyResult::Kind::ZeroModuloWeight;
    return res;
  }
  res.kind = VerifyResult::Kind::Nonzero;
  std::optional<Rational> best;
  for (const auto& [k, c] : total.terms()) {
    Rational w = ctx.alpha[0].of(Poly4::x_part(k)) - ctx.rho_f1[0] * shift.first - ctx.rho_f2[0] * shift.second;
    if (!best || w < *best || (w == *best && k < res.witness->second)) {
      best = w;
      res.witness = std::make_pair(shift, k);
      res.witness_coefficient = c;
    }
  }
  return res;
}

struct FunctionalEquationCertificate {
  BSCandidate candidate;
  WeylOperator op;
  VerifyResult residual;
  PipelineTrace trace;
};

namespace detail {

/// w (d_p A - d_q B) in right normal form, left-multiplied by the key k:
/// d_p (w A) - w_p A - d_q (w B) + w_q B.
inline void add_rewritten_j(WeylOperator& out, const OpKey& k, const SparsePoly& w, int p, const SparsePoly& A,
                            const SparsePoly& B) {
  int q = 3 - p;
  auto bump = [&](int var) {
    return var == 1 ? OpKey{k.b1 + 1, k.b2, k.k, k.l} : OpKey{k.b1, k.b2 + 1, k.k, k.l};
  };
  out.add(bump(p), w * A);
  out.add(k, -(derivative(w, p) * A));
  out.add(bump(q), -(w * B));
  out.add(k, derivative(w, q) * B);
}

}  // namespace detail

/// Descends one boundary line to xi_(-1,-1). side 1 is the column xi_(i,-1)
/// divided by I1 under <1 with D1 = d1 f2_x2 - d2 f2_x1; side 2 is the row
/// xi_(-1,i) divided by I2 under <2 with D2 = d2 f1_x1 - d1 f1_x2. The result
/// R satisfies (s_side + 1) * sum line[i] xi_i = R xi_(-1,-1).
inline WeylOperator descend_boundary(int side, std::map<int, WeylOperator> line, const PairContext& ctx,
                                     const TrackedBasis& tb, const PipelineOptions& opts = {},
                                     PipelineTrace* trace = nullptr) {
  const SparsePoly& other = side == 1 ? ctx.f2 : ctx.f1;
  int p = side;
  SparsePoly A = derivative(other, 3 - p), B = derivative(other, p);
  auto index = [&](int i) { return side == 1 ? GridIndex{i, -1} : GridIndex{-1, i}; };
  auto shift_factor = [&](const WeylOperator& v, int i) {
    return side == 1 ? v.times_affine(1, 0, 1 - i) : v.times_affine(0, 1, 1 - i);
  };
  int top = line.empty() ? -1 : line.rbegin()->first;
  WeylOperator landed;
  std::size_t divisions = 0;
  for (int i = top; i >= 0; --i) {
    WeylOperator down;
    for (const auto& [k, u] : line[i].terms()) {
      DivisionOptions dopt;
      dopt.cap = detail::term_cap(ctx, opts.cap, k, index(i));
      dopt.step_budget = opts.step_budget;
      auto r = divide(u, tb.elements, tb.order, dopt);
      ++divisions;
      if (!r.remainder.is_zero())
        throw Error(ErrorKind::WeightGoalNotMet, "coefficient on the boundary at index " + std::to_string(i) +
                                                     " is not in the ideal: remainder " + render(r.remainder));
      if (trace) trace->dropped_terms += r.leftover.size();
      auto vw = tb.to_inputs(r.quotients);
      WeylOperator v;
      v.add(k, vw[0]);
      // f xi_i = (s - i + 1) xi_(i-1); at i = 0, (s + 1) f xi_0 = (s + 1) xi_(-1,-1)
      // and (s + 1) J xi_0 = D xi_(-1,-1), so the unit factor lands on v only.
      down += shift_factor(v, i > 0 ? i : 0);
      detail::add_rewritten_j(down, k, vw[1], p, A, B);
    }
    if (i > 0)
      line[i - 1] += down;
    else
      landed = down;
  }
  if (trace)
    trace->log("etape3 " + std::string(side == 1 ? "column" : "row") + ": " + std::to_string(divisions) +
               " divisions from index " + std::to_string(top) + ", " + std::to_string(landed.monomial_count()) +
               " monomials landed");
  return landed;
}

/// Runs both boundary descents and applies the remaining unit factor to each,
/// so (s1+1)(s2+1) * expr = P xi_(-1,-1).
inline WeylOperator etape3_and_final(const XiExpression& expr, const PairContext& ctx, const IdealBases& bases,
                                     const PipelineOptions& opts = {}, PipelineTrace* trace = nullptr) {
  std::map<int, WeylOperator> column, row;
  for (const auto& [g, P] : expr.grid()) {
    if (g.first >= 0 && g.second >= 0)
      throw Error(ErrorKind::InvalidArgument, "etape 3 expects an expression on the boundary rows");
    if (g.first == -1 && g.second == -1) throw Error(ErrorKind::InvalidArgument, "unexpected xi(-1,-1) entry");
    if (g.second == -1)
      column[g.first] += P;
    else
      row[g.second] += P;
  }
  WeylOperator col = descend_boundary(1, std::move(column), ctx, bases.i1, opts, trace);
  WeylOperator rw = descend_boundary(2, std::move(row), ctx, bases.i2, opts, trace);
  WeylOperator P = col.times_affine(0, 1, 1) + rw.times_affine(1, 0, 1);
  if (trace)
    trace->log("final: operator with " + std::to_string(P.size()) + " keys, " + std::to_string(P.monomial_count()) +
               " monomials");
  return P;
}

/// a = d = 1: J is a unit, so 1 = (1/J) J and (s1+1) xi_(0,0) = (1/J) D1 xi_(-1,0);
/// the row descent then supplies (s2+1). 1/J is a truncated series unless J is
/// constant.
inline WeylOperator smooth_operator(const PairContext& ctx, const IdealBases& bases, const PipelineOptions& opts,
                                    PipelineTrace* trace = nullptr) {
  LocalOrder o1{ctx.alpha[0], TieBreak::PreferLowJ};
  DivisionOptions dopt;
  dopt.cap = detail::term_cap(ctx, opts.cap, OpKey{1, 1, 0, 0}, {0, 0});
  dopt.step_budget = opts.step_budget;
  auto r = divide(SparsePoly::constant(1), {ctx.J}, o1, dopt);
  if (!r.remainder.is_zero()) throw Error(ErrorKind::HypothesesFailed, "Jacobian is not a unit");
  if (trace) trace->dropped_terms += r.leftover.size();
  WeylOperator first;
  detail::add_rewritten_j(first, OpKey{}, r.quotients[0], 1, derivative(ctx.f2, 2), derivative(ctx.f2, 1));
  std::map<int, WeylOperator> row{{0, first}};
  return descend_boundary(2, std::move(row), ctx, bases.i2, opts, trace);
}

/// The whole construction: candidate, etapes 1-3, unit factors, verification.
inline FunctionalEquationCertificate functional_equation(const SparsePoly& f1, const SparsePoly& f2,
                                                         const WeightSystem& a1, const WeightSystem& a2,
                                                         const PipelineOptions& opts = {}) {
  FunctionalEquationCertificate cert;
  HypothesisOptions hopts;
  hopts.basis = opts.basis;
  cert.candidate = bs_candidate(check_all(f1, f2, a1, a2, hopts));
  PairContext ctx(f1, f2, a1, a2);
  auto clock = [] { return std::chrono::steady_clock::now(); };
  auto ms = [](auto d) { return std::to_string(std::chrono::duration_cast<std::chrono::milliseconds>(d).count()); };
  auto t0 = clock();
  auto ib = ideal_bases(ctx, opts.basis);
  if (cert.candidate.smooth) {
    cert.op = smooth_operator(ctx, ib, opts, &cert.trace);
  } else {
    auto e1 = etape1(ctx, cert.candidate, &cert.trace);
    cert.trace.log("etape1 done in " + ms(clock() - t0) + " ms");
    auto e2 = etape2(std::move(e1), ctx, opts, &cert.trace);
    cert.op = etape3_and_final(e2, ctx, ib, opts, &cert.trace);
  }
  cert.trace.log("construction done in " + ms(clock() - t0) + " ms; dropped " +
                 std::to_string(cert.trace.dropped_terms) + " high-weight terms");
  auto t1 = clock();
  cert.residual = verify_identity(cert.candidate.expand(), cert.op, ctx, opts.cap);
  cert.trace.log("verification " + std::string(to_string(cert.residual.kind)) + " in " + ms(clock() - t1) + " ms");
  return cert;
}

/// Structured text: one line per operator term, then the residual report.
inline std::string serialize(const FunctionalEquationCertificate& cert) {
  std::ostringstream os;
  os << "candidate " << cert.candidate.render() << "\n";
  for (const auto& [k, u] : cert.op.terms())
    os << "term d1^" << k.b1 << " d2^" << k.b2 << " s1^" << k.k << " s2^" << k.l << " : " << render(u) << "\n";
  os << "residual " << to_string(cert.residual.kind);
  if (cert.residual.cap) os << " cap " << to_string(*cert.residual.cap);
  os << "\n";
  return os.str();
}

}  // namespace bsforge
