// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <bsforge/hf_geometry.hpp>
#include <bsforge/weyl_verify.hpp>

using namespace bsforge;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

struct Criterion {
  int id;
  std::string name;
  double seconds;  // time limit
  std::function<Outcome()> run;
};

std::vector<Rational> rationals(std::initializer_list<int> xs) {
  std::vector<Rational> out;
  for (int x : xs) out.emplace_back(x);
  return out;
}

std::vector<AffineFactor> family(const Rational& c1, const Rational& c2, const Rational& c0,
                                 const std::vector<Rational>& ws) {
  std::vector<AffineFactor> out;
  for (const auto& w : ws) out.push_back({c1, c2, c0 + w});
  return out;
}

SparsePoly s_poly(std::initializer_list<std::pair<const ExponentPair, Rational>> t) { return SparsePoly(t); }

Outcome example1() {
  Outcome o;
  SparsePoly f1 = SparsePoly::x1(), f2 = SparsePoly::x1(3) + SparsePoly::x2(2);
  WeightSystem a1(2, 1), a2(2, 3);
  auto cand = bs_candidate(f1, f2, a1, a2);
  o.require(cand.bounds.n_i2 == 4, "N2 = " + to_string(cand.bounds.n_i2));
  o.require(cand.w2 == rationals({0, 2, 3, 4, 5, 6}), "W2 mismatch");
  o.require(cand.family2 == family(2, 6, 5, rationals({0, 2, 3, 4, 5, 6})), "family2 mismatch");
  // b = 2: p_b factors are (b s1 + 2 s2 + 1 + b + rho)
  o.require(cand.family1 == family(2, 2, 3, cand.w1), "family1 mismatch");
  o.detail = o.ok ? "N2=4, W2={0,2,3,4,5,6}, family2=" + cand.render() : o.detail;
  return o;
}

Outcome example3() {
  Outcome o;
  auto [f1, f2] = binomial_pair(2, 3, 3, 2);
  auto cand = bs_candidate(f1, f2, WeightSystem(3, 2), WeightSystem(2, 3));
  auto w = rationals({0, 2, 3, 4, 5, 6, 7, 8, 9, 10});
  o.require(cand.w1 == w, "W1 mismatch");
  o.require(cand.w2 == w, "W2 mismatch");
  o.require(cand.family1 == family(6, 4, 5, w), "family1 mismatch");
  o.require(cand.family2 == family(4, 6, 5, w), "family2 mismatch");
  if (o.ok) o.detail = "W1=W2={0,2,...,10}, " + std::to_string(cand.degree()) + " factors";
  return o;
}

Outcome smooth_branch() {
  Outcome o;
  SparsePoly unit = s_poly({{{1, 1}, 1}, {{1, 0}, 1}, {{0, 1}, 1}, {{0, 0}, 1}});  // (s1+1)(s2+1)
  struct Case {
    SparsePoly f1, f2;
    WeightSystem a1, a2;
  };
  std::vector<Case> cases{
      {SparsePoly::x1(), SparsePoly::x2(), WeightSystem(1, 1), WeightSystem(1, 2)},
      {SparsePoly::x1() + SparsePoly::x2(2), SparsePoly::x2() + SparsePoly::x1(2), WeightSystem(2, 1),
       WeightSystem(1, 2)},
  };
  for (std::size_t k = 0; k < cases.size(); ++k) {
    const auto& c = cases[k];
    PipelineOptions opts;
    if (k > 0) opts.cap = Rational(12);
    auto cert = functional_equation(c.f1, c.f2, c.a1, c.a2, opts);
    o.require(cert.candidate.smooth, "case " + std::to_string(k) + " not smooth");
    o.require(cert.candidate.expand() == unit, "case " + std::to_string(k) + " candidate differs");
    o.require(cert.residual.ok(), "case " + std::to_string(k) + " residual " + to_string(cert.residual.kind));
  }
  if (o.ok) o.detail = "b = (s1+1)*(s2+1), certificates verified";
  return o;
}

Outcome standard_bases() {
  Outcome o;
  auto [f1, f2] = binomial_pair(2, 3, 3, 2);
  LocalOrder o1{WeightSystem(3, 2), TieBreak::PreferLowJ};
  auto pair = is_standard_basis({f1, f2}, o1);
  o.require(pair.ok(), "{f1,f2} not certified: " + pair.message);
  if (pair.ok()) {
    const auto& red = pair.certificate->spair_reductions;
    o.require(red.size() == 1, "expected one S-function");
    if (red.size() == 1) {
      o.require(red[0].result.remainder.is_zero(), "S-function remainder nonzero");
      o.require(red[0].result.steps == 2, "S-function took " + std::to_string(red[0].result.steps) + " steps");
    }
    o.require(cobase(*pair.certificate).colength() == 4, "cobase of I is not a*d = 4");
  }
  SparsePoly j = jacobian(f1, f2);
  SparsePoly k = s_function(f1, j, o1);
  o.require(priv_exponent(k, o1) == ExponentPair{0, 4}, "exp(K) != (0, b+d-1)");
  auto i1 = is_standard_basis({f1, j, k}, o1);
  o.require(i1.ok(), "{f1,J,K} not certified: " + i1.message);
  if (o.ok) o.detail = "{f1,f2}: 1 S-function, 2 steps; exp(K)=(0,4); colength(I)=4";
  return o;
}

Outcome prop1_family() {
  Outcome o;
  std::mt19937 rng(2024);
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  // Monomial of weight in (bound, bound + 6].
  auto deformation = [&](const WeightSystem& w, const Rational& bound) {
    for (;;) {
      ExponentPair e{static_cast<std::uint32_t>(pick(0, 7)), static_cast<std::uint32_t>(pick(0, 7))};
      if (w.of(e) > bound && w.of(e) <= bound + 6) return SparsePoly::monomial(e, pick(1, 3) * (pick(0, 1) ? 1 : -1));
    }
  };
  std::vector<std::array<unsigned, 4>> quads;
  for (unsigned a = 1; a <= 5; ++a)
    for (unsigned b = 1; b <= 5; ++b)
      for (unsigned c = 1; c <= 5; ++c)
        for (unsigned d = 1; d <= 5; ++d)
          if (b * c > a * d) quads.push_back({a, b, c, d});
  std::shuffle(quads.begin(), quads.end(), rng);
  std::size_t cases = 0;
  for (std::size_t n = 0; n < std::max<std::size_t>(quads.size(), 60); ++n) {
    auto [a, b, c, d] = quads[n % quads.size()];
    WeightSystem a1(b, a), a2(d, c);
    SparsePoly g1, g2;
    int shape = pick(0, 3);
    if (shape & 1) g1 = deformation(a1, Rational(a * b));
    if (shape & 2) g2 = deformation(a2, Rational(c * d));
    auto fast = prop1_fast_path(a, b, c, d, g1, g2);
    auto [f1, f2] = binomial_pair(a, b, c, d, g1, g2);
    auto full = check_all(f1, f2, a1, a2);
    std::ostringstream tag;
    tag << "(" << a << "," << b << "," << c << "," << d << ") g1=" << render(g1) << " g2=" << render(g2);
    o.require(full.passed(), "check_all rejects " + tag.str());
    o.require(fast.passed(), "fast path rejects " + tag.str());
    for (std::size_t k = 0; k < 6; ++k)
      o.require(fast.conditions[k].verdict == full.conditions[k].verdict,
                "condition " + std::to_string(k + 1) + " disagrees on " + tag.str());
    for (auto [x, y] : {std::pair{&fast.ideal1, &full.ideal1}, std::pair{&fast.ideal2, &full.ideal2}})
      o.require(x->cobase && y->cobase && x->cobase->colength() == y->cobase->colength(),
                "colength disagrees on " + tag.str());
    ++cases;
  }
  o.require(cases >= 50, "fewer than 50 cases");
  if (o.ok) o.detail = std::to_string(cases) + " cases, fast path agrees with check_all";
  return o;
}

// Standing assumption for a pure pair: b and c are greater than 1.
Outcome comparison_sweep() {
  Outcome o;
  std::size_t checked = 0;
  for (unsigned a = 1; a <= 12; ++a)
    for (unsigned b = 2; b <= 12; ++b)
      for (unsigned c = 2; c <= 12; ++c)
        for (unsigned d = 1; d <= 12; ++d) {
          if (b * c <= a * d || (a < 2 && d < 2)) continue;
          auto [f1, f2] = binomial_pair(a, b, c, d);
          auto nb = n_bounds(f1, f2, WeightSystem(b, a), WeightSystem(d, c));
          Rational n1i(b * (a - 1) + a * (d - 1)), n2i(d * (a - 1) + c * (d - 1));
          std::ostringstream tag;
          tag << "(" << a << "," << b << "," << c << "," << d << ")";
          if (a >= 2) o.require(nb.n_i1 >= n1i, "N(I1) < N1(I) at " + tag.str());
          if (d >= 2) o.require(nb.n_i2 >= n2i, "N(I2) < N2(I) at " + tag.str());
          ++checked;
        }
  if (o.ok) o.detail = std::to_string(checked) + " quadruples";
  return o;
}

Outcome certificates() {
  Outcome o;
  struct Case {
    std::string name;
    SparsePoly f1, f2;
    WeightSystem a1, a2;
    std::optional<Rational> cap;
    bool require_cap_bound;
  };
  auto [g1, g2] = binomial_pair(2, 3, 3, 2);
  auto [h1, h2] = binomial_pair(1, 2, 3, 2);
  std::vector<Case> cases{
      {"ex1", SparsePoly::x1(), SparsePoly::x1(3) + SparsePoly::x2(2), WeightSystem(2, 1), WeightSystem(2, 3),
       std::nullopt, true},
      {"ex3", g1, g2, WeightSystem(3, 2), WeightSystem(2, 3), Rational(40), true},
      {"(1,2,3,2)", h1, h2, WeightSystem(2, 1), WeightSystem(2, 3), Rational(60), false},
  };
  std::vector<std::string> notes;
  for (const auto& c : cases) {
    PairContext ctx(c.f1, c.f2, c.a1, c.a2);
    auto nb = n_bounds(c.f1, c.f2, c.a1, c.a2);
    Rational need = nb.n_i1 + nb.n_i2 + 20;
    if (c.cap && c.require_cap_bound) o.require(*c.cap >= need, c.name + " cap below N(I1)+N(I2)+20");
    PipelineOptions opts;
    opts.cap = c.cap;
    auto cert = functional_equation(c.f1, c.f2, c.a1, c.a2, opts);
    o.require(cert.residual.ok(), c.name + " residual " + to_string(cert.residual.kind));
    o.require(cert.residual.residual_terms == 0, c.name + " has residual terms");
    if (!c.cap) o.require(cert.residual.kind == VerifyResult::Kind::Zero, c.name + " not exact");

    WeylOperator mutated = cert.op;
    mutated.add({}, SparsePoly::constant(1));
    auto bad = verify_identity(cert.candidate.expand(), mutated, ctx, c.cap);
    o.require(bad.kind == VerifyResult::Kind::Nonzero, c.name + " mutation not detected");
    notes.push_back(c.name + ": " + to_string(cert.residual.kind) +
                    (c.cap ? " cap " + to_string(*c.cap) + " (need >= " + to_string(need) + ")" : "") +
                    ", mutation Nonzero");
  }
  if (o.ok) o.detail = join(notes, "; ");
  return o;
}

Outcome hf_witnesses() {
  Outcome o;
  Rational a = 2, b = 3, c = 3, d = 2;
  auto [f1, f2] = binomial_pair(2, 3, 3, 2);
  auto cand = bs_candidate(f1, f2, WeightSystem(b, a), WeightSystem(d, c));
  auto arr = hf_arrangement(a, b, c, d);
  o.require(contains_arrangement(final_part(cand), arr), "arrangement differs from the radical of fin(b)");
  double worst_conv = 0, worst_var = 0;
  std::vector<Rational> scales{1, -1, 2, -3, make_rational(1, 2)};
  // b s1 + d s2 = 0 and a s1 + c s2 = 0
  std::vector<std::pair<Rational, Rational>> dirs{{d, -b}, {c, -a}};
  std::size_t points = 0;
  for (const auto& [u, v] : dirs)
    for (const auto& k : scales) {
      Rational s1 = u * k, s2 = v * k;
      auto w = witness_sequence(a, b, c, d, s1, s2, 1e6);
      worst_conv = std::max(worst_conv, convergence_error(w, s1, s2));
      worst_var = std::max(worst_var, on_variety_error(w, a, b, c, d));
      ++points;
    }
  o.require(points == 10, "expected 5 points per line");
  o.require(worst_conv <= 1e-6, "convergence error " + std::to_string(worst_conv));
  o.require(worst_var <= 1e-9, "on-variety error " + std::to_string(worst_var));
  std::ostringstream os;
  os << arr.render() << ", " << points << " points, max convergence " << worst_conv << ", max on-variety "
     << worst_var;
  if (o.ok) o.detail = os.str();
  return o;
}

Outcome property_suites() {
  Outcome o;
  std::string cmd = std::string("\"") + BSFORGE_PROPERTY_TEST + "\" --gtest_brief=1 > /dev/null 2>&1";
  int rc = std::system(cmd.c_str());
  o.require(rc == 0, "property_test exited with status " + std::to_string(rc));
  if (o.ok) o.detail = "property_test: all suites passed";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  // Optional arguments select criteria by number.
  std::set<int> only;
  for (int k = 1; k < argc; ++k) only.insert(std::atoi(argv[k]));
  std::vector<Criterion> all{
      {1, "example (1) bounds and families", 1, example1},
      {2, "example (3) bounds and families", 1, example3},
      {3, "smooth branch", 60, smooth_branch},
      {4, "standard-basis certificates", 1, standard_bases},
      {5, "deformed binomial family", 60, prop1_family},
      {6, "comparison sweep", 5, comparison_sweep},
      {7, "functional-equation certificates", 600, certificates},
      {8, "arrangement and witness sequences", 10, hf_witnesses},
      {9, "property suites", 120, property_suites},
  };
  int failures = 0;
  for (const auto& c : all) {
    if (!only.empty() && !only.count(c.id)) continue;
    auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.ok = false;
      out.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.seconds) {
      out.ok = false;
      out.detail += (out.detail.empty() ? "" : "; ") + std::string("over time limit");
    }
    std::ostringstream t;
    t.setf(std::ios::fixed);
    t.precision(2);
    t << secs << "s/" << c.seconds << "s";
    std::cout << "criterion " << c.id << ": " << (out.ok ? "PASS" : "FAIL") << "  " << c.name << " [" << t.str()
              << "] " << out.detail << std::endl;
    if (!out.ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
