#pragma once

// Command-line front end. Every command builds one ordered JSON report; the
// text format prints the same report as indented "key: value" lines.

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "hf_geometry.hpp"
#include "parse.hpp"
#include "weyl_verify.hpp"

namespace bsforge::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int { kOk = 0, kParseError = 1, kHypothesisFailure = 2, kInconclusive = 3 };

inline int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse:
    case ErrorKind::InvalidArgument:
    case ErrorKind::UndefinedWeight:
      return kParseError;
    case ErrorKind::HypothesesFailed:
    case ErrorKind::CollinearWeights:
    case ErrorKind::Infinite:
      return kHypothesisFailure;
    default:
      return kInconclusive;
  }
}

struct Outcome {
  Json report;
  int code = kOk;
};

inline std::string str(const Rational& r) { return to_string(r); }

inline Json rationals(const std::vector<Rational>& v) {
  Json j = Json::array();
  for (const auto& r : v) j.push_back(str(r));
  return j;
}

inline Json polys(const std::vector<SparsePoly>& v) {
  Json j = Json::array();
  for (const auto& p : v) j.push_back(render(p));
  return j;
}

inline Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

inline std::string weights_str(const WeightSystem& a) { return str(a.w1) + "," + str(a.w2); }

/// Indented "key: value" rendering of a report.
inline void print_text(const Json& j, std::ostream& out, int indent = 0) {
  std::string pad(indent, ' ');
  auto scalar = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  auto flat = [](const Json& v) {
    for (const auto& x : v)
      if (x.is_structured()) return false;
    return true;
  };
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Json& v = it.value();
    if (!v.is_structured()) {
      out << pad << it.key() << ": " << scalar(v) << "\n";
    } else if (v.is_array() && flat(v)) {
      std::vector<std::string> parts;
      for (const auto& x : v) parts.push_back(scalar(x));
      std::string line = join(parts, ", ");
      if (line.size() <= 100) {
        out << pad << it.key() << ": " << line << "\n";
      } else {
        out << pad << it.key() << ":\n";
        for (const auto& q : parts) out << pad << "  - " << q << "\n";
      }
    } else if (v.is_object()) {
      out << pad << it.key() << ":\n";
      print_text(v, out, indent + 2);
    } else {
      out << pad << it.key() << ":\n";
      for (const auto& x : v) {
        if (x.is_object()) {
          out << pad << "  -\n";
          print_text(x, out, indent + 4);
        } else {
          std::vector<std::string> parts;
          for (const auto& y : x) parts.push_back(scalar(y));
          out << pad << "  - " << join(parts, ", ") << "\n";
        }
      }
    }
  }
}

/// Reads "-" arguments line by line from the input stream.
class Inputs {
 public:
  explicit Inputs(std::istream& in) : in_(in) {}

  SparsePoly poly(const std::string& arg, const std::string& what) {
    std::string text = arg;
    if (arg == "-") {
      if (!std::getline(in_, text)) throw Error(ErrorKind::Parse, what + ": no line left on standard input");
    }
    try {
      return parse_poly(text);
    } catch (const Error& e) {
      throw Error(ErrorKind::Parse, what + ": " + std::string(e.what()).substr(std::string("Parse: ").size()));
    }
  }

 private:
  std::istream& in_;
};

struct PairArgs {
  std::string f1, f2, a1, a2;

  void attach(CLI::App* app) {
    app->add_option("--f1", f1, "first polynomial, or - for stdin")->required();
    app->add_option("--f2", f2, "second polynomial, or - for stdin")->required();
    app->add_option("--a1", a1, "weights of the first system, w1,w2")->required();
    app->add_option("--a2", a2, "weights of the second system, w1,w2")->required();
  }
};

struct ParsedPair {
  SparsePoly f1, f2;
  WeightSystem a1, a2;
};

inline ParsedPair parse_pair(const PairArgs& p, Inputs& in) {
  return {in.poly(p.f1, "--f1"), in.poly(p.f2, "--f2"), parse_weights(p.a1), parse_weights(p.a2)};
}

struct IdealArgs {
  std::vector<std::string> gens;
  std::string weights;
  std::string tie = "low-j";

  void attach(CLI::App* app, const char* gen_flag = "--gen") {
    app->add_option(gen_flag, gens, "generator (repeatable), or - for stdin")->required();
    app->add_option("--weights", weights, "weight system w1,w2")->required();
    app->add_option("--tie", tie, "tie-break among equal weights")->check(CLI::IsMember({"low-j", "low-i"}));
  }

  LocalOrder order() const {
    return {parse_weights(weights), tie == "low-j" ? TieBreak::PreferLowJ : TieBreak::PreferLowI};
  }

  std::vector<SparsePoly> parse(Inputs& in) const {
    std::vector<SparsePoly> out;
    for (std::size_t k = 0; k < gens.size(); ++k) out.push_back(in.poly(gens[k], "generator " + std::to_string(k + 1)));
    return out;
  }
};

inline Json pair_header(const ParsedPair& p) {
  Json j;
  j["f1"] = render(p.f1);
  j["f2"] = render(p.f2);
  j["a1"] = weights_str(p.a1);
  j["a2"] = weights_str(p.a2);
  return j;
}

inline Json conditions_json(const HypothesisReport& rep) {
  Json arr = Json::array();
  for (std::size_t k = 0; k < rep.conditions.size(); ++k)
    arr.push_back({{"condition", k + 1},
                   {"verdict", to_string(rep.conditions[k].verdict)},
                   {"detail", rep.conditions[k].detail}});
  return arr;
}

inline int verdict_code(const HypothesisReport& rep) {
  if (rep.passed()) return kOk;
  return rep.failed() ? kHypothesisFailure : kInconclusive;
}

inline Outcome cmd_check(const ParsedPair& p, const HypothesisOptions& hopts) {
  auto rep = check_all(p.f1, p.f2, p.a1, p.a2, hopts);
  Json j = pair_header(p);
  j["a"] = str(rep.a);
  j["b"] = str(rep.b);
  j["c"] = str(rep.c);
  j["d"] = str(rep.d);
  j["bc_minus_ad"] = str(rep.bc_minus_ad);
  j["jacobian"] = render(rep.jacobian);
  j["conditions"] = conditions_json(rep);
  j["verdict"] = rep.passed() ? "pass" : (rep.failed() ? "fail" : "inconclusive");
  return {j, verdict_code(rep)};
}

inline Json factors_json(const std::vector<AffineFactor>& fs) {
  Json j = Json::array();
  for (const auto& f : fs) j.push_back(f.render());
  return j;
}

inline Outcome cmd_bpoly(const ParsedPair& p, const HypothesisOptions& hopts, bool expand) {
  auto rep = check_all(p.f1, p.f2, p.a1, p.a2, hopts);
  Json j = pair_header(p);
  if (!rep.passed()) {
    j["conditions"] = conditions_json(rep);
    j["verdict"] = rep.failed() ? "fail" : "inconclusive";
    return {j, verdict_code(rep)};
  }
  auto cand = bs_candidate(rep);
  j["smooth"] = cand.smooth;
  j["candidate"] = cand.render();
  j["degree"] = cand.degree();
  j["N1"] = str(cand.bounds.n1);
  j["N2"] = str(cand.bounds.n2);
  j["N_I1"] = str(cand.bounds.n_i1);
  j["N_I2"] = str(cand.bounds.n_i2);
  if (!cand.smooth) {
    j["bound1"] = str(cand.bound1);
    j["bound2"] = str(cand.bound2);
    j["W1"] = rationals(cand.w1);
    j["W2"] = rationals(cand.w2);
    j["family1"] = factors_json(cand.family1);
    j["family2"] = factors_json(cand.family2);
  }
  j["final_part"] = final_part(cand).render();
  if (expand) j["expanded"] = render(cand.expand(), "s1", "s2");
  return {j, kOk};
}

inline Json basis_json(const std::vector<SparsePoly>& gens, const LocalOrder& o) {
  Json arr = Json::array();
  for (const auto& g : gens)
    arr.push_back({{"poly", render(g)}, {"exp", render_exponent(priv_exponent(g, o))}});
  return arr;
}

inline Outcome cmd_sbasis(const IdealArgs& args, Inputs& in, const BasisOptions& bopts, bool complete) {
  auto gens = args.parse(in);
  LocalOrder o = args.order();
  Json j;
  j["weights"] = weights_str(o.weights);
  j["tie"] = args.tie;
  j["input"] = polys(gens);
  BasisVerdict verdict;
  if (complete) {
    auto tb = complete_standard_basis(gens, o, bopts);
    verdict = tb.verdict;
    j["mode"] = "complete";
    j["verdict"] = to_string(tb.verdict);
    j["basis"] = basis_json(tb.elements, o);
    if (!tb.message.empty()) j["message"] = tb.message;
  } else {
    auto chk = is_standard_basis(gens, o, bopts);
    verdict = chk.verdict;
    j["mode"] = "certify";
    j["verdict"] = to_string(chk.verdict);
    if (chk.certificate) {
      j["basis"] = basis_json(chk.certificate->generators, o);
      Json red = Json::array();
      for (const auto& r : chk.certificate->spair_reductions)
        red.push_back({{"pair", {r.first + 1, r.second + 1}},
                       {"status", to_string(r.result.status)},
                       {"steps", r.result.steps}});
      j["s_functions"] = red;
    }
    if (chk.pair) {
      j["failing_pair"] = {chk.pair->first + 1, chk.pair->second + 1};
      j["remainder"] = render(chk.remainder);
    }
    if (!chk.message.empty()) j["message"] = chk.message;
  }
  int code = verdict == BasisVerdict::Certified ? kOk
             : verdict == BasisVerdict::NotStandard ? kHypothesisFailure
                                                    : kInconclusive;
  return {j, code};
}

inline Outcome cmd_cobase(const IdealArgs& args, Inputs& in, const BasisOptions& bopts) {
  auto gens = args.parse(in);
  LocalOrder o = args.order();
  auto tb = complete_standard_basis(gens, o, bopts);
  Json j;
  j["weights"] = weights_str(o.weights);
  j["tie"] = args.tie;
  j["input"] = polys(gens);
  j["verdict"] = to_string(tb.verdict);
  if (tb.verdict != BasisVerdict::Certified) throw Error(ErrorKind::Inconclusive, "standard basis not certified");
  j["basis"] = basis_json(tb.elements, o);
  std::vector<ExponentPair> exps;
  for (const auto& g : tb.elements) exps.push_back(priv_exponent(g, o));
  DeltaPartition delta(exps);
  if (!delta.complement_is_finite()) throw Error(ErrorKind::Infinite, "staircase complement is infinite");
  auto cb = cobase(tb.elements, o);
  Json mons = Json::array();
  for (const auto& e : cb.monomials) mons.push_back(render_exponent(e));
  j["colength"] = cb.colength();
  j["cobase"] = mons;
  return {j, kOk};
}

inline Outcome cmd_divide(const std::string& f_arg, const IdealArgs& args, Inputs& in,
                          const std::optional<std::string>& cap, std::size_t budget) {
  SparsePoly f = in.poly(f_arg, "--f");
  auto divisors = args.parse(in);
  LocalOrder o = args.order();
  std::optional<Rational> c;
  if (cap) c = parse_rational_arg(*cap, "--cap");
  auto r = divide(f, divisors, o, c, budget);
  Json j;
  j["f"] = render(f);
  j["divisors"] = polys(divisors);
  j["weights"] = weights_str(o.weights);
  j["tie"] = args.tie;
  if (c) j["cap"] = str(*c);
  j["status"] = to_string(r.status);
  j["steps"] = r.steps;
  j["quotients"] = polys(r.quotients);
  j["remainder"] = render(r.remainder);
  if (!r.leftover.is_zero()) j["dropped"] = render(r.leftover);
  return {j, r.status == DivisionStatus::Truncated ? kInconclusive : kOk};
}

struct VerifyFlags {
  std::optional<std::string> cap;
  bool exact = false;
  bool trace = false;
  bool show_operator = false;
};

inline Outcome cmd_verify(const ParsedPair& p, const VerifyFlags& flags, const PipelineOptions& base) {
  PipelineOptions opts = base;
  PairContext ctx(p.f1, p.f2, p.a1, p.a2);
  if (flags.cap && flags.exact) throw Error(ErrorKind::Parse, "--cap and --exact are exclusive");
  if (flags.cap)
    opts.cap = parse_rational_arg(*flags.cap, "--cap");
  else if (!flags.exact)
    opts.cap = default_cap(ctx);
  auto cert = functional_equation(p.f1, p.f2, p.a1, p.a2, opts);
  Json j = pair_header(p);
  j["candidate"] = cert.candidate.render();
  j["cap"] = opts.cap ? Json(str(*opts.cap)) : Json("none");
  j["result"] = to_string(cert.residual.kind);
  j["operator_keys"] = cert.op.size();
  j["operator_monomials"] = cert.op.monomial_count();
  j["residual_terms"] = cert.residual.residual_terms;
  j["dropped_terms"] = cert.residual.dropped_terms + cert.trace.dropped_terms;
  if (cert.residual.witness) {
    auto [shift, key] = *cert.residual.witness;
    j["witness"] = {{"shift", {shift.first, shift.second}},
                    {"x", {Poly4::x1_exp(key), Poly4::x2_exp(key)}},
                    {"s", {Poly4::s1_exp(key), Poly4::s2_exp(key)}},
                    {"coefficient", str(cert.residual.witness_coefficient)}};
  }
  if (flags.trace) j["trace"] = cert.trace.lines;
  if (flags.show_operator) {
    Json terms = Json::array();
    for (const auto& [k, u] : cert.op.terms())
      terms.push_back({{"d", {k.b1, k.b2}}, {"s", {k.k, k.l}}, {"coefficient", render(u)}});
    j["operator"] = terms;
  }
  return {j, cert.residual.ok() ? kOk : kInconclusive};
}

struct PureArgs {
  std::vector<std::string> abcd;

  void attach(CLI::App* app) { app->add_option("abcd", abcd, "exponents a b c d")->required()->expected(4); }

  std::array<Rational, 4> values() const {
    std::array<Rational, 4> v;
    const char* names[] = {"a", "b", "c", "d"};
    for (int k = 0; k < 4; ++k) v[k] = parse_rational_arg(abcd[k], names[k]);
    return v;
  }
};

inline Outcome cmd_hf(const PureArgs& args, bool compare, const HypothesisOptions& hopts) {
  auto [a, b, c, d] = args.values();
  auto arr = hf_arrangement(a, b, c, d);
  Json j;
  j["abcd"] = rationals({a, b, c, d});
  Json lines = Json::array();
  for (const auto& l : arr.lines) lines.push_back(primitive(l).render());
  j["lines"] = lines;
  if (compare) {
    if (!is_integer(a) || !is_integer(b) || !is_integer(c) || !is_integer(d))
      throw Error(ErrorKind::InvalidArgument, "--compare needs integer exponents");
    auto ui = [](const Rational& r) { return static_cast<unsigned>(r.get_num().get_ui()); };
    auto [f1, f2] = binomial_pair(ui(a), ui(b), ui(c), ui(d));
    auto cand = bs_candidate(f1, f2, WeightSystem(b, a), WeightSystem(d, c), hopts);
    j["final_part"] = final_part(cand).render();
    j["equal_zero_sets"] = contains_arrangement(final_part(cand), arr);
  }
  return {j, kOk};
}

inline Outcome cmd_witness(const PureArgs& args, const std::string& s_arg, double n) {
  auto [a, b, c, d] = args.values();
  auto comma = s_arg.find(',');
  if (comma == std::string::npos) throw Error(ErrorKind::Parse, "--s must look like s1,s2");
  Rational s1 = parse_rational_arg(s_arg.substr(0, comma), "s1");
  Rational s2 = parse_rational_arg(s_arg.substr(comma + 1), "s2");
  auto w = witness_sequence(a, b, c, d, s1, s2, n);
  Json j;
  j["abcd"] = rationals({a, b, c, d});
  j["target"] = rationals({s1, s2});
  j["n"] = n;
  j["case"] = w.case_id;
  j["swapped"] = w.swapped;
  j["x1"] = complex_json(w.x1);
  j["x2"] = complex_json(w.x2);
  j["xi1"] = complex_json(w.xi1);
  j["xi2"] = complex_json(w.xi2);
  j["s1"] = complex_json(w.s1);
  j["s2"] = complex_json(w.s2);
  j["lambda1"] = complex_json(w.lambda1);
  j["lambda2"] = complex_json(w.lambda2);
  j["on_variety_error"] = on_variety_error(w, a, b, c, d);
  j["convergence_error"] = convergence_error(w, s1, s2);
  return {j, kOk};
}

inline std::size_t step_budget_from_env() {
  const char* v = std::getenv("BSFORGE_STEP_BUDGET");
  if (!v || !*v) return kDefaultStepBudget;
  char* end = nullptr;
  unsigned long long n = std::strtoull(v, &end, 10);
  if (*end != '\0' || n == 0) throw Error(ErrorKind::Parse, "BSFORGE_STEP_BUDGET must be a positive integer");
  return static_cast<std::size_t>(n);
}

/// Entry point; returns the process exit status.
inline int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bernstein-Sato candidates and certificates for pairs of plane curve germs", "bsforge"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  PairArgs pair;
  auto* check = app.add_subcommand("check", "check the hypotheses on (f1, f2)");
  pair.attach(check);

  auto* bpoly = app.add_subcommand("bpoly", "the explicit Bernstein-Sato candidate");
  pair.attach(bpoly);
  bool expand = false;
  bpoly->add_flag("--expand", expand, "also print the expanded polynomial");

  IdealArgs ideal;
  auto* sbasis = app.add_subcommand("sbasis", "certify or complete a standard basis");
  ideal.attach(sbasis);
  bool complete = false;
  sbasis->add_flag("--complete", complete, "complete instead of certifying");

  auto* cob = app.add_subcommand("cobase", "monomial basis of the quotient");
  ideal.attach(cob);

  auto* div = app.add_subcommand("divide", "local division");
  std::string f_arg;
  div->add_option("--f", f_arg, "dividend, or - for stdin")->required();
  ideal.attach(div, "--by");
  std::optional<std::string> div_cap;
  div->add_option("--cap", div_cap, "drop terms of weight above the cap");

  auto* ver = app.add_subcommand("verify", "build and check the functional-equation certificate");
  pair.attach(ver);
  VerifyFlags vflags;
  ver->add_option("--cap", vflags.cap, "residual weight cap");
  ver->add_flag("--exact", vflags.exact, "no cap; divisions must terminate");
  ver->add_flag("--trace", vflags.trace, "include the step log");
  ver->add_flag("--operator", vflags.show_operator, "include every operator term");

  PureArgs pure;
  auto* hf = app.add_subcommand("hf", "line arrangement for x1^a + x2^b, x1^c + x2^d");
  pure.attach(hf);
  bool compare = false;
  hf->add_flag("--compare", compare, "compare with the top-degree part of the candidate");

  auto* wit = app.add_subcommand("witness", "point of a sequence converging to s on a non-axis line");
  pure.attach(wit);
  std::string s_arg;
  double n = 1e6;
  wit->add_option("--s", s_arg, "target s1,s2")->required();
  wit->add_option("--n", n, "sequence index, x1 = 1/n")->capture_default_str();

  std::vector<std::string> args;
  for (int k = argc - 1; k > 0; --k) args.emplace_back(argv[k]);
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }

  auto* sub = app.get_subcommands().front();
  Outcome res;
  try {
    std::size_t budget = step_budget_from_env();
    HypothesisOptions hopts;
    hopts.basis.step_budget = std::min(hopts.basis.step_budget, budget);
    PipelineOptions popts;
    popts.step_budget = budget;
    popts.basis = hopts.basis;
    Inputs inputs(in);
    if (sub == check) res = cmd_check(parse_pair(pair, inputs), hopts);
    if (sub == bpoly) res = cmd_bpoly(parse_pair(pair, inputs), hopts, expand);
    if (sub == sbasis) res = cmd_sbasis(ideal, inputs, hopts.basis, complete);
    if (sub == cob) res = cmd_cobase(ideal, inputs, hopts.basis);
    if (sub == div) res = cmd_divide(f_arg, ideal, inputs, div_cap, budget);
    if (sub == ver) res = cmd_verify(parse_pair(pair, inputs), vflags, popts);
    if (sub == hf) res = cmd_hf(pure, compare, hopts);
    if (sub == wit) res = cmd_witness(pure, s_arg, n);
  } catch (const Error& e) {
    int code = exit_code(e.kind());
    if (format == "json") {
      Json j;
      j["bsforge_schema"] = 1;
      j["command"] = sub->get_name();
      j["error"] = {{"kind", to_string(e.kind())}, {"message", e.what()}};
      out << j.dump(2) << "\n";
    }
    err << "error: " << e.what() << "\n";
    return code;
  }

  Json top;
  top["bsforge_schema"] = 1;
  top["command"] = sub->get_name();
  for (auto it = res.report.begin(); it != res.report.end(); ++it) top[it.key()] = it.value();
  if (format == "json")
    out << top.dump(2) << "\n";
  else
    print_text(top, out);
  return res.code;
}

}  // namespace bsforge::cli
