#pragma once

// Lines through the origin of the (s1, s2)-plane attached to a pure pair
// f = (x1^a + x2^b, x1^c + x2^d), and explicit sequences on the variety
// { (x, l1 df1 + l2 df2, l1 f1, l2 f2) } whose s-coordinates tend to a given
// point of the line ab s1 + ad s2 = 0 (or, after swapping, ad s1 + cd s2 = 0).
// This is the only floating-point module.

#include <cmath>
#include <complex>
#include <numeric>
#include <string>
#include <vector>

#include "bernstein.hpp"

namespace bsforge {

/// Integer multiple of f with coprime coefficients and a positive leading one.
inline AffineFactor primitive(const AffineFactor& f) {
  mpz_class den = 1, g = 0;
  for (const Rational* c : {&f.c1, &f.c2, &f.c0}) den = lcm(den, mpz_class(c->get_den()));
  for (const Rational* c : {&f.c1, &f.c2, &f.c0}) g = gcd(g, mpz_class(Rational(*c * den).get_num()));
  if (g == 0) return f;
  Rational scale = Rational(den) / Rational(g);
  Rational lead = f.c1 != 0 ? f.c1 : (f.c2 != 0 ? f.c2 : f.c0);
  if (lead < 0) scale = -scale;
  return {f.c1 * scale, f.c2 * scale, f.c0 * scale};
}

struct LineArrangement {
  std::vector<AffineFactor> lines;  // homogeneous, pairwise non-proportional

  /// Adds a line unless a proportional one is present. Returns false on a duplicate.
  bool insert(const AffineFactor& l) {
    if (l.is_constant() || !l.is_homogeneous()) throw Error(ErrorKind::InvalidArgument, "not a vectorial line");
    for (const auto& m : lines)
      if (m.proportional(l)) return false;
    lines.push_back(l);
    return true;
  }

  bool contains(const AffineFactor& l) const {
    for (const auto& m : lines)
      if (m.proportional(l)) return true;
    return false;
  }

  std::size_t size() const { return lines.size(); }

  std::string render() const {
    std::vector<std::string> r;
    for (const auto& l : lines) r.push_back(primitive(l).render());
    return "{" + join(r, ", ") + "}";
  }
};

namespace detail {

inline void check_pure_pair(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  if (a <= 0 || b <= 0 || c <= 0 || d <= 0) throw Error(ErrorKind::InvalidArgument, "a, b, c, d must be positive");
  if (b * c <= a * d) throw Error(ErrorKind::InvalidArgument, "requires bc > ad");
  if (a < 2 && d < 2) throw Error(ErrorKind::InvalidArgument, "requires a >= 2 or d >= 2");
}

}  // namespace detail

/// s1, s2, ab s1 + ad s2, ad s1 + cd s2.
inline LineArrangement hf_arrangement(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  detail::check_pure_pair(a, b, c, d);
  LineArrangement arr;
  arr.insert({1, 0, 0});
  arr.insert({0, 1, 0});
  bool fresh1 = arr.insert({a * b, a * d, 0});
  bool fresh2 = arr.insert({a * d, c * d, 0});
  // ab cd = (ad)^2 would need bc = ad
  if (!fresh1 || !fresh2) throw Error(ErrorKind::InvalidArgument, "lines merged although bc > ad");
  return arr;
}

/// Equality of zero sets: every line divides fin_b and every factor of fin_b is a line.
inline bool contains_arrangement(const FactoredPoly& fin_b, const LineArrangement& arr) {
  for (const auto& f : fin_b.factors)
    if (!f.is_homogeneous()) return false;
  auto rad = fin_b.radical();
  for (const auto& l : arr.lines) {
    bool found = false;
    for (const auto& f : rad) found = found || f.proportional(l);
    if (!found) return false;
  }
  for (const auto& f : rad)
    if (!arr.contains(f)) return false;
  return true;
}

using Complex = std::complex<double>;

/// One point of the sequence, its multipliers and the branch used.
struct WitnessPoint {
  Complex x1, x2, xi1, xi2, s1, s2;
  Complex lambda1, lambda2;
  int case_id = 1;  // 1: bc - ad + d - b >= 0, 2: otherwise
  bool swapped = false;
};

struct PurePair {
  double a, b, c, d;

  PurePair(const Rational& ra, const Rational& rb, const Rational& rc, const Rational& rd)
      : a(ra.get_d()), b(rb.get_d()), c(rc.get_d()), d(rd.get_d()) {}

  PurePair swapped() const {
    PurePair p = *this;
    p.a = d;
    p.b = c;
    p.c = b;
    p.d = a;
    return p;
  }
};

namespace detail {

/// Principal branch of z^e.
inline Complex cpow(Complex z, double e) { return std::exp(e * std::log(z)); }

/// Coordinates of the variety point over (x, lambda).
inline void fill_from_lambda(WitnessPoint& w, const PurePair& p) {
  Complex x1 = w.x1, x2 = w.x2, l1 = w.lambda1, l2 = w.lambda2;
  w.xi1 = l1 * p.a * cpow(x1, p.a - 1) + l2 * p.c * cpow(x1, p.c - 1);
  w.xi2 = l1 * p.b * cpow(x2, p.b - 1) + l2 * p.d * cpow(x2, p.d - 1);
  w.s1 = l1 * (cpow(x1, p.a) + cpow(x2, p.b));
  w.s2 = l2 * (cpow(x1, p.c) + cpow(x2, p.d));
}

/// Point on ab s1 + ad s2 = 0, i.e. b s1 + d s2 = 0. Coordinates come from
/// the closed forms; fill_from_lambda rebuilds them independently.
inline WitnessPoint first_line_witness(const PurePair& p, Complex s1, Complex s2, double x1) {
  WitnessPoint w;
  w.x1 = x1;
  Complex X1 = x1;
  if (p.b * p.c - p.a * p.d + p.d - p.b >= 0) {
    w.case_id = 1;
    w.x2 = std::pow(x1, (p.a - 1) / p.b);  // x2^b = x1^(a-1), real positive
    w.lambda1 = s1 * cpow(X1, 1 - p.a);
    w.lambda2 = -(p.b / p.d) * s1 * cpow(w.x2, -p.d);
    Complex t = cpow(w.x2, -p.d) * cpow(X1, p.c - 1);  // x1^(bc-ad+d-b) after raising to b
    w.xi1 = p.a * s1 - (p.b / p.d) * p.c * s1 * t;
    w.xi2 = 0;
    w.s1 = s1 * X1 + s1;
    w.s2 = -(p.b / p.d) * s1 * (1.0 + t * X1);
  } else {
    w.case_id = 2;
    w.x2 = cpow(X1, (p.c - 1) / p.d);  // x2^d = x1^(c-1)
    w.lambda2 = s2 * cpow(w.x2, -p.d);
    w.lambda1 = -(p.d / p.b) * s2 * cpow(w.x2, -p.b);
    Complex t = cpow(w.x2, -p.b) * cpow(X1, p.a - 1);
    w.xi1 = -(p.d / p.b) * p.a * s2 * t + p.c * s2;
    w.xi2 = 0;
    w.s1 = -(p.d / p.b) * s2 * (t * X1 + 1.0);
    w.s2 = s2 * X1 + s2;
  }
  return w;
}

}  // namespace detail

/// The n-th point, x1(n) = 1/n, for s on the line ab s1 + ad s2 = 0 or on
/// ad s1 + cd s2 = 0. The second line is reached through (a,b,c,d) -> (d,c,b,a)
/// with x1 <-> x2 and s1 <-> s2.
inline WitnessPoint witness_sequence(const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                                     const Rational& s1, const Rational& s2, double n) {
  detail::check_pure_pair(a, b, c, d);
  if (s1 == 0 && s2 == 0) throw Error(ErrorKind::InvalidArgument, "the zero point is not a witness target");
  if (!(n > 0)) throw Error(ErrorKind::InvalidArgument, "n must be positive");
  PurePair p(a, b, c, d);
  double x1 = 1.0 / n;
  if (a * b * s1 + a * d * s2 == 0) return detail::first_line_witness(p, s1.get_d(), s2.get_d(), x1);
  if (a * d * s1 + c * d * s2 == 0) {
    WitnessPoint q = detail::first_line_witness(p.swapped(), s2.get_d(), s1.get_d(), x1);
    WitnessPoint w = q;
    w.swapped = true;
    w.x1 = q.x2;
    w.x2 = q.x1;
    w.xi1 = q.xi2;
    w.xi2 = q.xi1;
    w.s1 = q.s2;
    w.s2 = q.s1;
    w.lambda1 = q.lambda2;
    w.lambda2 = q.lambda1;
    return w;
  }
  throw Error(ErrorKind::InvalidArgument, "point is not on a non-axis line of the arrangement");
}

/// Largest relative deviation between the stored coordinates and those rebuilt from (x, lambda).
inline double on_variety_error(const WitnessPoint& w, const Rational& a, const Rational& b, const Rational& c,
                               const Rational& d) {
  WitnessPoint r = w;
  detail::fill_from_lambda(r, PurePair(a, b, c, d));
  double err = 0;
  auto rel = [&](Complex got, Complex want) {
    double scale = std::max(1.0, std::abs(want));
    err = std::max(err, std::abs(got - want) / scale);
  };
  rel(w.xi1, r.xi1);
  rel(w.xi2, r.xi2);
  rel(w.s1, r.s1);
  rel(w.s2, r.s2);
  return err;
}

/// max |s(n) - s| / max |s|.
inline double convergence_error(const WitnessPoint& w, const Rational& s1, const Rational& s2) {
  double num = std::max(std::abs(w.s1 - s1.get_d()), std::abs(w.s2 - s2.get_d()));
  double den = std::max(std::abs(s1.get_d()), std::abs(s2.get_d()));
  return num / den;
}

}  // namespace bsforge
