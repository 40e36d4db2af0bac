#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "tourney/rational.hpp"

namespace tourney {

// Closed forms kept in their factored shape; expansion
// is a derived view so equality tests compare canonical coefficients.
struct FactoredForm {
  Rational scale = 1;
  std::vector<RationalPolynomial> factors;

  Rational eval(const Rational& x) const {
    Rational acc = scale;
    for (const RationalPolynomial& f : factors) acc *= f.eval(x);
    return acc;
  }
  RationalPolynomial expand() const {
    RationalPolynomial acc = RationalPolynomial::constant(scale);
    for (const RationalPolynomial& f : factors) acc = acc * f;
    return acc;
  }
};

// Catalog of the closed forms. Argument variable: order n for the c_m
// families, the parameter t of DR_{4t+3} for the per-arc/correction forms,
// and the semidegree for the origin counts of RLT.
enum class Formula {
  c3_regular_max,     // n
  c4_dr,              // n
  c4_rlt,             // n
  c5_identity_total,  // n: c_5 + 2 c_4 of a regular tournament
  c7_rlt,             // n
  c8_dr,              // n
  c8_rlt,             // n
  c8fig_rlt0,         // n: figure-eight total at the origin of RLT_n
  per_arc_dr8,        // t: 8-cycles on any arc of DR_{4t+3}
  corr7_dr,           // t: non-path 7-walks over an arc of DR_{4t+3}
  c3_rlt0,            // semidegree
  c4_rlt0,            // semidegree
  c5_rlt0,            // semidegree
  c35_rlt0,           // semidegree: ordered (3,5) figure-eight count
  c44_rlt0,           // semidegree: (4,4) figure-eight count
};

namespace detail {

inline RationalPolynomial lin(int a, int b) {
  // a + b*x
  return RationalPolynomial::linear(Rational(a), Rational(b));
}
inline RationalPolynomial quad(int a, int b, int c) {
  return RationalPolynomial({Rational(a), Rational(b), Rational(c)});
}

}  // namespace detail

inline FactoredForm formula_form(Formula f) {
  using detail::lin;
  using detail::quad;
  const RationalPolynomial x = lin(0, 1);
  switch (f) {
    case Formula::c3_regular_max:
      return {Rational(1, 24), {x, lin(1, 1), lin(-1, 1)}};
    case Formula::c4_dr:
      return {Rational(1, 64), {x, lin(1, 1), lin(-1, 1), lin(-3, 1)}};
    case Formula::c4_rlt:
      return {Rational(1, 48), {x, lin(1, 1), lin(-1, 1), lin(-3, 1)}};
    case Formula::c5_identity_total:
      return {Rational(1, 160),
              {x, lin(-1, 1), lin(1, 1), lin(-3, 1), lin(3, 1)}};
    case Formula::c7_rlt:
      return {Rational(1, 13440),
              {lin(1, 1), x, lin(-1, 1), lin(-3, 1), lin(-5, 1),
               quad(127, -111, 15)}};
    case Formula::c8_dr:
      return {Rational(1, 2048),
              {lin(1, 1), x, lin(-1, 1), lin(-3, 1), lin(-3, 1), lin(-7, 1),
               quad(1, -7, 1)}};
    case Formula::c8_rlt:
      return {Rational(1, 161280),
              {lin(1, 1), x, lin(-1, 1), lin(-3, 1), lin(-5, 1), lin(-7, 1),
               quad(510, -575, 83)}};
    case Formula::c8fig_rlt0:
      return {Rational(1, 5760),
              {lin(1, 1), lin(-1, 1), lin(-3, 1), lin(-5, 1),
               quad(837, -646, 85)}};
    case Formula::per_arc_dr8:
      return {Rational(2),
              {lin(1, 1), lin(-1, 1), x, x, quad(-11, -4, 16)}};
    case Formula::corr7_dr:
      return {Rational(2),
              {x, lin(1, 1),
               RationalPolynomial({Rational(1), Rational(-2), Rational(30),
                                   Rational(48)})}};
    case Formula::c3_rlt0:
      return {Rational(1, 2), {x, lin(1, 1)}};
    case Formula::c4_rlt0:
      return {Rational(2, 3), {x, lin(1, 1), lin(-1, 1)}};
    case Formula::c5_rlt0:
      return {Rational(1, 6), {x, lin(-1, 1), lin(1, 1), lin(-4, 3)}};
    case Formula::c35_rlt0:
      return {Rational(1, 120),
              {lin(-2, 1), lin(-1, 1), x, lin(1, 1), quad(21, -82, 30)}};
    case Formula::c44_rlt0:
      return {Rational(1, 36),
              {lin(-2, 1), lin(-1, 1), x, lin(1, 1), lin(-5, 2), lin(-3, 8)}};
  }
  throw std::invalid_argument("formula_form: unknown formula id");
}

inline Rational eval_formula(Formula f, const Rational& arg) {
  return formula_form(f).eval(arg);
}

inline RationalPolynomial formula_poly(Formula f) {
  return formula_form(f).expand();
}

// Walk counts a^(k)_ij of a doubly-regular tournament DR_{4t+3}, as
// polynomial values in t via the third-order recurrence
//   a^(p) = 2t a^(p-1) + t a^(p-2) + (2t+1)(t+1) a^(p-3)
// seeded with the two-step counts. `arc_towards` selects the orientation:
// true means the pair (j, i) is an arc, i.e. the walk runs against it.
inline Rational dr_walk_entry(const Rational& t, int k, bool arc_towards) {
  if (k < 1) throw std::invalid_argument("dr_walk_entry: power must be >= 1");
  Rational a0 = 0;  // a^(0)_ij, i != j
  Rational a1 = arc_towards ? Rational(0) : Rational(1);
  Rational a2 = arc_towards ? t + 1 : t;
  if (k == 1) return a1;
  if (k == 2) return a2;
  const Rational c3 = (2 * t + 1) * (t + 1);
  for (int p = 3; p <= k; ++p) {
    const Rational next = 2 * t * a2 + t * a1 + c3 * a0;
    a0 = a1;
    a1 = a2;
    a2 = next;
  }
  return a2;
}

// Diagonal walk counts a^(k)_ii of DR_{4t+3}; same recurrence, seeds from
// a^(0) = I and the absence of closed 1- and 2-walks.
inline Rational dr_walk_diagonal(const Rational& t, int k) {
  if (k < 0) throw std::invalid_argument("dr_walk_diagonal: negative power");
  Rational a0 = 1, a1 = 0, a2 = 0;
  if (k == 0) return a0;
  if (k == 1) return a1;
  if (k == 2) return a2;
  const Rational c3 = (2 * t + 1) * (t + 1);
  for (int p = 3; p <= k; ++p) {
    const Rational next = 2 * t * a2 + t * a1 + c3 * a0;
    a0 = a1;
    a1 = a2;
    a2 = next;
  }
  return a2;
}

// Mean out-set triangle count of a regular tournament from its fourth
// trace: (n+1)(n-1)(n-3)/48 - tr_4 / (4n).
inline Rational mean_outset_c3_value(int n, const Int& tr4) {
  return Rational(Int(n + 1) * (n - 1) * (n - 3), 48) - Rational(tr4, 4 * n);
}

}  // namespace tourney
