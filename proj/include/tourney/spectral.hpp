#pragma once

#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tourney/int_poly.hpp"
#include "tourney/matrix.hpp"
#include "tourney/rational.hpp"
#include "tourney/tournament.hpp"

namespace tourney {

// tr(A^k), exactly.
inline Int trace_power(const Tournament& t, int k) {
  if (k < 1) throw std::invalid_argument("trace_power: k must be >= 1");
  const IntMatrix a = IntMatrix::adjacency(t);
  IntMatrix p = a;
  for (int i = 2; i <= k; ++i) p = p * a;
  return p.trace();
}

// Characteristic polynomial det(xI - A), monic, assembled from exact traces
// through Newton's identities.
inline IntPolynomial char_poly(const Tournament& t) {
  const int n = t.order();
  const IntMatrix a = IntMatrix::adjacency(t);
  std::vector<Int> traces(n + 1);  // traces[k] = tr(A^k)
  IntMatrix p = a;
  traces[1] = p.trace();
  for (int k = 2; k <= n; ++k) {
    p = p * a;
    traces[k] = p.trace();
  }
  std::vector<Rational> e(n + 1);
  e[0] = 1;
  for (int k = 1; k <= n; ++k) {
    Rational acc = 0;
    for (int i = 1; i <= k; ++i)
      acc += Rational(i % 2 ? 1 : -1) * e[k - i] * Rational(traces[i]);
    e[k] = acc / k;
  }
  std::vector<Int> coeffs(n + 1);
  for (int k = 0; k <= n; ++k) {
    const Rational v = Rational(k % 2 ? -1 : 1) * e[k];
    if (denominator(v) != 1)
      throw std::logic_error("char_poly: non-integer elementary symmetric");
    coeffs[n - k] = numerator(v);
  }
  return IntPolynomial(std::move(coeffs));
}

// The same polynomial by evaluation and interpolation: det(x0 I - A) at
// n+1 integer points via fraction-free elimination, then exact Lagrange
// recovery. Cross-checks the Newton route.
inline IntPolynomial char_poly_interpolated(const Tournament& t) {
  const int n = t.order();
  std::vector<Rational> xs(n + 1), ys(n + 1);
  for (int s = 0; s <= n; ++s) {
    std::vector<Int> m(static_cast<std::size_t>(n) * n, Int(0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Int v = t.arc(i, j) ? -1 : 0;
        if (i == j) v += s;
        m[static_cast<std::size_t>(i) * n + j] = v;
      }
    xs[s] = s;
    ys[s] = bareiss_determinant(std::move(m), n);
  }
  // Newton's divided differences, then expansion to monomial coefficients.
  std::vector<Rational> dd = ys;
  for (int level = 1; level <= n; ++level)
    for (int i = n; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
  RationalPolynomial acc;
  for (int i = n; i >= 0; --i)
    acc = acc * RationalPolynomial::linear(-xs[i], 1) +
          RationalPolynomial::constant(dd[i]);
  std::vector<Int> coeffs(acc.c.size());
  for (std::size_t k = 0; k < acc.c.size(); ++k) {
    if (denominator(acc.c[k]) != 1)
      throw std::logic_error("char_poly_interpolated: non-integer coefficient");
    coeffs[k] = numerator(acc.c[k]);
  }
  return IntPolynomial(std::move(coeffs));
}

namespace detail {

inline RationalPolynomial to_rational_poly(const IntPolynomial& p) {
  std::vector<Rational> c(p.c.size());
  for (std::size_t i = 0; i < p.c.size(); ++i) c[i] = p.c[i];
  return RationalPolynomial(std::move(c));
}

inline RationalPolynomial make_monic(RationalPolynomial p) {
  if (p.is_zero()) return p;
  const Rational lead = p.c.back();
  for (Rational& v : p.c) v /= lead;
  return p;
}

inline RationalPolynomial poly_derivative(const RationalPolynomial& p) {
  if (p.c.size() <= 1) return {};
  std::vector<Rational> d(p.c.size() - 1);
  for (std::size_t k = 1; k < p.c.size(); ++k) d[k - 1] = Rational(Int(k)) * p.c[k];
  return RationalPolynomial(std::move(d));
}

// quotient and remainder over the rationals
inline std::pair<RationalPolynomial, RationalPolynomial> poly_divmod(
    RationalPolynomial a, const RationalPolynomial& b) {
  if (b.is_zero()) throw std::invalid_argument("poly_divmod: zero divisor");
  std::vector<Rational> q(
      a.degree() >= b.degree() ? a.degree() - b.degree() + 1 : 0, Rational(0));
  while (!a.is_zero() && a.degree() >= b.degree()) {
    const int shift = a.degree() - b.degree();
    const Rational f = a.c.back() / b.c.back();
    q[shift] = f;
    for (int k = 0; k <= b.degree(); ++k) a.c[k + shift] -= f * b.c[k];
    a.trim();
  }
  return {RationalPolynomial(std::move(q)), std::move(a)};
}

inline RationalPolynomial poly_gcd(RationalPolynomial a, RationalPolynomial b) {
  while (!b.is_zero()) {
    RationalPolynomial r = poly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(std::move(a));
}

inline RationalPolynomial poly_div_exact(const RationalPolynomial& a,
                                         const RationalPolynomial& b) {
  auto [q, r] = poly_divmod(a, b);
  if (!r.is_zero()) throw std::logic_error("poly_div_exact: nonzero remainder");
  return q;
}

// Yun square-free decomposition of a monic polynomial:
// returns (factor, multiplicity) pairs with pairwise-coprime square-free
// factors whose multiplicity-weighted product is the input.
inline std::vector<std::pair<RationalPolynomial, int>> square_free_decompose(
    const RationalPolynomial& p) {
  std::vector<std::pair<RationalPolynomial, int>> out;
  if (p.degree() < 1) return out;
  const RationalPolynomial d = poly_derivative(p);
  RationalPolynomial g = poly_gcd(p, d);
  if (g.degree() == 0) {
    out.emplace_back(p, 1);
    return out;
  }
  RationalPolynomial c = poly_div_exact(p, g);
  RationalPolynomial w = poly_div_exact(d, g) - poly_derivative(c);
  int mult = 1;
  while (c.degree() > 0) {
    RationalPolynomial a = poly_gcd(c, w);
    if (a.degree() > 0) out.emplace_back(a, mult);
    c = poly_div_exact(c, a);
    w = poly_div_exact(w, a) - poly_derivative(c);
    ++mult;
  }
  return out;
}

// Aberth-Ehrlich simultaneous iteration for all roots of a square-free
// polynomial. Returns roots plus a first-order residual error bound each.
struct RootSet {
  std::vector<std::complex<double>> roots;
  std::vector<double> error;
};

inline RootSet aberth_roots(const RationalPolynomial& poly) {
  const int d = poly.degree();
  std::vector<std::complex<double>> coeff(d + 1);
  for (int k = 0; k <= d; ++k)
    coeff[k] = numerator(poly.c[k]).convert_to<double>() /
               denominator(poly.c[k]).convert_to<double>();
  auto eval = [&](std::complex<double> z,
                  std::complex<double>& deriv) -> std::complex<double> {
    std::complex<double> v = coeff[d], dv = 0.0;
    for (int k = d - 1; k >= 0; --k) {
      dv = dv * z + v;
      v = v * z + coeff[k];
    }
    deriv = dv;
    return v;
  };

  double radius = 0.0;
  for (int k = 0; k < d; ++k)
    radius = std::max(radius, std::abs(coeff[k] / coeff[d]));
  radius = 1.0 + radius;  // Cauchy bound

  std::vector<std::complex<double>> z(d);
  for (int k = 0; k < d; ++k) {
    const double angle = 2.0 * M_PI * (k + 0.25) / d + 0.3;
    z[k] = radius * std::complex<double>(std::cos(angle), std::sin(angle));
  }

  for (int iter = 0; iter < 400; ++iter) {
    double worst = 0.0;
    for (int k = 0; k < d; ++k) {
      std::complex<double> deriv;
      const std::complex<double> val = eval(z[k], deriv);
      if (std::abs(val) == 0.0) continue;
      std::complex<double> newton =
          deriv != std::complex<double>(0.0) ? val / deriv : val;
      std::complex<double> sum = 0.0;
      for (int j = 0; j < d; ++j)
        if (j != k) sum += 1.0 / (z[k] - z[j]);
      const std::complex<double> denom = 1.0 - newton * sum;
      const std::complex<double> step =
          denom != std::complex<double>(0.0) ? newton / denom : newton;
      z[k] -= step;
      worst = std::max(worst, std::abs(step));
    }
    if (worst < 1e-14 * radius) break;
  }

  RootSet out;
  out.roots = z;
  out.error.resize(d);
  for (int k = 0; k < d; ++k) {
    std::complex<double> deriv;
    const std::complex<double> val = eval(z[k], deriv);
    out.error[k] = std::abs(deriv) > 0.0 ? std::abs(val) / std::abs(deriv)
                                         : std::abs(val);
  }
  return out;
}

}  // namespace detail

struct SigmaMoment {
  double value = 0.0;
  double error_bound = 0.0;  // absolute, propagated from root residuals
};

// sigma_m: the sum of m-th powers of the imaginary parts of the non-Perron
// eigenvalues of a regular tournament. The Perron root (n-1)/2 is deflated
// exactly; the rest are found per square-free factor so that repeated
// eigenvalues (doubly-regular inputs) keep full accuracy.
inline SigmaMoment sigma_moment(const Tournament& t, int m) {
  if (!t.is_regular())
    throw std::invalid_argument("sigma_moment requires a regular tournament");
  if (m < 1) throw std::invalid_argument("sigma_moment: m must be >= 1");
  const int n = t.order();
  const int perron = (n - 1) / 2;

  const IntPolynomial cp = char_poly(t);
  // synthetic division by (x - perron); the remainder must vanish
  std::vector<Int> reduced(n);
  Int carry = 0;
  for (int k = n; k >= 1; --k) {
    carry = cp.coeff(k) + carry * perron;
    reduced[k - 1] = carry;
  }
  if (cp.coeff(0) + carry * perron != 0)
    throw std::logic_error("sigma_moment: Perron deflation left a remainder");
  const RationalPolynomial deflated =
      detail::to_rational_poly(IntPolynomial(std::move(reduced)));

  SigmaMoment out;
  for (const auto& [factor, mult] :
       detail::square_free_decompose(detail::make_monic(deflated))) {
    const detail::RootSet rs = detail::aberth_roots(factor);
    double residual_cap = 0.0;
    for (double e : rs.error) residual_cap = std::max(residual_cap, e);
    if (!(residual_cap < 1e-9))
      throw std::runtime_error("sigma_moment: root iteration did not converge");
    for (std::size_t k = 0; k < rs.roots.size(); ++k) {
      const double im = rs.roots[k].imag();
      out.value += mult * std::pow(im, m);
      out.error_bound +=
          mult * m * std::pow(std::abs(im) + rs.error[k], m - 1) * rs.error[k];
    }
  }
  return out;
}

struct MeanOutsetC3 {
  Rational trace_formula;   // (n+1)(n-1)(n-3)/48 - tr_4/(4n)
  Rational direct_average;  // (1/n) sum_i c_3(N+(i))
  bool equal = false;
};

inline MeanOutsetC3 mean_outset_c3(const Tournament& t) {
  if (!t.is_regular())
    throw std::invalid_argument("mean_outset_c3 requires a regular tournament");
  const int n = t.order();
  MeanOutsetC3 r;
  const Int tr4 = trace_power(t, 4);
  r.trace_formula =
      Rational(Int(n + 1) * (n - 1) * (n - 3), 48) - Rational(tr4, 4 * n);
  Int total = 0;
  for (int i = 0; i < n; ++i) total += triangle_count_within(t, t.out_set(i));
  r.direct_average = Rational(total, n);
  r.equal = r.trace_formula == r.direct_average;
  return r;
}

struct SpectralSummary {
  IntPolynomial charpoly;             // det(xI - A)
  std::vector<Int> traces;            // tr(A^k), k = 1..max requested
  std::vector<std::pair<int, SigmaMoment>> sigma;  // regular input only
  std::optional<Rational> perron;     // (n-1)/2 when regular
};

inline SpectralSummary spectral_summary(const Tournament& t, int trace_max = 8,
                                        const std::vector<int>& sigma_orders = {
                                            2, 4, 6}) {
  SpectralSummary s;
  s.charpoly = char_poly(t);
  const IntMatrix a = IntMatrix::adjacency(t);
  IntMatrix p = a;
  s.traces.push_back(p.trace());
  for (int k = 2; k <= trace_max; ++k) {
    p = p * a;
    s.traces.push_back(p.trace());
  }
  if (t.is_regular()) {
    s.perron = Rational(t.order() - 1, 2);
    for (int m : sigma_orders) s.sigma.emplace_back(m, sigma_moment(t, m));
  }
  return s;
}

}  // namespace tourney
