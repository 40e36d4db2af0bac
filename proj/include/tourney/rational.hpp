#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace tourney {

using Int = boost::multiprecision::cpp_int;

// Exact rational scalar, always canonical (gcd 1, positive denominator).
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& r) {
  return r.str();
}

// Polynomial with exact rational coefficients, index = degree.
struct RationalPolynomial {
  std::vector<Rational> c;

  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coeffs)
      : c(std::move(coeffs)) {
    trim();
  }
  static RationalPolynomial constant(Rational v) {
    return RationalPolynomial({std::move(v)});
  }
  // a + b*x
  static RationalPolynomial linear(Rational a, Rational b) {
    return RationalPolynomial({std::move(a), std::move(b)});
  }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for 0

  Rational coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(c.size())) ? c[k] : Rational(0);
  }

  Rational eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  friend RationalPolynomial operator+(const RationalPolynomial& a,
                                      const RationalPolynomial& b) {
    std::vector<Rational> r(std::max(a.c.size(), b.c.size()), Rational(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r[i] += b.c[i];
    return RationalPolynomial(std::move(r));
  }
  friend RationalPolynomial operator-(const RationalPolynomial& a,
                                      const RationalPolynomial& b) {
    std::vector<Rational> r(std::max(a.c.size(), b.c.size()), Rational(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r[i] -= b.c[i];
    return RationalPolynomial(std::move(r));
  }
  friend RationalPolynomial operator*(const RationalPolynomial& a,
                                      const RationalPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.c.size() + b.c.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c.size(); ++i)
      for (std::size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
    return RationalPolynomial(std::move(r));
  }
  friend RationalPolynomial operator*(const Rational& s,
                                      const RationalPolynomial& a) {
    if (s == 0) return {};
    std::vector<Rational> r = a.c;
    for (Rational& v : r) v *= s;
    return RationalPolynomial(std::move(r));
  }
  friend bool operator==(const RationalPolynomial&,
                         const RationalPolynomial&) = default;
};

inline Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

inline Int factorial(int n) {
  Int r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

inline Int pow2(int k) {
  return Int(1) << k;
}

}  // namespace tourney
