#pragma once

#include <stdexcept>
#include <vector>

#include "tourney/rational.hpp"

namespace tourney {

// Bernoulli number B_m (B_1 = -1/2 convention; only even indices are
// consumed downstream), by the defining recurrence
//   sum_{k=0}^{m} C(m+1, k) B_k = 0.
inline Rational bernoulli(int m) {
  if (m < 0) throw std::invalid_argument("bernoulli: negative index");
  static thread_local std::vector<Rational> cache{Rational(1)};
  for (int j = static_cast<int>(cache.size()); j <= m; ++j) {
    Rational sum = 0;
    for (int k = 0; k < j; ++k) sum += Rational(binomial(j + 1, k)) * cache[k];
    cache.push_back(-sum / Rational(j + 1));
  }
  return cache[m];
}

// beta(m): coefficient of z^{m-1} in the Maclaurin expansion of tan z,
// via 2^m (2^m - 1) |B_m| / m! .
inline Rational tangent_beta(int m) {
  if (m < 2 || m % 2 != 0)
    throw std::invalid_argument("tangent_beta: index must be even and >= 2");
  Rational b = bernoulli(m);
  if (b < 0) b = -b;
  return Rational(pow2(m) * (pow2(m) - 1)) * b / Rational(factorial(m));
}

// The same coefficient extracted by exact power-series division of sin by
// cos; kept as an independent route for cross-checking.
inline Rational tangent_beta_series(int m) {
  if (m < 2 || m % 2 != 0)
    throw std::invalid_argument("tangent_beta_series: index must be even");
  const int terms = m;  // need tan coefficients up to z^{m-1}
  std::vector<Rational> sin_c(terms, Rational(0)), cos_c(terms, Rational(0));
  for (int k = 0; 2 * k + 1 < terms; ++k)
    sin_c[2 * k + 1] = Rational(k % 2 ? -1 : 1) / Rational(factorial(2 * k + 1));
  for (int k = 0; 2 * k < terms; ++k)
    cos_c[2 * k] = Rational(k % 2 ? -1 : 1) / Rational(factorial(2 * k));
  // tan * cos = sin, solved coefficient by coefficient
  std::vector<Rational> tan_c(terms, Rational(0));
  for (int j = 0; j < terms; ++j) {
    Rational acc = sin_c[j];
    for (int i = 1; i <= j; ++i) acc -= cos_c[i] * tan_c[j - i];
    tan_c[j] = acc;  // cos_c[0] == 1
  }
  return tan_c[m - 1];
}

}  // namespace tourney
