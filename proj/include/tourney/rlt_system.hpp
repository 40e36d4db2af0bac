#pragma once

#include <stdexcept>
#include <vector>

#include "tourney/bernoulli.hpp"
#include "tourney/rational.hpp"

namespace tourney {

// Output of the triangular coefficient system that lifts c_{m-1}(RLT_n)
// and the figure-eight polynomial c_m^(2)(RLT_n, 0) to c_m(RLT_n).
struct RltSystem {
  int m = 0;
  Rational beta_m;          // tangent coefficient beta(m)
  Rational alpha_top;       // leading coefficient alpha_m^(m)
  std::vector<Rational> f;  // right-hand sides f_k^(m), k = 0..m-2
  RationalPolynomial alpha; // sum_{k=1}^m alpha_k^(m) n^k
};

// Solves, for even m:
//   alpha_m^(m) = (1 + (-1)^{m/2} beta(m)) / (m 2^m),
//   f_k^(m) = (m-1) alpha_{k+1}^(m-1) + beta_k^(m)
//             + (m-k-2)/m * 2^{-k-1} C(m,k) (1 + (-1)^{m/2} beta(m)),
//   2(k+1-m) alpha_{k+1}^(m)
//     + sum_{p=k+2}^{m-1} alpha_p^(m) 2^{p-k-1} (2 C(p,k) - m C(p-1,k))
//     = f_k^(m)                    for k = m-2 down to 0.
inline RltSystem rlt_coefficient_system(int m,
                                        const RationalPolynomial& alpha_prev,
                                        const RationalPolynomial& beta_fig) {
  if (m < 4 || m % 2 != 0)
    throw std::invalid_argument("rlt_coefficient_system: m must be even, >= 4");
  if (alpha_prev.degree() != m - 1)
    throw std::invalid_argument(
        "rlt_coefficient_system: previous-length coefficients must have degree m-1");
  if (beta_fig.degree() != m - 2)
    throw std::invalid_argument(
        "rlt_coefficient_system: figure-eight coefficients must have degree m-2");

  RltSystem out;
  out.m = m;
  out.beta_m = tangent_beta(m);
  const int sign = (m / 2) % 2 == 0 ? 1 : -1;
  const Rational lift = 1 + Rational(sign) * out.beta_m;
  out.alpha_top = lift / Rational(Int(m) * pow2(m));

  out.f.resize(m - 1);
  for (int k = 0; k <= m - 2; ++k)
    out.f[k] = Rational(m - 1) * alpha_prev.coeff(k + 1) + beta_fig.coeff(k) +
               Rational(m - k - 2, m) * Rational(binomial(m, k), pow2(k + 1)) *
                   lift;

  std::vector<Rational> alpha(m + 1, Rational(0));
  alpha[m] = out.alpha_top;
  for (int k = m - 2; k >= 0; --k) {
    Rational acc = out.f[k];
    for (int p = k + 2; p <= m - 1; ++p)
      acc -= alpha[p] * Rational(pow2(p - k - 1)) *
             Rational(2 * binomial(p, k) - Int(m) * binomial(p - 1, k));
    const Rational pivot = Rational(2 * (k + 1 - m));
    if (pivot == 0)
      throw std::logic_error("rlt_coefficient_system: zero pivot");
    alpha[k + 1] = acc / pivot;
  }
  out.alpha = RationalPolynomial(std::move(alpha));
  return out;
}

}  // namespace tourney
