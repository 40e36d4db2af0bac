#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "tourney/rational.hpp"

namespace tourney {

// Polynomial with arbitrary-precision integer coefficients, index = degree.
struct IntPolynomial {
  std::vector<Int> c;

  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Int> coeffs) : c(std::move(coeffs)) {
    trim();
  }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  Int coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(c.size())) ? c[k] : Int(0);
  }
  const Int& leading() const { return c.back(); }

  Int eval(const Int& x) const {
    Int acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  IntPolynomial derivative() const {
    if (c.size() <= 1) return {};
    std::vector<Int> d(c.size() - 1);
    for (std::size_t k = 1; k < c.size(); ++k) d[k - 1] = Int(k) * c[k];
    return IntPolynomial(std::move(d));
  }

  friend IntPolynomial operator-(const IntPolynomial& a) {
    std::vector<Int> r = a.c;
    for (Int& v : r) v = -v;
    return IntPolynomial(std::move(r));
  }
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;
};

namespace detail {

inline Int int_pow(Int base, int e) {
  Int r = 1;
  while (e-- > 0) r *= base;
  return r;
}

// Pseudo-remainder: the remainder of lc(B)^(deg A - deg B + 1) * A by B.
inline IntPolynomial pseudo_remainder(IntPolynomial a, const IntPolynomial& b) {
  const int db = b.degree();
  const Int& lb = b.leading();
  int pending = a.degree() - db + 1;  // lc(B) factors still owed
  while (!a.is_zero() && a.degree() >= db) {
    const int shift = a.degree() - db;
    const Int lead = a.leading();
    for (Int& v : a.c) v *= lb;
    --pending;
    for (int k = 0; k <= db; ++k) a.c[k + shift] -= lead * b.c[k];
    a.trim();
  }
  if (pending > 0 && !a.is_zero()) {
    const Int scale = int_pow(lb, pending);
    for (Int& v : a.c) v *= scale;
  }
  return a;
}

}  // namespace detail

// Resultant of two integer polynomials by the subresultant polynomial
// remainder sequence (exact, fraction free).
inline Int resultant(IntPolynomial a, IntPolynomial b) {
  if (a.is_zero() || b.is_zero()) return 0;
  if (a.degree() == 0 && b.degree() == 0) return 1;
  Int sign = 1;
  if (a.degree() < b.degree()) {
    if (a.degree() % 2 == 1 && b.degree() % 2 == 1) sign = -1;
    std::swap(a, b);
  }
  if (b.degree() == 0) return sign * detail::int_pow(b.c[0], a.degree());

  Int g = 1, h = 1;
  while (true) {
    const int da = a.degree();
    const int db = b.degree();
    const int delta = da - db;
    if (da % 2 == 1 && db % 2 == 1) sign = -sign;
    IntPolynomial r = detail::pseudo_remainder(a, b);
    if (r.is_zero()) return 0;  // positive-degree common factor
    a = std::move(b);
    const Int div = g * detail::int_pow(h, delta);
    for (Int& v : r.c) {
      Int q, rem;
      divide_qr(v, div, q, rem);
      if (rem != 0) throw std::logic_error("resultant: inexact division");
      v = q;
    }
    b = std::move(r);
    g = a.leading();
    // h <- g^delta / h^(delta-1)
    if (delta > 0) {
      Int num = detail::int_pow(g, delta);
      Int den = detail::int_pow(h, delta - 1);
      Int q, rem;
      divide_qr(num, den, q, rem);
      if (rem != 0) throw std::logic_error("resultant: inexact h update");
      h = q;
    }
    if (b.degree() == 0) {
      // final subresultant: lc(B)^(deg A) / h^(deg A - 1)
      Int num = detail::int_pow(b.c[0], a.degree());
      Int den = detail::int_pow(h, a.degree() - 1);
      Int q, rem;
      divide_qr(num, den, q, rem);
      if (rem != 0) throw std::logic_error("resultant: inexact final step");
      return sign * q;
    }
  }
}

// Fraction-free determinant (Bareiss) of a square integer matrix.
inline Int bareiss_determinant(std::vector<Int> m, int k) {
  if (k == 0) return 1;
  Int sign = 1, prev = 1;
  auto at = [&m, k](int i, int j) -> Int& {
    return m[static_cast<std::size_t>(i) * k + j];
  };
  for (int p = 0; p < k - 1; ++p) {
    if (at(p, p) == 0) {
      int swap_row = -1;
      for (int i = p + 1; i < k; ++i)
        if (at(i, p) != 0) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return 0;
      for (int j = 0; j < k; ++j) std::swap(at(p, j), at(swap_row, j));
      sign = -sign;
    }
    for (int i = p + 1; i < k; ++i) {
      for (int j = p + 1; j < k; ++j) {
        Int num = at(i, j) * at(p, p) - at(i, p) * at(p, j);
        Int q, rem;
        divide_qr(num, prev, q, rem);
        if (rem != 0) throw std::logic_error("bareiss: inexact division");
        at(i, j) = q;
      }
      at(i, p) = 0;
    }
    prev = at(p, p);
  }
  return sign * at(k - 1, k - 1);
}

// Resultant as the Sylvester-matrix determinant; the independent slow route.
inline Int resultant_sylvester(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  const int da = a.degree(), db = b.degree();
  if (da == 0 && db == 0) return 1;
  if (da == 0) return detail::int_pow(a.c[0], db);
  if (db == 0) return detail::int_pow(b.c[0], da);
  const int k = da + db;
  std::vector<Int> m(static_cast<std::size_t>(k) * k, Int(0));
  for (int r = 0; r < db; ++r)
    for (int j = 0; j <= da; ++j) m[static_cast<std::size_t>(r) * k + r + j] = a.c[da - j];
  for (int r = 0; r < da; ++r)
    for (int j = 0; j <= db; ++j)
      m[static_cast<std::size_t>(db + r) * k + r + j] = b.c[db - j];
  return bareiss_determinant(std::move(m), k);
}

// Discriminant via the subresultant chain:
//   disc(p) = (-1)^(d(d-1)/2) Res(p, p') / lc(p).
inline Int discriminant(const IntPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("discriminant of zero");
  const int d = p.degree();
  if (d < 1) throw std::invalid_argument("discriminant needs degree >= 1");
  if (d == 1) return 1;
  const Int res = resultant(p, p.derivative());
  Int q, rem;
  divide_qr(res, p.leading(), q, rem);
  if (rem != 0) throw std::logic_error("discriminant: inexact division");
  return (d * (d - 1) / 2) % 2 == 0 ? q : -q;
}

}  // namespace tourney
