#pragma once

#include <string>

#include "tourney/census.hpp"
#include "tourney/families.hpp"
#include "tourney/figure_eight.hpp"
#include "tourney/rational.hpp"
#include "tourney/tournament.hpp"

namespace tourney {

struct IdentityCheck {
  std::string name;
  Rational lhs;
  Rational rhs;
  bool equal = false;
};

inline IdentityCheck make_check(std::string name, Rational lhs, Rational rhs) {
  IdentityCheck c{std::move(name), std::move(lhs), std::move(rhs), false};
  c.equal = c.lhs == c.rhs;
  return c;
}

// 2 c_3(T) = n(n-1)(2n-1)/6 - sum (outdeg_i)^2. Left side by cycle
// enumeration, right side from the degree sequence.
inline IdentityCheck verify_kendall_c3(const Tournament& t) {
  const Int n = t.order();
  Rational rhs = Rational(n * (n - 1) * (2 * n - 1), 6);
  for (int i = 0; i < t.order(); ++i) {
    const Int d = t.out_degree(i);
    rhs -= d * d;
  }
  const Rational lhs = Rational(2) * count_cycles(t, 3).total;
  return make_check("kendall_c3", lhs, rhs);
}

// For regular T: c_4(T) = n(n+1)(n-1)(n-3)/48 - sum_i c_3(N+(i)).
inline IdentityCheck verify_regular_c4(const Tournament& t) {
  if (!t.is_regular())
    throw std::invalid_argument("regular_c4 requires a regular tournament");
  const Int n = t.order();
  Rational rhs = Rational(n * (n + 1) * (n - 1) * (n - 3), 48);
  for (int i = 0; i < t.order(); ++i)
    rhs -= triangle_count_within(t, t.out_set(i));
  const Rational lhs = Rational(count_cycles(t, 4).total);
  return make_check("regular_c4", lhs, rhs);
}

// For regular T: c_5(T) + 2 c_4(T) = n(n-1)(n+1)(n-3)(n+3)/160.
inline IdentityCheck verify_c5_plus_2c4(const Tournament& t) {
  if (!t.is_regular())
    throw std::invalid_argument("c5_plus_2c4 requires a regular tournament");
  const Int n = t.order();
  const Rational rhs = Rational(n * (n - 1) * (n + 1) * (n - 3) * (n + 3), 160);
  const Rational lhs = Rational(count_cycles(t, 5).total) +
                       Rational(2) * count_cycles(t, 4).total;
  return make_check("c5_plus_2c4", lhs, rhs);
}

// Deletion recurrence of the locally transitive family, every term by pure
// enumeration:
//   (n-m+2)/(n+2) c_m(RLT_{n+2})
//     = (n+m)/n c_m(RLT_n) + c_{m-1}(RLT_n, 0) + c_m^(2)(RLT_n, 0).
inline IdentityCheck verify_rlt_recurrence(int m, int n);

enum class IdentityId { kendall_c3, regular_c4, c5_plus_2c4, rlt_recurrence };

// Dispatcher. kendall_c3/regular_c4/c5_plus_2c4 take the tournament;
// rlt_recurrence takes (m, n) and builds the circulants itself.
inline IdentityCheck verify_identity(IdentityId id, const Tournament& t);
inline IdentityCheck verify_identity(IdentityId id, int m, int n);

inline IdentityCheck verify_rlt_recurrence(int m, int n) {
  if (n < 3 || n % 2 == 0)
    throw std::invalid_argument("rlt_recurrence: n must be odd and >= 3");
  if (m < 3 || m > n)
    throw std::invalid_argument("rlt_recurrence: need 3 <= m <= n");
  const Tournament small = rlt(n);
  const Tournament big = rlt(n + 2);
  const Rational lhs =
      Rational(n - m + 2, n + 2) * Rational(count_cycles(big, m).total);
  Rational rhs =
      Rational(n + m, n) * Rational(count_cycles(small, m).total);
  if (m - 1 >= 3) rhs += count_vertex_cycles(small, 0, m - 1);
  rhs += count_figure_eight(small, 0, m).total;
  return make_check("rlt_recurrence(m=" + std::to_string(m) +
                        ",n=" + std::to_string(n) + ")",
                    lhs, rhs);
}

inline IdentityCheck verify_identity(IdentityId id, const Tournament& t) {
  switch (id) {
    case IdentityId::kendall_c3: return verify_kendall_c3(t);
    case IdentityId::regular_c4: return verify_regular_c4(t);
    case IdentityId::c5_plus_2c4: return verify_c5_plus_2c4(t);
    case IdentityId::rlt_recurrence:
      throw std::invalid_argument(
          "rlt_recurrence takes (m, n), not a tournament");
  }
  throw std::invalid_argument("verify_identity: unknown identity");
}

inline IdentityCheck verify_identity(IdentityId id, int m, int n) {
  if (id != IdentityId::rlt_recurrence)
    throw std::invalid_argument("only rlt_recurrence takes (m, n)");
  return verify_rlt_recurrence(m, n);
}

}  // namespace tourney
