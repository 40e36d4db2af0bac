#pragma once

#include <optional>

#include "tourney/tournament.hpp"

namespace tourney {

struct StructureReport {
  bool is_regular = false;
  std::optional<int> semidegree;
  bool is_doubly_regular = false;
  std::optional<int> t;  // n = 4t+3 when doubly regular
  bool is_locally_transitive = false;
  bool is_near_doubly_regular = false;
};

namespace detail {

// Near-regular: out-degrees of the induced subtournament differ by at most 1.
inline bool near_regular_within(const Tournament& t, const VertexSet& s) {
  int lo = kMaxOrder, hi = -1;
  s.for_each([&](int v) {
    const int d = (t.out_set(v) & s).count();
    if (d < lo) lo = d;
    if (d > hi) hi = d;
  });
  return s.empty() || hi - lo <= 1;
}

}  // namespace detail

inline StructureReport classify(const Tournament& t) {
  StructureReport r;
  const int n = t.order();
  r.is_regular = t.is_regular();
  if (r.is_regular) r.semidegree = (n - 1) / 2;

  // Doubly regular: n = 4t+3 and every pair of vertices jointly dominates
  // exactly t common vertices.
  if (r.is_regular && n % 4 == 3) {
    const int tt = (n - 3) / 4;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = i + 1; j < n && ok; ++j)
        if ((t.out_set(i) & t.out_set(j)).count() != tt) ok = false;
    if (ok) {
      r.is_doubly_regular = true;
      r.t = tt;
    }
  }

  // Locally transitive: every out-set and in-set induces zero 3-cycles.
  r.is_locally_transitive = true;
  for (int i = 0; i < n && r.is_locally_transitive; ++i) {
    if (triangle_count_within(t, t.out_set(i)) != 0 ||
        triangle_count_within(t, t.in_set(i)) != 0)
      r.is_locally_transitive = false;
  }

  // Near doubly regular: every out-set induces a near-regular tournament.
  if (r.is_regular) {
    r.is_near_doubly_regular = true;
    for (int i = 0; i < n && r.is_near_doubly_regular; ++i)
      if (!detail::near_regular_within(t, t.out_set(i)))
        r.is_near_doubly_regular = false;
  }

  return r;
}

}  // namespace tourney
