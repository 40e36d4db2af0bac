#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "tourney/census.hpp"
#include "tourney/tournament.hpp"

namespace tourney {

// Enumerates the vertex sets of the len-cycles through v (one entry per
// cycle; the set includes v).
inline std::vector<VertexSet> cycles_through(const Tournament& t, int v,
                                             int len, bool unsafe = false) {
  check_cycle_guard(t, len, unsafe);
  std::vector<VertexSet> out;
  std::vector<VertexSet> cand(len);
  std::vector<int> path(len);
  path[0] = v;
  VertexSet visited;
  visited.set(v);
  int depth = 1;
  cand[1] = t.out_set(v);
  while (depth >= 1) {
    VertexSet& c = cand[depth];
    if (c.empty()) {
      --depth;
      if (depth >= 1) visited.reset(path[depth]);
      continue;
    }
    int u;
    if (c.w0) {
      u = std::countr_zero(c.w0);
      c.w0 &= c.w0 - 1;
    } else {
      u = 64 + std::countr_zero(c.w1);
      c.w1 &= c.w1 - 1;
    }
    path[depth] = u;
    if (depth == len - 1) {
      if (t.arc(u, v)) {
        VertexSet cycle = visited;
        cycle.set(u);
        out.push_back(cycle);
      }
    } else {
      visited.set(u);
      ++depth;
      cand[depth] = t.out_set(u) - visited;
    }
  }
  return out;
}

namespace detail {

// len-cycles through v avoiding `forbidden` (which must not contain v).
inline std::uint64_t count_vertex_cycles_avoiding(const Tournament& t, int v,
                                                  int len,
                                                  const VertexSet& forbidden) {
  std::uint64_t total = 0;
  std::vector<VertexSet> cand(len);
  std::vector<int> path(len);
  path[0] = v;
  VertexSet visited = forbidden;
  visited.set(v);
  int depth = 1;
  cand[1] = t.out_set(v) - visited;
  while (depth >= 1) {
    VertexSet& c = cand[depth];
    if (c.empty()) {
      --depth;
      if (depth >= 1) visited.reset(path[depth]);
      continue;
    }
    int u;
    if (c.w0) {
      u = std::countr_zero(c.w0);
      c.w0 &= c.w0 - 1;
    } else {
      u = 64 + std::countr_zero(c.w1);
      c.w1 &= c.w1 - 1;
    }
    path[depth] = u;
    if (depth == len - 1) {
      if (t.arc(u, v)) ++total;
    } else {
      visited.set(u);
      ++depth;
      cand[depth] = t.out_set(u) - visited;
    }
  }
  return total;
}

}  // namespace detail

struct FigureEightCensus {
  int v = 0;
  int m = 0;
  struct Split {
    int k = 0;  // length of the first cycle
    int h = 0;  // length of the second cycle
    std::uint64_t count = 0;
  };
  std::vector<Split> splits;  // ordered splits k + h = m with k, h >= 3
  std::uint64_t total = 0;

  std::uint64_t split(int k, int h) const {
    for (const Split& s : splits)
      if (s.k == k && s.h == h) return s.count;
    throw std::invalid_argument("figure-eight: no such split");
  }
};

// Counts the ordered concatenations g1 g2 of two cycles through v with
// V(g1) ∩ V(g2) = {v} and len(g1) + len(g2) = m. For m < 6 there is no
// split with both parts >= 3 and the total is 0 by contract.
inline FigureEightCensus count_figure_eight(const Tournament& t, int v, int m,
                                            bool unsafe = false) {
  FigureEightCensus census;
  census.v = v;
  census.m = m;
  if (m < 6) return census;
  if (m - 3 > 10 && !(unsafe && t.order() <= 15))
    throw std::invalid_argument(
        "figure-eight length exceeds the desk-scale guard");
  for (int k = 3; m - k >= 3; ++k) {
    const int h = m - k;
    FigureEightCensus::Split split{k, h, 0};
    if (k <= t.order() && h <= t.order()) {
      for (const VertexSet& first : cycles_through(t, v, k, unsafe)) {
        VertexSet forbidden = first;
        forbidden.reset(v);
        split.count +=
            detail::count_vertex_cycles_avoiding(t, v, h, forbidden);
      }
    }
    census.total += split.count;
    census.splits.push_back(split);
  }
  return census;
}

// Ordered pairs (g1, g2) of a k-cycle and an h-cycle through v that share a
// vertex besides v. Deliberately enumerated pair-by-pair: together with
// count_figure_eight it gives two independent routes to c_k(v) * c_h(v).
inline std::uint64_t overlapping_pairs(const Tournament& t, int v, int k,
                                       int h, bool unsafe = false) {
  const std::vector<VertexSet> first = cycles_through(t, v, k, unsafe);
  const std::vector<VertexSet> second =
      (h == k) ? first : cycles_through(t, v, h, unsafe);
  VertexSet only_v;
  only_v.set(v);
  std::uint64_t total = 0;
  for (const VertexSet& g1 : first)
    for (const VertexSet& g2 : second)
      if (!((g1 & g2) == only_v)) ++total;
  return total;
}

}  // namespace tourney
