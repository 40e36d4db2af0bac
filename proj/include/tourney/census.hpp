#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <thread>
#include <vector>

#include "tourney/tournament.hpp"

namespace tourney {

// Exponential enumerators refuse m > 10 (and anything beyond n = 15 even
// when the caller overrides) so CI cannot start an accidental blow-up.
inline void check_cycle_guard(const Tournament& t, int m, bool unsafe) {
  if (m < 3 || m > t.order())
    throw std::invalid_argument("cycle length must be in 3..n");
  if (m > 10 && !(unsafe && t.order() <= 15))
    throw std::invalid_argument(
        "cycle length " + std::to_string(m) +
        " exceeds the desk-scale guard (pass unsafe for n <= 15)");
}

struct CycleCensus {
  int m = 0;
  std::uint64_t total = 0;
  std::vector<std::uint64_t> per_vertex;  // index: vertex
  std::vector<std::uint64_t> per_arc;     // n*n flat; (i,j) counts arc i->j

  std::uint64_t arc_count(int i, int j) const {
    return per_arc[static_cast<std::size_t>(i) * per_vertex.size() + j];
  }
};

namespace detail {

// Enumerates every m-cycle exactly once, anchored at its minimum vertex,
// restricted to anchors in [anchor_lo, anchor_hi).
inline void census_anchor_range(const Tournament& t, int m, int anchor_lo,
                                int anchor_hi, CycleCensus& out) {
  const int n = t.order();
  std::vector<int> path(m);
  struct Frame { VertexSet cand; };
  std::vector<Frame> stack(m);

  for (int a = anchor_lo; a < anchor_hi; ++a) {
    if (n - a < m) break;  // not enough larger vertices left
    VertexSet above;  // vertices > a
    for (int v = a + 1; v < n; ++v) above.set(v);
    path[0] = a;
    VertexSet visited;
    visited.set(a);
    int depth = 1;
    stack[1].cand = t.out_set(a) & above;
    while (depth >= 1) {
      VertexSet& cand = stack[depth].cand;
      if (cand.empty()) {
        --depth;
        if (depth >= 1) visited.reset(path[depth]);
        continue;
      }
      // pop lowest candidate
      int v;
      if (cand.w0) {
        v = std::countr_zero(cand.w0);
        cand.w0 &= cand.w0 - 1;
      } else {
        v = 64 + std::countr_zero(cand.w1);
        cand.w1 &= cand.w1 - 1;
      }
      path[depth] = v;
      if (depth == m - 1) {
        if (t.arc(v, a)) {
          ++out.total;
          for (int q = 0; q < m; ++q) {
            ++out.per_vertex[path[q]];
            const int u = path[q];
            const int w = path[(q + 1) % m];
            ++out.per_arc[static_cast<std::size_t>(u) * n + w];
          }
        }
      } else {
        visited.set(v);
        ++depth;
        stack[depth].cand = (t.out_set(v) & above) - visited;
      }
    }
  }
}

}  // namespace detail

// Exact census of m-cycles: total, per-vertex and per-arc tallies in one
// pass. The per-anchor loop is data parallel; `workers` never changes the
// result.
inline CycleCensus count_cycles(const Tournament& t, int m, int workers = 1,
                                bool unsafe = false) {
  check_cycle_guard(t, m, unsafe);
  const int n = t.order();
  CycleCensus census;
  census.m = m;
  census.per_vertex.assign(n, 0);
  census.per_arc.assign(static_cast<std::size_t>(n) * n, 0);

  if (workers <= 1) {
    detail::census_anchor_range(t, m, 0, n, census);
    return census;
  }

  std::vector<CycleCensus> parts(workers);
  std::vector<std::thread> threads;
  // Low anchors own most of the work; deal them out round-robin.
  for (int w = 0; w < workers; ++w) {
    parts[w].m = m;
    parts[w].per_vertex.assign(n, 0);
    parts[w].per_arc.assign(static_cast<std::size_t>(n) * n, 0);
    threads.emplace_back([&t, m, n, w, workers, &parts] {
      for (int a = w; a < n; a += workers)
        detail::census_anchor_range(t, m, a, a + 1, parts[w]);
    });
  }
  for (auto& th : threads) th.join();
  for (const CycleCensus& p : parts) {
    census.total += p.total;
    for (int v = 0; v < n; ++v) census.per_vertex[v] += p.per_vertex[v];
    for (std::size_t e = 0; e < census.per_arc.size(); ++e)
      census.per_arc[e] += p.per_arc[e];
  }
  return census;
}

// Number of m-cycles through v, by direct enumeration of the closed paths
// that start and end at v (each such cycle is traversed exactly once).
inline std::uint64_t count_vertex_cycles(const Tournament& t, int v, int m,
                                         bool unsafe = false) {
  check_cycle_guard(t, m, unsafe);
  std::uint64_t total = 0;
  std::vector<VertexSet> cand(m);
  std::vector<int> path(m);
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
    if (depth == m - 1) {
      if (t.arc(u, v)) ++total;
    } else {
      visited.set(u);
      ++depth;
      cand[depth] = t.out_set(u) - visited;
    }
  }
  return total;
}

struct ArcUniformity {
  bool uniform = false;
  std::optional<std::uint64_t> common_value;
};

// Checks whether every arc lies on the same number of m-cycles.
inline ArcUniformity arc_uniformity(const Tournament& t, int m,
                                    int workers = 1, bool unsafe = false) {
  const CycleCensus census = count_cycles(t, m, workers, unsafe);
  const int n = t.order();
  ArcUniformity r;
  r.uniform = true;
  std::optional<std::uint64_t> value;
  for (int i = 0; i < n && r.uniform; ++i)
    for (int j = 0; j < n && r.uniform; ++j) {
      if (!t.arc(i, j)) continue;
      const std::uint64_t c = census.arc_count(i, j);
      if (!value) value = c;
      else if (*value != c) r.uniform = false;
    }
  if (r.uniform) {
    r.common_value = value;
    // Consistency: common * #arcs == m * total, exactly.
    const std::uint64_t arcs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
    if (value && *value * arcs != static_cast<std::uint64_t>(m) * census.total)
      throw std::logic_error("arc_uniformity: arc-sum identity violated");
  }
  return r;
}

}  // namespace tourney
