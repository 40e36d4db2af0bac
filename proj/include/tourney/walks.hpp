#pragma once

#include <cstdint>
#include <stdexcept>
#include <thread>
#include <vector>

#include "tourney/matrix.hpp"
#include "tourney/tournament.hpp"

namespace tourney {

// Exact powers A^1..A^K of the adjacency matrix; entry(k,i,j) counts walks
// of length k from i to j.
struct WalkTable {
  Tournament base;
  std::vector<IntMatrix> powers;  // powers[k-1] = A^k

  int max_power() const { return static_cast<int>(powers.size()); }
  const Int& entry(int k, int i, int j) const { return powers[k - 1].at(i, j); }
};

inline WalkTable walk_table(const Tournament& t, int max_power) {
  if (max_power < 1)
    throw std::invalid_argument("walk_table: max power must be >= 1");
  WalkTable w{t, {}};
  w.powers.reserve(max_power);
  w.powers.push_back(IntMatrix::adjacency(t));
  for (int k = 2; k <= max_power; ++k)
    w.powers.push_back(w.powers.back() * w.powers.front());
  return w;
}

// Whether the table satisfies the third-order recurrence of a verified
// doubly-regular tournament with parameter t:
//   a^(p) = 2t a^(p-1) + t a^(p-2) + (2t+1)(t+1) a^(p-3)   for p >= 3,
// with a^(0) = I.
inline bool dr_recurrence_holds(const WalkTable& w, int t_param) {
  if (w.max_power() < 3) return true;
  const int n = w.powers[0].n;
  const Int c1 = 2 * t_param;
  const Int c2 = t_param;
  const Int c3 = Int(2 * t_param + 1) * (t_param + 1);
  const IntMatrix ident = IntMatrix::identity(n);
  for (int p = 3; p <= w.max_power(); ++p) {
    const IntMatrix& am3 = (p == 3) ? ident : w.powers[p - 4];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const Int rhs = c1 * w.powers[p - 2].at(i, j) +
                        c2 * w.powers[p - 3].at(i, j) + c3 * am3.at(i, j);
        if (w.powers[p - 1].at(i, j) != rhs) return false;
      }
  }
  return true;
}

inline void check_walk_guard(int len, bool unsafe) {
  if (len < 1) throw std::invalid_argument("walk length must be >= 1");
  if (len > 12 && !unsafe)
    throw std::invalid_argument("walk length " + std::to_string(len) +
                                " exceeds the desk-scale guard");
}

// Counts, for every endpoint j, the walks of length len from `start` to j
// that repeat a vertex. Pure enumeration with repetition detection; kept
// deliberately independent of WalkTable so it can serve as its oracle.
inline std::vector<std::uint64_t> nonpath_walk_counts(const Tournament& t,
                                                      int start, int len,
                                                      bool unsafe = false) {
  check_walk_guard(len, unsafe);
  const int n = t.order();
  std::vector<std::uint64_t> tally(n, 0);

  struct Walker {
    const Tournament& t;
    std::vector<std::uint64_t>& tally;
    int len;

    void clean(int v, int depth, VertexSet visited) {
      // no repetition so far
      if (depth == len) return;
      t.out_set(v).for_each([&](int u) {
        if (visited.test(u)) {
          dirty(u, depth + 1);
        } else if (depth + 1 == len) {
          // a simple path; not counted
        } else {
          VertexSet next = visited;
          next.set(u);
          clean(u, depth + 1, next);
        }
      });
    }

    void dirty(int v, int depth) {
      // some vertex already repeated; every continuation counts
      if (depth == len) {
        ++tally[v];
        return;
      }
      t.out_set(v).for_each([&](int u) { dirty(u, depth + 1); });
    }
  } walker{t, tally, len};

  VertexSet visited;
  visited.set(start);
  walker.clean(start, 0, visited);
  return tally;
}

// Corr_len(T, i, j): walks of length len from i to j that are not paths.
inline std::uint64_t count_nonpath_walks(const Tournament& t, int i, int j,
                                         int len, bool unsafe = false) {
  if (i == j)
    throw std::invalid_argument("count_nonpath_walks: endpoints must differ");
  return nonpath_walk_counts(t, i, len, unsafe)[j];
}

// Full non-path walk matrix, rows computed in parallel.
inline std::vector<std::vector<std::uint64_t>> nonpath_walk_matrix(
    const Tournament& t, int len, int workers = 1, bool unsafe = false) {
  check_walk_guard(len, unsafe);
  const int n = t.order();
  std::vector<std::vector<std::uint64_t>> rows(n);
  if (workers <= 1) {
    for (int i = 0; i < n; ++i) rows[i] = nonpath_walk_counts(t, i, len, unsafe);
    return rows;
  }
  std::vector<std::thread> threads;
  for (int w = 0; w < workers; ++w)
    threads.emplace_back([&, w] {
      for (int i = w; i < n; i += workers)
        rows[i] = nonpath_walk_counts(t, i, len, unsafe);
    });
  for (auto& th : threads) th.join();
  return rows;
}

// Simple paths of length len from i to j, by direct enumeration.
inline std::uint64_t path_count(const Tournament& t, int i, int j, int len,
                                bool unsafe = false) {
  check_walk_guard(len, unsafe);
  if (i == j) throw std::invalid_argument("path_count: endpoints must differ");
  std::uint64_t total = 0;

  struct Dfs {
    const Tournament& t;
    int target;
    int len;
    std::uint64_t& total;
    void go(int v, int depth, VertexSet visited) {
      if (depth == len) {
        if (v == target) ++total;
        return;
      }
      // target may only appear as the final vertex
      VertexSet cand = t.out_set(v) - visited;
      if (depth + 1 < len) cand.reset(target);
      cand.for_each([&](int u) {
        VertexSet next = visited;
        next.set(u);
        go(u, depth + 1, next);
      });
    }
  } dfs{t, j, len, total};

  VertexSet visited;
  visited.set(i);
  dfs.go(i, 0, visited);
  return total;
}

}  // namespace tourney
