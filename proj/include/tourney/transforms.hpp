#pragma once

#include "tourney/tournament.hpp"

namespace tourney {

// Reverses every arc.
inline Tournament reverse(const Tournament& t) {
  const int n = t.order();
  TournamentBuilder b(n);
  for (int i = 0; i < n; ++i)
    t.out_set(i).for_each([&](int j) { b.add_arc(j, i); });
  return std::move(b).build();
}

// Substitutes t1, t2, t3 into the vertices of the 3-cycle: blocks keep their
// internal arcs and block k dominates block (k+1) mod 3.
inline Tournament cycle_blowup(const Tournament& t1, const Tournament& t2,
                               const Tournament& t3) {
  const Tournament* parts[3] = {&t1, &t2, &t3};
  int offset[3];
  int n = 0;
  for (int k = 0; k < 3; ++k) {
    offset[k] = n;
    n += parts[k]->order();
  }
  TournamentBuilder b(n);
  for (int k = 0; k < 3; ++k) {
    const Tournament& p = *parts[k];
    for (int i = 0; i < p.order(); ++i)
      p.out_set(i).for_each([&](int j) {
        b.add_arc(offset[k] + i, offset[k] + j);
      });
    const int next = (k + 1) % 3;
    for (int i = 0; i < p.order(); ++i)
      for (int j = 0; j < parts[next]->order(); ++j)
        b.add_arc(offset[k] + i, offset[next] + j);
  }
  return std::move(b).build();
}

// Every vertex of x dominates every vertex of y; internal arcs kept.
inline Tournament dominate_join(const Tournament& x, const Tournament& y) {
  const int nx = x.order();
  const int ny = y.order();
  TournamentBuilder b(nx + ny);
  for (int i = 0; i < nx; ++i)
    x.out_set(i).for_each([&](int j) { b.add_arc(i, j); });
  for (int i = 0; i < ny; ++i)
    y.out_set(i).for_each([&](int j) { b.add_arc(nx + i, nx + j); });
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j) b.add_arc(i, nx + j);
  return std::move(b).build();
}

// The doubling map F_n: sends an order-n tournament with adjacency A to the
// regular tournament of order 2n+1 with block adjacency
//
//     [ A      A^T  1 ]     blocks: first copy 0..n-1,
//     [ A^T+I  A    0 ],    second copy n..2n-1,
//     [ 0      1^T  0 ]     apex 2n.
inline Tournament f_map(const Tournament& t) {
  const int n = t.order();
  TournamentBuilder b(2 * n + 1);
  const int apex = 2 * n;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (t.arc(i, j)) {
        b.add_arc(i, j);          // A
        b.add_arc(n + i, n + j);  // A
        b.add_arc(j, n + i);      // A^T (first -> second)
        b.add_arc(n + j, i);      // A^T (second -> first)
      }
    }
    b.add_arc(n + i, i);     // +I
    b.add_arc(i, apex);      // column of ones
    b.add_arc(apex, n + i);  // row of ones
  }
  return std::move(b).build();
}

}  // namespace tourney
