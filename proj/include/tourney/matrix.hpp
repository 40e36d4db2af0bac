#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "tourney/tournament.hpp"

namespace tourney {

using Int = boost::multiprecision::cpp_int;

// Dense square matrix of arbitrary-precision integers.
struct IntMatrix {
  int n = 0;
  std::vector<Int> a;

  IntMatrix() = default;
  explicit IntMatrix(int order) : n(order), a(static_cast<std::size_t>(order) * order) {}

  Int& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  const Int& at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }

  static IntMatrix identity(int order) {
    IntMatrix m(order);
    for (int i = 0; i < order; ++i) m.at(i, i) = 1;
    return m;
  }

  static IntMatrix adjacency(const Tournament& t) {
    IntMatrix m(t.order());
    for (int i = 0; i < t.order(); ++i)
      t.out_set(i).for_each([&](int j) { m.at(i, j) = 1; });
    return m;
  }

  Int trace() const {
    Int s = 0;
    for (int i = 0; i < n; ++i) s += at(i, i);
    return s;
  }

  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
    IntMatrix r(x.n);
    for (int i = 0; i < x.n; ++i)
      for (int k = 0; k < x.n; ++k) {
        const Int& v = x.at(i, k);
        if (v == 0) continue;
        for (int j = 0; j < x.n; ++j)
          if (y.at(k, j) != 0) r.at(i, j) += v * y.at(k, j);
      }
    return r;
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

}  // namespace tourney
