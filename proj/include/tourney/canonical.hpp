#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "tourney/census.hpp"
#include "tourney/tournament.hpp"

namespace tourney {

// Canonical encoding of a tournament: two tournaments are isomorphic iff
// their canonical bytes are equal. aut_order is the exact size of the
// automorphism group.
struct CanonicalForm {
  std::vector<std::uint8_t> bytes;
  std::uint64_t aut_order = 0;
  std::vector<int> relabel_map;  // old vertex -> canonical position

  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
    return a.bytes == b.bytes;
  }
  friend bool operator<(const CanonicalForm& a, const CanonicalForm& b) {
    return a.bytes < b.bytes;
  }
};

namespace detail {

// Iso-invariant vertex key used to split vertices into ordered classes:
// (out-degree, out-set 3-cycles, 4-cycles through the vertex).
inline std::vector<std::tuple<int, std::int64_t, std::uint64_t>> vertex_keys(
    const Tournament& t) {
  std::vector<std::tuple<int, std::int64_t, std::uint64_t>> keys(t.order());
  for (int v = 0; v < t.order(); ++v)
    keys[v] = {t.out_degree(v), triangle_count_within(t, t.out_set(v)),
               t.order() >= 4 ? count_vertex_cycles(t, v, 4) : 0};
  return keys;
}

struct CanonicalSearch {
  const Tournament& t;
  int n;
  std::vector<int> position_class;            // class id required per position
  std::vector<std::vector<int>> class_members;
  std::vector<bool> used;
  std::vector<int> placed;                    // position -> vertex
  std::vector<std::uint64_t> best;            // staircase word per level
  int best_valid = 0;                         // levels of `best` that are set
  std::uint64_t aut_count = 0;
  std::vector<int> best_perm;                 // position -> vertex

  explicit CanonicalSearch(const Tournament& tt) : t(tt), n(tt.order()) {
    used.assign(n, false);
    placed.assign(n, -1);
    best.assign(n, 0);
  }

  std::uint64_t word_for(int v, int depth) const {
    std::uint64_t w = 0;
    for (int q = 0; q < depth; ++q)
      w = (w << 1) | static_cast<std::uint64_t>(t.arc(placed[q], v));
    return w;
  }

  void run(int depth) {
    if (depth == n) {
      if (aut_count == 0) best_perm = placed;
      ++aut_count;
      return;
    }
    const std::vector<int>& members = class_members[position_class[depth]];
    std::vector<std::pair<std::uint64_t, int>> cands;
    cands.reserve(members.size());
    for (int v : members)
      if (!used[v]) cands.emplace_back(word_for(v, depth), v);
    std::sort(cands.begin(), cands.end());
    for (const auto& [w, v] : cands) {
      if (best_valid > depth) {
        if (w > best[depth]) break;  // sorted: the rest are worse
        if (w < best[depth]) {
          best[depth] = w;
          best_valid = depth + 1;
          aut_count = 0;
        }
      } else {
        best[depth] = w;
        best_valid = depth + 1;
        aut_count = 0;
      }
      used[v] = true;
      placed[depth] = v;
      run(depth + 1);
      used[v] = false;
    }
  }
};

}  // namespace detail

// Deterministic canonical form by minimising the staircase bit sequence of
// the relabelled adjacency matrix over all permutations that respect the
// invariant class order. Exponential in the worst case; guarded at n = 15.
inline CanonicalForm canonicalize(const Tournament& t,
                                  bool allow_large = false) {
  const int n = t.order();
  if (n > 15 && !allow_large)
    throw std::invalid_argument(
        "canonicalize: order above 15 needs the explicit override");
  if (n > 64)
    throw std::invalid_argument("canonicalize: order above 64 unsupported");

  detail::CanonicalSearch search(t);
  const auto keys = detail::vertex_keys(t);
  std::map<std::tuple<int, std::int64_t, std::uint64_t>, int> class_of_key;
  for (const auto& k : keys) class_of_key.emplace(k, 0);
  int next_id = 0;
  for (auto& [key, id] : class_of_key) id = next_id++;

  search.class_members.resize(next_id);
  for (int v = 0; v < n; ++v)
    search.class_members[class_of_key[keys[v]]].push_back(v);
  search.position_class.reserve(n);
  for (int c = 0; c < next_id; ++c)
    for (std::size_t k = 0; k < search.class_members[c].size(); ++k)
      search.position_class.push_back(c);

  search.run(0);

  CanonicalForm form;
  form.aut_order = search.aut_count;
  form.relabel_map.assign(n, -1);
  for (int p = 0; p < n; ++p) form.relabel_map[search.best_perm[p]] = p;

  // bytes: order, then the canonical upper triangle, row-major, bit-packed
  form.bytes.push_back(static_cast<std::uint8_t>(n));
  std::uint8_t acc = 0;
  int nbits = 0;
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q) {
      acc = static_cast<std::uint8_t>(
          (acc << 1) | (t.arc(search.best_perm[p], search.best_perm[q]) ? 1 : 0));
      if (++nbits == 8) {
        form.bytes.push_back(acc);
        acc = 0;
        nbits = 0;
      }
    }
  if (nbits > 0) form.bytes.push_back(static_cast<std::uint8_t>(acc << (8 - nbits)));
  return form;
}

// The canonically relabelled tournament itself.
inline Tournament canonical_representative(const Tournament& t,
                                           bool allow_large = false) {
  return relabel(t, canonicalize(t, allow_large).relabel_map);
}

inline bool are_isomorphic(const Tournament& a, const Tournament& b,
                           bool allow_large = false) {
  if (a.order() != b.order()) return false;
  auto ka = detail::vertex_keys(a);
  auto kb = detail::vertex_keys(b);
  std::sort(ka.begin(), ka.end());
  std::sort(kb.begin(), kb.end());
  if (ka != kb) return false;
  return canonicalize(a, allow_large) == canonicalize(b, allow_large);
}

}  // namespace tourney
