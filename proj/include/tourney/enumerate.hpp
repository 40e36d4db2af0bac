#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "tourney/canonical.hpp"
#include "tourney/census.hpp"
#include "tourney/classify.hpp"
#include "tourney/tournament.hpp"

namespace tourney {

struct RegularClassInfo {
  CanonicalForm canon;
  Tournament representative;
  std::uint64_t labeled_count = 0;      // labelled tournaments seen
  std::optional<std::uint64_t> c8;      // attached when 8 <= n
};

struct EnumerationResult {
  int n = 0;
  std::vector<RegularClassInfo> classes;  // ordered by canonical bytes
};

struct EnumerateOptions {
  // Fixing N+(0) = {1..d} cuts the search by a C(n-1,d) factor without
  // losing any isomorphism class. Turn it off to see every labelling
  // (needed by the orbit-counting checks).
  bool fix_first_outset = true;
  // 0: row-major pair order, 1: by difference then row. Two independent
  // orders must produce the same classes.
  int pair_order = 0;
  bool unsafe = false;
};

namespace detail {

struct RegularSearch {
  int n;
  int semidegree;
  std::vector<std::pair<int, int>> pairs;  // undecided pairs, in order
  std::vector<int> outdeg;
  std::vector<int> undecided;
  std::vector<VertexSet> rows;
  std::map<std::vector<std::uint8_t>, RegularClassInfo>* classes;

  void decide(std::size_t idx) {
    if (idx == pairs.size()) {
      Tournament t(n, rows);
      CanonicalForm canon = canonicalize(t);
      auto it = classes->find(canon.bytes);
      if (it == classes->end()) {
        Tournament representative = relabel(t, canon.relabel_map);
        RegularClassInfo info{std::move(canon), std::move(representative), 1,
                              std::nullopt};
        classes->emplace(info.canon.bytes, std::move(info));
      } else {
        ++it->second.labeled_count;
      }
      return;
    }
    const auto [i, j] = pairs[idx];
    --undecided[i];
    --undecided[j];
    // arc i -> j
    if (outdeg[i] < semidegree && outdeg[j] + undecided[j] >= semidegree) {
      ++outdeg[i];
      rows[i].set(j);
      decide(idx + 1);
      rows[i].reset(j);
      --outdeg[i];
    }
    // arc j -> i
    if (outdeg[j] < semidegree && outdeg[i] + undecided[i] >= semidegree) {
      ++outdeg[j];
      rows[j].set(i);
      decide(idx + 1);
      rows[j].reset(i);
      --outdeg[j];
    }
    ++undecided[i];
    ++undecided[j];
  }
};

}  // namespace detail

// All isomorphism classes of regular tournaments of odd order n, by
// backtracking over the arc orientations with degree pruning and canonical
// de-duplication. Feasible through n = 9; n = 11 only behind `unsafe`.
inline EnumerationResult enumerate_regular(int n, EnumerateOptions opt = {}) {
  if (n < 1 || n % 2 == 0)
    throw std::invalid_argument("enumerate_regular: order must be odd");
  if (n > 9 && !opt.unsafe)
    throw std::invalid_argument(
        "enumerate_regular: n > 9 needs the explicit override");
  if (n > 11)
    throw std::invalid_argument("enumerate_regular: n > 11 is not feasible");

  detail::RegularSearch search;
  search.n = n;
  search.semidegree = (n - 1) / 2;
  search.outdeg.assign(n, 0);
  search.rows.assign(n, VertexSet{});
  const int d = search.semidegree;

  const int first_free = opt.fix_first_outset ? 1 : 0;
  if (opt.fix_first_outset) {
    for (int j = 1; j <= d; ++j) search.rows[0].set(j);
    for (int j = d + 1; j < n; ++j) search.rows[j].set(0);
    search.outdeg[0] = d;
    for (int j = d + 1; j < n; ++j) search.outdeg[j] = 1;
  }
  if (opt.pair_order == 0) {
    for (int i = first_free; i < n; ++i)
      for (int j = i + 1; j < n; ++j) search.pairs.emplace_back(i, j);
  } else {
    for (int diff = 1; diff < n; ++diff)
      for (int i = first_free; i + diff < n; ++i)
        search.pairs.emplace_back(i, i + diff);
  }
  search.undecided.assign(n, 0);
  for (const auto& [i, j] : search.pairs) {
    ++search.undecided[i];
    ++search.undecided[j];
  }

  std::map<std::vector<std::uint8_t>, RegularClassInfo> classes;
  search.classes = &classes;
  search.decide(0);

  EnumerationResult result;
  result.n = n;
  for (auto& [bytes, info] : classes) {
    if (n >= 8) info.c8 = count_cycles(info.representative, 8).total;
    result.classes.push_back(std::move(info));
  }
  return result;
}

// Backtracking search for a doubly-regular tournament of order n = 4t+3:
// every vertex pair must jointly dominate exactly t vertices. Returns a
// verified tournament, or nothing if the node budget runs out first.
inline std::optional<Tournament> search_doubly_regular(
    int n, std::uint64_t node_budget = 50'000'000) {
  if (n % 4 != 3 || n < 3)
    throw std::invalid_argument("search_doubly_regular: order must be 3 mod 4");
  if (n > 31)
    throw std::invalid_argument("search_doubly_regular: order beyond guard");
  const int t_param = (n - 3) / 4;
  const int d = (n - 1) / 2;

  struct Search {
    int n, t_param, d;
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> outdeg, undecided;
    std::vector<VertexSet> rows;
    // st[pair_index(i,j)][k]: 0 open, 1 common out-neighbour, 2 dead
    std::vector<std::vector<std::uint8_t>> st;
    std::vector<int> common, open_count;
    std::uint64_t nodes = 0, budget;
    bool found = false;
    std::vector<VertexSet> solution;

    int pidx(int i, int j) const {
      if (i > j) std::swap(i, j);
      return i * n + j;
    }

    struct Change { int pair; int k; std::uint8_t prev; };

    bool apply(int a, int b, std::vector<Change>& undo) {
      // arc a -> b became known
      for (int x = 0; x < n; ++x) {
        if (x == a || x == b) continue;
        // pair {a, x}: candidate k = b gains "a -> b"
        {
          const int p = pidx(a, x);
          std::uint8_t& s = st[p][b];
          if (s == 0) {
            const bool xb_decided = rows[x].test(b) || rows[b].test(x);
            if (xb_decided) {
              undo.push_back({p, b, s});
              if (rows[x].test(b)) {
                s = 1;
                ++common[p];
                --open_count[p];
              } else {
                s = 2;
                --open_count[p];
              }
              if (common[p] > t_param || common[p] + open_count[p] < t_param)
                return false;
            }
          }
        }
        // pair {b, x}: candidate k = a is dead (b -> a impossible now)
        {
          const int p = pidx(b, x);
          std::uint8_t& s = st[p][a];
          if (s == 0) {
            undo.push_back({p, a, s});
            s = 2;
            --open_count[p];
            if (common[p] + open_count[p] < t_param) return false;
          } else if (s == 1) {
            throw std::logic_error("search_doubly_regular: state corruption");
          }
        }
        // pair {a, x}: if x -> b was already known, k = b may become common;
        // covered above. If b -> x known, also covered.
      }
      return true;
    }

    void rollback(std::vector<Change>& undo) {
      for (auto it = undo.rbegin(); it != undo.rend(); ++it) {
        std::uint8_t& s = st[it->pair][it->k];
        if (s == 1) --common[it->pair];
        if (s != 0 && it->prev == 0) ++open_count[it->pair];
        s = it->prev;
      }
      undo.clear();
    }

    bool orient(int from, int to, std::size_t idx) {
      ++outdeg[from];
      rows[from].set(to);
      std::vector<Change> undo;
      const bool ok = apply(from, to, undo);
      if (ok) dfs(idx + 1);
      rollback(undo);
      rows[from].reset(to);
      --outdeg[from];
      return found;
    }

    void dfs(std::size_t idx) {
      if (found || nodes++ > budget) return;
      if (idx == pairs.size()) {
        found = true;
        solution = rows;
        return;
      }
      const auto [i, j] = pairs[idx];
      --undecided[i];
      --undecided[j];
      if (outdeg[i] < d && outdeg[j] + undecided[j] >= d)
        if (orient(i, j, idx)) return;
      if (!found && outdeg[j] < d && outdeg[i] + undecided[i] >= d)
        orient(j, i, idx);
      ++undecided[i];
      ++undecided[j];
    }
  };

  Search s;
  s.n = n;
  s.t_param = t_param;
  s.d = d;
  s.budget = node_budget;
  s.outdeg.assign(n, 0);
  s.rows.assign(n, VertexSet{});
  s.st.assign(static_cast<std::size_t>(n) * n,
              std::vector<std::uint8_t>(n, 0));
  s.common.assign(static_cast<std::size_t>(n) * n, 0);
  s.open_count.assign(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const int p = s.pidx(i, j);
      s.open_count[p] = n - 2;
      s.st[p][i] = s.st[p][j] = 2;  // members are never their own candidates
    }

  // symmetry breaking: N+(0) = {1..d}
  std::vector<Search::Change> preset_undo;
  for (int j = 1; j <= d; ++j) {
    s.rows[0].set(j);
    ++s.outdeg[0];
    if (!s.apply(0, j, preset_undo)) return std::nullopt;
  }
  for (int j = d + 1; j < n; ++j) {
    s.rows[j].set(0);
    ++s.outdeg[j];
    if (!s.apply(j, 0, preset_undo)) return std::nullopt;
  }
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j < n; ++j) s.pairs.emplace_back(i, j);
  s.undecided.assign(n, 0);
  for (const auto& [i, j] : s.pairs) {
    ++s.undecided[i];
    ++s.undecided[j];
  }

  s.dfs(0);
  if (!s.found) return std::nullopt;
  Tournament result(n, s.solution);
  if (!classify(result).is_doubly_regular)
    throw std::logic_error("search_doubly_regular: candidate failed checks");
  return result;
}

// Random regular tournament of odd order, reached from the circulant start
// by reversing randomly chosen 3-cycles (degree-preserving moves).
inline Tournament random_regular(int n, std::uint64_t seed, int steps = 0) {
  if (n < 3 || n % 2 == 0)
    throw std::invalid_argument("random_regular: order must be odd, >= 3");
  if (steps <= 0) steps = 20 * n * n;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<VertexSet> rows(n);
  for (int i = 0; i < n; ++i)
    for (int k = 1; k <= (n - 1) / 2; ++k) rows[i].set((i + k) % n);
  auto arc = [&rows](int a, int b) { return rows[a].test(b); };
  int done = 0;
  while (done < steps) {
    const int a = pick(rng), b = pick(rng), c = pick(rng);
    if (a == b || b == c || a == c) continue;
    if (arc(a, b) && arc(b, c) && arc(c, a)) {
      rows[a].reset(b); rows[b].set(a);
      rows[b].reset(c); rows[c].set(b);
      rows[c].reset(a); rows[a].set(c);
      ++done;
    }
  }
  return Tournament(n, rows);
}

}  // namespace tourney
