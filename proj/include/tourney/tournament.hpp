#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tourney {

// Orders are capped so a vertex set always fits in two machine words.
inline constexpr int kMaxOrder = 128;

// Set of vertices of a tournament of order <= kMaxOrder.
struct VertexSet {
  std::uint64_t w0 = 0;
  std::uint64_t w1 = 0;

  static VertexSet all(int n) {
    VertexSet s;
    if (n >= 64) {
      s.w0 = ~0ULL;
      s.w1 = (n == 128) ? ~0ULL : ((1ULL << (n - 64)) - 1);
    } else {
      s.w0 = (n == 64) ? ~0ULL : ((1ULL << n) - 1);
    }
    return s;
  }

  bool test(int v) const {
    return v < 64 ? (w0 >> v) & 1 : (w1 >> (v - 64)) & 1;
  }
  void set(int v) {
    if (v < 64) w0 |= 1ULL << v; else w1 |= 1ULL << (v - 64);
  }
  void reset(int v) {
    if (v < 64) w0 &= ~(1ULL << v); else w1 &= ~(1ULL << (v - 64));
  }
  int count() const {
    return std::popcount(w0) + std::popcount(w1);
  }
  bool empty() const { return w0 == 0 && w1 == 0; }
  bool any() const { return !empty(); }

  friend VertexSet operator&(VertexSet a, VertexSet b) {
    return {a.w0 & b.w0, a.w1 & b.w1};
  }
  friend VertexSet operator|(VertexSet a, VertexSet b) {
    return {a.w0 | b.w0, a.w1 | b.w1};
  }
  friend VertexSet operator-(VertexSet a, VertexSet b) {
    return {a.w0 & ~b.w0, a.w1 & ~b.w1};
  }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  // Applies f to each member, ascending.
  template <typename F>
  void for_each(F&& f) const {
    std::uint64_t w = w0;
    while (w) {
      f(std::countr_zero(w));
      w &= w - 1;
    }
    w = w1;
    while (w) {
      f(64 + std::countr_zero(w));
      w &= w - 1;
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int v) { out.push_back(v); });
    return out;
  }
};

// A tournament of order n: a complete oriented graph stored as out-neighbour
// bit rows. Immutable after construction; construction validates that the
// diagonal is empty and that exactly one of (i,j),(j,i) is an arc.
class Tournament {
 public:
  Tournament(int n, std::vector<VertexSet> out_rows)
      : n_(n), out_(std::move(out_rows)) {
    validate();
    in_.resize(n_);
    for (int i = 0; i < n_; ++i)
      out_[i].for_each([&](int j) { in_[j].set(i); });
  }

  int order() const { return n_; }
  bool arc(int i, int j) const { return out_[i].test(j); }
  const VertexSet& out_set(int i) const { return out_[i]; }
  const VertexSet& in_set(int i) const { return in_[i]; }
  int out_degree(int i) const { return out_[i].count(); }
  int in_degree(int i) const { return in_[i].count(); }

  bool is_regular() const {
    const int d = out_degree(0);
    for (int i = 1; i < n_; ++i)
      if (out_degree(i) != d) return false;
    return true;
  }

  // (n-1)/2 for a regular tournament; throws otherwise.
  int semidegree() const {
    if (!is_regular())
      throw std::domain_error("semidegree: tournament is not regular");
    return (n_ - 1) / 2;
  }

  friend bool operator==(const Tournament& a, const Tournament& b) {
    return a.n_ == b.n_ && a.out_ == b.out_;
  }

 private:
  void validate() const {
    if (n_ < 1 || n_ > kMaxOrder)
      throw std::invalid_argument("tournament order must be in 1.." +
                                  std::to_string(kMaxOrder));
    if (static_cast<int>(out_.size()) != n_)
      throw std::invalid_argument("tournament: row count does not match order");
    const VertexSet universe = VertexSet::all(n_);
    for (int i = 0; i < n_; ++i) {
      if (!((out_[i] - universe).empty()))
        throw std::invalid_argument("tournament: row " + std::to_string(i) +
                                    " has bits beyond the order");
      if (out_[i].test(i))
        throw std::invalid_argument("tournament: self-arc at vertex " +
                                    std::to_string(i));
      for (int j = i + 1; j < n_; ++j)
        if (out_[i].test(j) == out_[j].test(i))
          throw std::invalid_argument(
              "tournament: pair (" + std::to_string(i) + "," +
              std::to_string(j) + ") must have exactly one arc");
    }
  }

  int n_;
  std::vector<VertexSet> out_;
  std::vector<VertexSet> in_;
};

// Builder for the constructors: collect arcs, then freeze.
class TournamentBuilder {
 public:
  explicit TournamentBuilder(int n) : n_(n), rows_(n) {}
  void add_arc(int i, int j) { rows_[i].set(j); }
  int order() const { return n_; }
  Tournament build() && { return Tournament(n_, std::move(rows_)); }

 private:
  int n_;
  std::vector<VertexSet> rows_;
};

// Relabels: vertex v of t becomes perm[v] in the result.
inline Tournament relabel(const Tournament& t, const std::vector<int>& perm) {
  const int n = t.order();
  if (static_cast<int>(perm.size()) != n)
    throw std::invalid_argument("relabel: permutation size mismatch");
  TournamentBuilder b(n);
  for (int i = 0; i < n; ++i)
    t.out_set(i).for_each([&](int j) { b.add_arc(perm[i], perm[j]); });
  return std::move(b).build();
}

// Induced subtournament on the members of s (relabelled 0..|s|-1, ascending).
inline Tournament induced(const Tournament& t, const VertexSet& s) {
  const std::vector<int> verts = s.to_vector();
  const int k = static_cast<int>(verts.size());
  TournamentBuilder b(k);
  for (int a = 0; a < k; ++a)
    for (int c = 0; c < k; ++c)
      if (a != c && t.arc(verts[a], verts[c])) b.add_arc(a, c);
  return std::move(b).build();
}

// 3-cycles of t by the degree formula: C(n,3) - sum_i C(outdeg_i, 2).
inline std::int64_t triangle_count(const Tournament& t) {
  const std::int64_t n = t.order();
  std::int64_t cycles = n * (n - 1) * (n - 2) / 6;
  for (int i = 0; i < n; ++i) {
    const std::int64_t d = t.out_degree(i);
    cycles -= d * (d - 1) / 2;
  }
  return cycles;
}

// 3-cycles inside the subtournament induced by s, without materialising it.
inline std::int64_t triangle_count_within(const Tournament& t,
                                          const VertexSet& s) {
  const std::int64_t k = s.count();
  std::int64_t cycles = k * (k - 1) * (k - 2) / 6;
  s.for_each([&](int v) {
    const std::int64_t d = (t.out_set(v) & s).count();
    cycles -= d * (d - 1) / 2;
  });
  return cycles;
}

}  // namespace tourney
