#pragma once

#include <array>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "tourney/tournament.hpp"

namespace tourney {

// Transitive tournament TT_n: arc i->j iff i < j.
inline Tournament transitive(int n) {
  TournamentBuilder b(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) b.add_arc(i, j);
  return std::move(b).build();
}

// Regular locally transitive tournament RLT_n on Z_n:
// arc i->j iff (j - i) mod n lies in {1, ..., (n-1)/2}.
inline Tournament rlt(int n) {
  if (n < 1 || n % 2 == 0)
    throw std::invalid_argument("rlt: order must be odd and positive");
  TournamentBuilder b(n);
  const int half = (n - 1) / 2;
  for (int i = 0; i < n; ++i)
    for (int d = 1; d <= half; ++d) b.add_arc(i, (i + d) % n);
  return std::move(b).build();
}

inline bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Quadratic residue tournament QR_p on Z_p, p prime, p = 3 (mod 4):
// arc i->j iff j - i is a nonzero square mod p.
inline Tournament quadratic_residue(int p) {
  if (!is_prime(p))
    throw std::invalid_argument("quadratic_residue: " + std::to_string(p) +
                                " is not prime");
  if (p % 4 != 3)
    throw std::invalid_argument("quadratic_residue: " + std::to_string(p) +
                                " is not congruent to 3 mod 4");
  std::vector<bool> residue(p, false);
  for (int x = 1; x < p; ++x) residue[(x * x) % p] = true;
  TournamentBuilder b(p);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j)
      if (i != j && residue[((j - i) % p + p) % p]) b.add_arc(i, j);
  return std::move(b).build();
}

// Rotational (circulant) tournament on Z_n with connection set S:
// arc i->j iff (j - i) mod n is in S. S must pick exactly one of d, n-d
// for every d in 1..n-1.
inline Tournament rotational(int n, const std::vector<int>& connection) {
  if (n < 1 || n % 2 == 0)
    throw std::invalid_argument("rotational: order must be odd and positive");
  std::set<int> s;
  for (int d : connection) {
    if (d <= 0 || d >= n)
      throw std::invalid_argument(
          "rotational: connection value " + std::to_string(d) +
          " outside 1.." + std::to_string(n - 1));
    s.insert(d);
  }
  for (int d = 1; d < n; ++d) {
    const bool has_d = s.count(d) > 0;
    const bool has_nd = s.count(n - d) > 0;
    if (has_d == has_nd)
      throw std::invalid_argument(
          "rotational: connection set must contain exactly one of " +
          std::to_string(d) + " and " + std::to_string(n - d));
  }
  TournamentBuilder b(n);
  for (int i = 0; i < n; ++i)
    for (int d : s) b.add_arc(i, (i + d) % n);
  return std::move(b).build();
}

// Adjacency rows as 0/1 strings; rejects anything that is not a tournament.
inline Tournament from_rows(const std::vector<std::string>& rows) {
  const int n = static_cast<int>(rows.size());
  TournamentBuilder b(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n)
      throw std::invalid_argument("row " + std::to_string(i) +
                                  " has wrong length");
    for (int j = 0; j < n; ++j) {
      const char c = rows[i][j];
      if (c != '0' && c != '1')
        throw std::invalid_argument("row " + std::to_string(i) +
                                    ": invalid character");
      if (c == '1') b.add_arc(i, j);
    }
  }
  return std::move(b).build();
}

// The order-13 tournament SNDR_13, embedded as a constant table.
inline Tournament sndr13() {
  static const std::array<const char*, 13> rows = {
      "0111111000000",
      "0010101100011",
      "0001011000111",
      "0100011011001",
      "0011000111100",
      "0100100010111",
      "0000110101110",
      "1011010010010",
      "1110001001100",
      "1110010100001",
      "1101000101010",
      "1001100011001",
      "1000101110100",
  };
  return from_rows(std::vector<std::string>(rows.begin(), rows.end()));
}

// Tagged family choice for the build() entry point and the CLI.
struct Transitive { int n; };
struct Rlt { int n; };
struct Qr { int p; };
struct Rotational { int n; std::vector<int> connection; };
struct Sndr13 {};
struct FromMatrix { std::vector<std::string> rows; };

using FamilySpec =
    std::variant<Transitive, Rlt, Qr, Rotational, Sndr13, FromMatrix>;

inline Tournament build(const FamilySpec& spec) {
  return std::visit(
      [](const auto& s) -> Tournament {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Transitive>) return transitive(s.n);
        else if constexpr (std::is_same_v<T, Rlt>) return rlt(s.n);
        else if constexpr (std::is_same_v<T, Qr>) return quadratic_residue(s.p);
        else if constexpr (std::is_same_v<T, Rotational>)
          return rotational(s.n, s.connection);
        else if constexpr (std::is_same_v<T, Sndr13>) return sndr13();
        else return from_rows(s.rows);
      },
      spec);
}

}  // namespace tourney
