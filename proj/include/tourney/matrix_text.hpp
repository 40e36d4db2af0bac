#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "tourney/tournament.hpp"

namespace tourney {

// Plain 0/1 adjacency grid, one row per line. Whitespace between digits and
// blank lines are tolerated on input; errors name the offending line and
// column (1-based, counted over digits).
inline Tournament read_matrix_text(const std::string& text) {
  std::vector<std::string> rows;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string digits;
    for (std::size_t k = 0; k < line.size(); ++k) {
      const char c = line[k];
      if (c == ' ' || c == '\t' || c == '\r') continue;
      if (c != '0' && c != '1')
        throw std::invalid_argument(
            "matrix text: invalid character '" + std::string(1, c) +
            "' at line " + std::to_string(lineno) + ", column " +
            std::to_string(digits.size() + 1));
      digits.push_back(c);
    }
    if (!digits.empty()) rows.push_back(std::move(digits));
  }
  const int n = static_cast<int>(rows.size());
  if (n == 0) throw std::invalid_argument("matrix text: no rows");
  for (int i = 0; i < n; ++i)
    if (static_cast<int>(rows[i].size()) != n)
      throw std::invalid_argument(
          "matrix text: row " + std::to_string(i + 1) + " has " +
          std::to_string(rows[i].size()) + " digits, expected " +
          std::to_string(n));
  TournamentBuilder b(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (rows[i][j] == '1') b.add_arc(i, j);
  return std::move(b).build();  // tournament validation names the vertices
}

inline std::string write_matrix_text(const Tournament& t) {
  std::string out;
  const int n = t.order();
  out.reserve(static_cast<std::size_t>(n) * (n + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out.push_back(t.arc(i, j) ? '1' : '0');
    out.push_back('\n');
  }
  return out;
}

}  // namespace tourney
