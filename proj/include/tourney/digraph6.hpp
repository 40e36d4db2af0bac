#pragma once

#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include "tourney/tournament.hpp"

namespace tourney {

// Decode failures carry a category so callers can tell malformed input from
// well-formed digraphs that simply are not tournaments.
class Digraph6Error : public std::runtime_error {
 public:
  enum class Kind { bad_header, truncated, not_tournament };

  Digraph6Error(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// A decoded digraph before tournament validation (the relaxed view).
struct RawDigraph {
  int n = 0;
  std::vector<VertexSet> rows;
};

namespace detail {

inline void append_six_bit_groups(std::string& out, std::uint64_t value,
                                  int groups) {
  for (int g = groups - 1; g >= 0; --g)
    out.push_back(static_cast<char>(63 + ((value >> (6 * g)) & 63)));
}

}  // namespace detail

// digraph6 record: '&', the size field N(n), then the row-major adjacency
// bits, six per character offset by 63, zero padded.
inline std::string encode_digraph6_raw(const RawDigraph& d) {
  std::string out = "&";
  if (d.n <= 62) {
    out.push_back(static_cast<char>(63 + d.n));
  } else {
    out.push_back('~');
    detail::append_six_bit_groups(out, static_cast<std::uint64_t>(d.n), 3);
  }
  int bits = 0;
  int value = 0;
  for (int i = 0; i < d.n; ++i)
    for (int j = 0; j < d.n; ++j) {
      value = (value << 1) | (d.rows[i].test(j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(63 + value));
        bits = 0;
        value = 0;
      }
    }
  if (bits > 0)
    out.push_back(static_cast<char>(63 + (value << (6 - bits))));
  return out;
}

inline std::string encode_digraph6(const Tournament& t) {
  RawDigraph d;
  d.n = t.order();
  d.rows.reserve(d.n);
  for (int i = 0; i < d.n; ++i) d.rows.push_back(t.out_set(i));
  return encode_digraph6_raw(d);
}

// Relaxed decode: any digraph, for diagnostics.
inline RawDigraph decode_digraph6_raw(const std::string& line) {
  if (line.empty() || line[0] != '&')
    throw Digraph6Error(Digraph6Error::Kind::bad_header,
                        "digraph6: record must start with '&'");
  std::size_t pos = 1;
  auto next_char = [&]() -> int {
    if (pos >= line.size())
      throw Digraph6Error(Digraph6Error::Kind::truncated,
                          "digraph6: record ends inside the size field");
    const unsigned char c = static_cast<unsigned char>(line[pos++]);
    if (c < 63 || c > 126)
      throw Digraph6Error(Digraph6Error::Kind::bad_header,
                          "digraph6: character out of range");
    return c - 63;
  };
  std::uint64_t n;
  const int first = next_char();
  if (first < 63) {
    n = static_cast<std::uint64_t>(first);
  } else {
    // '~' prefix: next three characters carry 18 bits
    n = 0;
    for (int g = 0; g < 3; ++g) n = (n << 6) | static_cast<std::uint64_t>(next_char());
  }
  if (n < 1 || n > static_cast<std::uint64_t>(kMaxOrder))
    throw Digraph6Error(Digraph6Error::Kind::bad_header,
                        "digraph6: order " + std::to_string(n) +
                            " outside 1.." + std::to_string(kMaxOrder));

  RawDigraph d;
  d.n = static_cast<int>(n);
  d.rows.assign(d.n, VertexSet{});
  const std::uint64_t total_bits = n * n;
  const std::uint64_t payload = (total_bits + 5) / 6;
  if (line.size() - pos < payload)
    throw Digraph6Error(Digraph6Error::Kind::truncated,
                        "digraph6: truncated bit field");
  if (line.size() - pos > payload)
    throw Digraph6Error(Digraph6Error::Kind::bad_header,
                        "digraph6: trailing characters after the bit field");
  std::uint64_t bit = 0;
  for (std::uint64_t c = 0; c < payload; ++c) {
    const int v = next_char();
    for (int b = 5; b >= 0; --b, ++bit) {
      if (bit >= total_bits) {
        if ((v >> b) & 1)
          throw Digraph6Error(Digraph6Error::Kind::bad_header,
                              "digraph6: nonzero padding bits");
        continue;
      }
      if ((v >> b) & 1)
        d.rows[bit / n].set(static_cast<int>(bit % n));
    }
  }
  return d;
}

// Strict decode: the record must be a tournament.
inline Tournament decode_digraph6(const std::string& line) {
  RawDigraph d = decode_digraph6_raw(line);
  try {
    return Tournament(d.n, std::move(d.rows));
  } catch (const std::invalid_argument& e) {
    throw Digraph6Error(Digraph6Error::Kind::not_tournament, e.what());
  }
}

// Reads a whole file of records; a leading ">>digraph6<<" banner and blank
// lines are tolerated and skipped.
inline std::vector<Tournament> read_digraph6_stream(std::istream& in) {
  std::vector<Tournament> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.rfind(">>digraph6<<", 0) == 0) {
      line = line.substr(12);
      if (line.empty()) continue;
    }
    out.push_back(decode_digraph6(line));
  }
  return out;
}

}  // namespace tourney
