#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "tourney/formulas.hpp"
#include "tourney/rational.hpp"

namespace tourney {

struct CrossoverReport {
  RationalPolynomial difference;  // c8_rlt(n) - c8_dr(n)
  std::vector<std::pair<int, int>> signs;  // (odd n, sign) over the scan
  int threshold = 0;        // least odd n with positive difference onwards
  int negative_from = 0;    // observed run of negative signs before it
  int negative_to = 0;
  bool cubic_pattern_ok = false;
};

// Sign analysis of c8(RLT_n) - c8(DR_n) over odd n in 9..scan_max, plus the
// sign pattern of the cubic 17z^3 - 810z^2 + 6610z - 9255 that controls it.
inline CrossoverReport crossover_analysis(int scan_max = 201) {
  if (scan_max < 9) throw std::invalid_argument("crossover: scan too small");
  CrossoverReport r;
  r.difference = formula_poly(Formula::c8_rlt) - formula_poly(Formula::c8_dr);

  for (int n = 9; n <= scan_max; n += 2) {
    const Rational d = r.difference.eval(n);
    r.signs.emplace_back(n, d > 0 ? 1 : d < 0 ? -1 : 0);
  }
  // least odd n from which every sign is positive
  int threshold = 0;
  for (auto it = r.signs.rbegin(); it != r.signs.rend(); ++it) {
    if (it->second > 0) threshold = it->first;
    else break;
  }
  r.threshold = threshold;
  for (const auto& [n, s] : r.signs) {
    if (s < 0) {
      if (r.negative_from == 0) r.negative_from = n;
      r.negative_to = n;
    }
  }

  const RationalPolynomial cubic({Rational(-9255), Rational(6610),
                                  Rational(-810), Rational(17)});
  r.cubic_pattern_ok = cubic.eval(1) < 0 && cubic.eval(2) > 0 &&
                       cubic.eval(8) > 0 && cubic.eval(9) < 0 &&
                       cubic.eval(37) < 0 && cubic.eval(38) > 0;
  return r;
}

}  // namespace tourney
