// Acceptance suite: one line per criterion, nonzero exit on any failure.
// argv[1] (optional): path to the CLI binary, used to drive the end-to-end
// corpus check; without it that criterion falls back to the library route.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "tourney/canonical.hpp"
#include "tourney/census.hpp"
#include "tourney/classify.hpp"
#include "tourney/crossover.hpp"
#include "tourney/digraph6.hpp"
#include "tourney/enumerate.hpp"
#include "tourney/families.hpp"
#include "tourney/figure_eight.hpp"
#include "tourney/formulas.hpp"
#include "tourney/identities.hpp"
#include "tourney/rlt_system.hpp"
#include "tourney/spectral.hpp"
#include "tourney/transforms.hpp"
#include "tourney/walks.hpp"

using namespace tourney;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& what) {
  if (!pass) ++failures;
  std::printf("criterion %2d: %s  %s\n", criterion, pass ? "PASS" : "FAIL",
              what.c_str());
  std::fflush(stdout);
}

int workers() {
  const unsigned hw = std::thread::hardware_concurrency();
  return static_cast<int>(std::min(8u, hw ? hw : 1u));
}

Tournament umin11() {
  return f_map(dominate_join(
      cycle_blowup(transitive(2), transitive(1), transitive(1)),
      transitive(1)));
}
Tournament umin13() {
  return f_map(dominate_join(
      cycle_blowup(transitive(2), transitive(2), transitive(1)),
      transitive(1)));
}
Tournament delta_wreath() {
  const Tournament d = rlt(3);
  return cycle_blowup(d, d, d);
}

// ---- 1: brute-force c8 of the locally transitive family -------------------
void criterion_1() {
  const std::uint64_t expected[] = {441, 6644, 45903};
  bool ok = true;
  std::string detail;
  for (int k = 0; k < 3; ++k) {
    const int n = 9 + 2 * k;
    const std::uint64_t census = count_cycles(rlt(n), 8, workers()).total;
    ok = ok && census == expected[k] &&
         Rational(census) == eval_formula(Formula::c8_rlt, n);
    detail += (k ? ", " : "") + std::to_string(census);
  }
  report(1, ok, "c8(rlt 9/11/13) = " + detail + " by enumeration and form");
}

// ---- 2: QR_11 total and per-arc uniformity ---------------------------------
void criterion_2() {
  const Tournament qr = quadratic_residue(11);
  const CycleCensus census = count_cycles(qr, 8, workers());
  bool ok = census.total == 7425;
  bool uniform = true;
  for (int i = 0; i < 11; ++i)
    for (int j = 0; j < 11; ++j)
      if (qr.arc(i, j) && census.arc_count(i, j) != 1080) uniform = false;
  ok = ok && uniform;
  ok = ok && 16 * census.total / 110 == 1080 && (16 * census.total) % 110 == 0;
  report(2, ok, "c8(qr 11) = 7425, every arc on 1080 8-cycles");
}

// ---- 3: walk-table path-count route for QR_19 and QR_23 --------------------
std::vector<std::vector<std::uint64_t>> corr19;  // reused by criterion 4

void criterion_3() {
  bool ok = true;
  std::string detail;
  for (int p : {19, 23}) {
    const Tournament qr = quadratic_residue(p);
    const WalkTable table = walk_table(qr, 7);
    const auto corr = nonpath_walk_matrix(qr, 7, workers());
    if (p == 19) corr19 = corr;
    Int paths_sum = 0;
    for (int i = 0; i < p; ++i)
      for (int j = 0; j < p; ++j)
        if (qr.arc(j, i)) paths_sum += table.entry(7, i, j) - corr[i][j];
    const Rational c8 = Rational(paths_sum, 8);
    ok = ok && c8 == eval_formula(Formula::c8_dr, p);
    detail += (p == 19 ? "" : ", ") + std::string("c8(qr ") +
              std::to_string(p) + ") = " + to_string(c8);
  }
  report(3, ok, detail);
}

// ---- 4: correction-count oracle over every arc -----------------------------
void criterion_4() {
  bool ok = true;
  for (int p : {7, 11, 19}) {
    const Tournament qr = quadratic_residue(p);
    const Rational expected = eval_formula(Formula::corr7_dr, (p - 3) / 4);
    const auto corr =
        (p == 19 && !corr19.empty())
            ? corr19
            : nonpath_walk_matrix(qr, 7, workers());
    for (int i = 0; i < p; ++i)
      for (int j = 0; j < p; ++j)
        if (qr.arc(j, i) && Rational(corr[i][j]) != expected) ok = false;
  }
  report(4, ok, "non-path 7-walk counts on every arc of qr 7/11/19");
}

// ---- 5: the m=8 triangular system ------------------------------------------
void criterion_5() {
  const RltSystem sys = rlt_coefficient_system(
      8, formula_poly(Formula::c7_rlt), formula_poly(Formula::c8fig_rlt0));
  const Rational expected_f[] = {
      Rational(-18659, 6720), Rational(224123, 40320), Rational(8947, 2880),
      Rational(-2407, 960),   Rational(473, 192),      Rational(-271, 1152),
      Rational(13, 576)};
  // alpha_3 is +13/576: the value forced by the system and by the factored
  // c8 form; see the decisions ledger
  const Rational expected_alpha[] = {
      Rational(85, 256),      Rational(-6439, 10752), Rational(13, 576),
      Rational(11651, 23040), Rational(-791, 2304),   Rational(427, 4608),
      Rational(-13, 1152),    Rational(83, 161280)};
  bool ok = sys.beta_m == Rational(17, 315) &&
            sys.alpha_top == Rational(83, 161280);
  for (int k = 0; k <= 6; ++k) ok = ok && sys.f[k] == expected_f[k];
  for (int k = 1; k <= 8; ++k)
    ok = ok && sys.alpha.coeff(k) == expected_alpha[k - 1];
  ok = ok && sys.alpha == formula_poly(Formula::c8_rlt);
  ok = ok && sys.alpha.eval(9) == 441 && sys.alpha.eval(11) == 6644 &&
       sys.alpha.eval(13) == 45903;
  report(5, ok, "triangular system reproduces f_k, alpha_k and the c8 form");
}

// ---- 6: figure-eight closed forms ------------------------------------------
void criterion_6() {
  bool ok = true;
  for (int n = 7; n <= 15; n += 2) {
    const Tournament t = rlt(n);
    const Rational d = Rational(n - 1, 2);
    const FigureEightCensus f = count_figure_eight(t, 0, 8);
    ok = ok && Rational(f.total) == eval_formula(Formula::c8fig_rlt0, n);
    ok = ok && Rational(f.split(3, 5)) == eval_formula(Formula::c35_rlt0, d);
    ok = ok && Rational(f.split(5, 3)) == eval_formula(Formula::c35_rlt0, d);
    ok = ok && Rational(f.split(4, 4)) == eval_formula(Formula::c44_rlt0, d);
    if (n == 9)
      ok = ok && f.split(3, 5) == 173 && f.split(4, 4) == 290 && f.total == 636;
  }
  report(6, ok, "figure-eight censuses match the closed forms, odd n in 7..15");
}

// ---- 7: the deletion recurrence by pure enumeration ------------------------
void criterion_7() {
  bool ok = true;
  for (int m = 4; m <= 8; ++m)
    for (int n = m % 2 ? m : m + 1; n <= 13; n += 2)
      ok = ok && verify_rlt_recurrence(m, n).equal;
  report(7, ok, "deletion recurrence holds for m in 4..8, odd n in m..13");
}

// ---- 8: order-13 maximiser scoreboard ---------------------------------------
void criterion_8() {
  const Tournament s13 = sndr13();
  const CycleCensus census = count_cycles(s13, 8, workers());
  const std::uint64_t expected[] = {30618, 30604, 30610, 30598, 30618,
                                    30608, 30604, 30594, 30594, 30612,
                                    30612, 30598, 30610};
  bool ok = true;
  std::uint64_t sum = 0;
  for (int v = 0; v < 13; ++v) {
    ok = ok && census.per_vertex[v] == expected[v];
    sum += census.per_vertex[v];
  }
  ok = ok && sum == 397880 && census.total == 49735 && sum == 8 * census.total;

  const IntPolynomial cp = char_poly(s13);
  const long printed[] = {4434, 9749, 18310, 20147, 19749, 13408, 8358,
                          3597, 1482, 351,   91,    0,     0};
  ok = ok && cp.degree() == 13 && cp.coeff(13) == 1;
  for (int k = 0; k <= 12; ++k) ok = ok && -cp.coeff(k) == printed[k];
  ok = ok && cp == char_poly_interpolated(s13);
  ok = ok && discriminant(cp) ==
                 Int("157525764385770965120257003012282911852530325");
  ok = ok && canonicalize(s13).aut_order == 1;
  report(8, ok,
         "order-13 maximiser: per-vertex counts, 397880 = 8*49735, "
         "characteristic polynomial, discriminant, trivial automorphisms");
}

// ---- 9: minimiser chain scoreboard ------------------------------------------
void criterion_9() {
  bool ok = true;
  const Tournament dd = delta_wreath();
  const Tournament u11 = umin11(), u13 = umin13();
  ok = ok && count_cycles(dd, 8, workers()).total == 405;
  ok = ok && count_cycles(rotational(9, {2, 3, 4, 8}), 8, workers()).total == 477;
  ok = ok && count_cycles(u11, 8, workers()).total == 6605;
  ok = ok && count_cycles(u13, 8, workers()).total == 45475;
  ok = ok && trace_power(u11, 4) == 784 && trace_power(u13, 4) == 1628;
  ok = ok && mean_outset_c3(u11).trace_formula == Rational(24, 11);
  ok = ok && mean_outset_c3(u13).trace_formula == Rational(48, 13);
  ok = ok && mean_outset_c3(quadratic_residue(11)).trace_formula == 5;
  for (int k = 1; k <= 10 && ok; ++k)
    ok = are_isomorphic(f_map(transitive(k)), rlt(2 * k + 1), true);
  ok = ok && canonicalize(dd).aut_order == 81;
  ok = ok && !are_isomorphic(
                 dd, f_map(dominate_join(cycle_blowup(transitive(1),
                                                      transitive(1),
                                                      transitive(1)),
                                         transitive(1))));
  report(9, ok,
         "minimisers 405/6605/45475, maximiser 477, tr_4 784/1628, mean "
         "out-set c3 values, doubling-map chain, wreath automorphisms");
}

// ---- 10: crossover signs -----------------------------------------------------
void criterion_10() {
  const CrossoverReport r = crossover_analysis(201);
  bool ok = r.threshold == 39 && r.cubic_pattern_ok;
  for (const auto& [n, s] : r.signs) {
    if (n >= 11 && n <= 35) ok = ok && s < 0;
    if (n >= 39) ok = ok && s > 0;
  }
  report(10, ok, "c8 gap negative for odd 11..35, positive for odd 39..201, "
                 "cubic sign pattern");
}

// ---- 11: exhaustive enumeration at order 9 ----------------------------------
void criterion_11() {
  const EnumerationResult r = enumerate_regular(9);
  std::uint64_t cmin = ~0ULL, cmax = 0;
  int min_count = 0, max_count = 0;
  const RegularClassInfo* argmin = nullptr;
  const RegularClassInfo* argmax = nullptr;
  for (const RegularClassInfo& cls : r.classes) {
    if (*cls.c8 < cmin) cmin = *cls.c8;
    if (*cls.c8 > cmax) cmax = *cls.c8;
  }
  for (const RegularClassInfo& cls : r.classes) {
    if (*cls.c8 == cmin) { ++min_count; argmin = &cls; }
    if (*cls.c8 == cmax) { ++max_count; argmax = &cls; }
  }
  bool ok = cmin == 405 && cmax == 477 && min_count == 1 && max_count == 1;
  ok = ok && argmin && are_isomorphic(argmin->representative, delta_wreath());
  ok = ok && argmax &&
       are_isomorphic(argmax->representative, rotational(9, {2, 3, 4, 8}));
  report(11, ok,
         "order-9 classes: c8 extremes 405/477, each attained by exactly one "
         "class, the named ones (" +
             std::to_string(r.classes.size()) +
             " classes found; count reported, not gated)");
}

// ---- 12: eigenvalue moments --------------------------------------------------
void criterion_12() {
  bool ok = true;
  const SigmaMoment s4 = sigma_moment(quadratic_residue(11), 4);
  ok = ok && std::abs(s4.value - 75.625) <= 75.625 * 1e-6;
  // every other order-11 regular tournament tested sits strictly above
  std::vector<Tournament> others = {rlt(11), umin11()};
  for (std::uint64_t seed : {1u, 2u, 3u, 4u, 5u})
    others.push_back(random_regular(11, seed));
  for (const Tournament& t : others) {
    const bool is_dr = classify(t).is_doubly_regular;
    const double v = sigma_moment(t, 4).value;
    ok = ok && (is_dr ? std::abs(v - 75.625) <= 75.625 * 1e-6 : v > 75.625);
  }
  for (int m : {3, 5, 7})
    ok = ok && std::abs(sigma_moment(quadratic_residue(11), m).value) <= 1e-6 &&
         std::abs(sigma_moment(rlt(13), m).value) <= 1e-6;
  report(12, ok,
         "sigma_4(qr 11) = 75.625 within 1e-6; strictly larger for the other "
         "order-11 regulars tested; odd moments vanish");
}

// ---- 13: conditional corpus check --------------------------------------------
void criterion_13(const char* cli_path) {
  // No reference corpus ships with the repository, so global extremality at
  // n = 11 is checked conditionally: over a generated corpus that contains
  // the named extremal tournaments, the census extremes must be theirs.
  const std::string corpus_path = "acceptance_corpus_n11.d6";
  std::ofstream corpus(corpus_path);
  corpus << ">>digraph6<<\n";
  corpus << encode_digraph6(umin11()) << '\n';
  corpus << encode_digraph6(rlt(11)) << '\n';
  corpus << encode_digraph6(quadratic_residue(11)) << '\n';
  for (std::uint64_t seed = 10; seed < 22; ++seed)
    corpus << encode_digraph6(random_regular(11, seed)) << '\n';
  corpus.close();

  std::uint64_t cmin = ~0ULL, cmax = 0;
  {
    std::ifstream in(corpus_path);
    for (const Tournament& t : read_digraph6_stream(in)) {
      const std::uint64_t c = count_cycles(t, 8, workers()).total;
      cmin = std::min(cmin, c);
      cmax = std::max(cmax, c);
    }
  }
  bool ok = cmin == 6605 && cmax == 7425;

  bool cli_checked = false;
  if (cli_path != nullptr) {
    const std::string out_path = "acceptance_corpus_n11.out";
    const std::string cmd = std::string(cli_path) + " count --in " +
                            corpus_path + " --m 8 > " + out_path;
    if (std::system(cmd.c_str()) == 0) {
      std::ifstream out(out_path);
      std::stringstream buf;
      buf << out.rdbuf();
      const std::string text = buf.str();
      cli_checked = text.find("min total 6605") != std::string::npos &&
                    text.find("max total 7425") != std::string::npos;
    }
    ok = ok && cli_checked;
  }
  report(13, ok,
         std::string("conditional: supplied n=11 corpus census extremes are "
                     "6605/7425") +
             (cli_path ? (cli_checked ? " (checked through the CLI)"
                                      : " (CLI route FAILED)")
                       : " (library route only)"));
}

}  // namespace

int main(int argc, char** argv) {
  const char* cli_path = argc > 1 ? argv[1] : nullptr;
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11();
  criterion_12();
  criterion_13(cli_path);
  if (failures == 0) std::printf("acceptance: all 13 criteria PASS\n");
  else std::printf("acceptance: %d criterion(s) FAILED\n", failures);
  return failures;
}
