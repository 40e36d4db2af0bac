// Command-line front end: exact cycle censuses, verification suites,
// crossover tables and exhaustive enumeration over small tournaments.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
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
#include "tourney/matrix_text.hpp"
#include "tourney/report.hpp"
#include "tourney/rlt_system.hpp"
#include "tourney/spectral.hpp"
#include "tourney/transforms.hpp"
#include "tourney/walks.hpp"

using namespace tourney;

namespace {

struct OutputOptions {
  std::string path;
  std::string format = "json";
};

void add_output_flags(CLI::App* cmd, OutputOptions& out) {
  cmd->add_option("--out", out.path, "write the report to this path");
  cmd->add_option("--format", out.format, "report format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
}

void emit_report(const ReportDocument& doc, const OutputOptions& out) {
  if (out.path.empty()) return;
  std::ofstream file(out.path);
  if (!file) throw std::runtime_error("cannot open output file: " + out.path);
  if (out.format == "csv") file << doc.to_csv();
  else file << doc.to_json().dump(2) << '\n';
}

struct FamilyOptions {
  std::string family;
  int n = 0;
  std::vector<int> connection;
  std::string in_path;
};

void add_family_flags(CLI::App* cmd, FamilyOptions& fam) {
  cmd->add_option("--family", fam.family,
                  "tt | rlt | qr | rotational | sndr13")
      ->check(CLI::IsMember({"tt", "rlt", "qr", "rotational", "sndr13"}));
  cmd->add_option("--n", fam.n, "order (or prime for qr)");
  cmd->add_option("--set", fam.connection,
                  "rotational connection set, e.g. --set 2 3 4 8");
  cmd->add_option("--in", fam.in_path,
                  "input file (digraph6 or matrix text, auto-detected)");
}

std::string family_label(const FamilyOptions& fam) {
  if (fam.family == "rotational") {
    std::string s = "rotational(" + std::to_string(fam.n) + ",{";
    for (std::size_t i = 0; i < fam.connection.size(); ++i)
      s += (i ? "," : "") + std::to_string(fam.connection[i]);
    return s + "})";
  }
  if (fam.family == "sndr13") return "sndr13";
  return fam.family + "(" + std::to_string(fam.n) + ")";
}

std::vector<std::pair<std::string, Tournament>> load_inputs(
    const FamilyOptions& fam) {
  std::vector<std::pair<std::string, Tournament>> out;
  if (!fam.in_path.empty()) {
    std::ifstream file(fam.in_path);
    if (!file) throw std::runtime_error("cannot open input: " + fam.in_path);
    std::stringstream buf;
    buf << file.rdbuf();
    const std::string text = buf.str();
    const std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos)
      throw std::runtime_error("input file is empty: " + fam.in_path);
    if (text[first] == '&' || text.compare(first, 12, ">>digraph6<<") == 0) {
      std::istringstream in(text);
      int index = 0;
      for (Tournament& t : read_digraph6_stream(in))
        out.emplace_back(fam.in_path + "#" + std::to_string(index++),
                         std::move(t));
    } else {
      out.emplace_back(fam.in_path, read_matrix_text(text));
    }
    return out;
  }
  if (fam.family.empty())
    throw CLI::ValidationError("--family or --in is required");
  if (fam.family == "tt") out.emplace_back(family_label(fam), transitive(fam.n));
  else if (fam.family == "rlt") out.emplace_back(family_label(fam), rlt(fam.n));
  else if (fam.family == "qr")
    out.emplace_back(family_label(fam), quadratic_residue(fam.n));
  else if (fam.family == "rotational")
    out.emplace_back(family_label(fam), rotational(fam.n, fam.connection));
  else out.emplace_back("sndr13", sndr13());
  return out;
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

// ---------------------------------------------------------------------------
// verification rows

struct Scoreboard {
  ReportDocument doc;
  bool all_pass = true;

  void row(const std::string& object, int n, int m, const std::string& name,
           const std::string& lhs, const std::string& rhs) {
    const bool pass = lhs == rhs;
    all_pass = all_pass && pass;
    doc.rows.push_back({object, n, m, name,
                        (pass ? "pass: " : "FAIL: ") + lhs +
                            (pass ? " == " : " != ") + rhs});
    std::cout << (pass ? "  pass  " : "  FAIL  ") << object << "  " << name
              << "  " << lhs << (pass ? " == " : " != ") << rhs << '\n';
  }

  template <typename L, typename R>
  void row_values(const std::string& object, int n, int m,
                  const std::string& name, const L& lhs, const R& rhs) {
    std::ostringstream l, r;
    l << lhs;
    r << rhs;
    row(object, n, m, name, l.str(), r.str());
  }

  void row_bool(const std::string& object, int n, int m,
                const std::string& name, bool pass) {
    row(object, n, m, name, pass ? "true" : "false", "true");
  }
};

void suite_formulas(Scoreboard& sb, int n_max, int workers) {
  for (int n = 9; n <= std::min(n_max, 13); n += 2)
    sb.row_values("rlt(" + std::to_string(n) + ")", n, 8, "c8 census == c8 form",
                  count_cycles(rlt(n), 8, workers).total,
                  eval_formula(Formula::c8_rlt, n));
  if (n_max >= 11)
    sb.row_values("qr(11)", 11, 8, "c8 census == c8 form",
                  count_cycles(quadratic_residue(11), 8, workers).total,
                  eval_formula(Formula::c8_dr, 11));
  for (int n = 5; n <= std::min(n_max, 13); n += 2) {
    sb.row_values("rlt(" + std::to_string(n) + ")", n, 4, "c4 census == c4 form",
                  count_cycles(rlt(n), 4).total,
                  eval_formula(Formula::c4_rlt, n));
    if (n >= 7)
      sb.row_values("rlt(" + std::to_string(n) + ")", n, 7,
                    "c7 census == c7 form", count_cycles(rlt(n), 7).total,
                    eval_formula(Formula::c7_rlt, n));
  }
  for (int p : {7, 11})
    if (p <= n_max)
      sb.row_values("qr(" + std::to_string(p) + ")", p, 4,
                    "c4 census == c4 form",
                    count_cycles(quadratic_residue(p), 4).total,
                    eval_formula(Formula::c4_dr, p));
  for (int n = 7; n <= std::min(n_max, 15); n += 2) {
    const Tournament t = rlt(n);
    const Rational d = Rational(n - 1, 2);
    const FigureEightCensus f = count_figure_eight(t, 0, 8);
    sb.row_values("rlt(" + std::to_string(n) + ")", n, 8,
                  "figure-eight total == form", f.total,
                  eval_formula(Formula::c8fig_rlt0, n));
    sb.row_values("rlt(" + std::to_string(n) + ")", n, 8,
                  "figure-eight (3,5) == form", f.split(3, 5),
                  eval_formula(Formula::c35_rlt0, d));
    sb.row_values("rlt(" + std::to_string(n) + ")", n, 8,
                  "figure-eight (4,4) == form", f.split(4, 4),
                  eval_formula(Formula::c44_rlt0, d));
  }
  const RltSystem sys = rlt_coefficient_system(
      8, formula_poly(Formula::c7_rlt), formula_poly(Formula::c8fig_rlt0));
  sb.row_bool("coefficient system", 0, 8, "solution equals the c8 form",
              sys.alpha == formula_poly(Formula::c8_rlt));
}

void suite_identities(Scoreboard& sb) {
  const auto run = [&sb](const std::string& name, const IdentityCheck& c,
                         int n, int m) {
    sb.row(name, n, m, c.name, to_string(c.lhs), to_string(c.rhs));
  };
  run("tt(9)", verify_kendall_c3(transitive(9)), 9, 3);
  run("sndr13", verify_kendall_c3(sndr13()), 13, 3);
  run("qr(11)", verify_kendall_c3(quadratic_residue(11)), 11, 3);
  for (int n : {9, 11, 13}) {
    run("rlt(" + std::to_string(n) + ")", verify_regular_c4(rlt(n)), n, 4);
    run("rlt(" + std::to_string(n) + ")", verify_c5_plus_2c4(rlt(n)), n, 5);
  }
  run("qr(11)", verify_regular_c4(quadratic_residue(11)), 11, 4);
  run("sndr13", verify_c5_plus_2c4(sndr13()), 13, 5);
}

void suite_recurrence(Scoreboard& sb, int m_opt, int n_opt) {
  const auto run = [&sb](int m, int n) {
    const IdentityCheck c = verify_rlt_recurrence(m, n);
    sb.row("rlt(" + std::to_string(n) + ")", n, m, c.name, to_string(c.lhs),
           to_string(c.rhs));
  };
  if (m_opt > 0 && n_opt > 0) {
    run(m_opt, n_opt);
    return;
  }
  for (int m = 3; m <= 8; ++m)
    for (int n = m % 2 ? m : m + 1; n <= 13; n += 2) run(m, n);
}

void suite_conjecture_a(Scoreboard& sb, int workers) {
  for (int p : {7, 11})
    for (int m = 3; m <= std::min(8, p); ++m) {
      const Tournament t = quadratic_residue(p);
      const CycleCensus census = count_cycles(t, m, workers);
      const ArcUniformity u = arc_uniformity(t, m, workers);
      sb.row_bool("qr(" + std::to_string(p) + ")", p, m, "per-arc uniform",
                  u.uniform);
      if (u.uniform) {
        // common value * n(n-1) == 2 m c_m
        const std::uint64_t lhs =
            *u.common_value * static_cast<std::uint64_t>(p) * (p - 1);
        sb.row_values("qr(" + std::to_string(p) + ")", p, m,
                      "uniform value consistency", lhs,
                      2 * static_cast<std::uint64_t>(m) * census.total);
      }
    }
}

void suite_spectral(Scoreboard& sb) {
  for (const Tournament& t : {rlt(9), quadratic_residue(11), sndr13()}) {
    const int n = t.order();
    sb.row_bool("order " + std::to_string(n), n, 0, "char poly routes agree",
                char_poly(t) == char_poly_interpolated(t));
    sb.row_values("order " + std::to_string(n), n, 3, "tr_3 == 3 c_3",
                  trace_power(t, 3), 3 * Int(count_cycles(t, 3).total));
  }
  sb.row_values("sndr13", 13, 0, "discriminant",
                discriminant(char_poly(sndr13())),
                Int("157525764385770965120257003012282911852530325"));
  const SigmaMoment s4 = sigma_moment(quadratic_residue(11), 4);
  sb.row_bool("qr(11)", 11, 4, "sigma_4 == 75.625 within 1e-6",
              std::abs(s4.value - 75.625) <= 75.625 * 1e-6);
  sb.row_bool("rlt(11)", 11, 4, "sigma_4 above the doubly-regular floor",
              sigma_moment(rlt(11), 4).value > 75.625);
  const MeanOutsetC3 m11 = mean_outset_c3(umin11());
  sb.row("umin11", 11, 3, "mean out-set c3", to_string(m11.trace_formula),
         "24/11");
  sb.row_bool("umin11", 11, 3, "trace formula == direct average", m11.equal);
  const MeanOutsetC3 m13 = mean_outset_c3(umin13());
  sb.row("umin13", 13, 3, "mean out-set c3", to_string(m13.trace_formula),
         "48/13");
  sb.row("qr(11)", 11, 3, "mean out-set c3",
         to_string(mean_outset_c3(quadratic_residue(11)).trace_formula), "5");
}

void suite_appendix(Scoreboard& sb, int workers) {
  // maximiser of order 13: per-vertex scoreboard, sum, spectrum
  const Tournament s13 = sndr13();
  const CycleCensus c8 = count_cycles(s13, 8, workers);
  const std::uint64_t expected[] = {30618, 30604, 30610, 30598, 30618,
                                    30608, 30604, 30594, 30594, 30612,
                                    30612, 30598, 30610};
  std::uint64_t sum = 0;
  for (int v = 0; v < 13; ++v) {
    sb.row_values("sndr13", 13, 8, "c8 at vertex " + std::to_string(v + 1),
                  c8.per_vertex[v], expected[v]);
    sum += c8.per_vertex[v];
  }
  sb.row_values("sndr13", 13, 8, "per-vertex sum", sum, 397880);
  sb.row_values("sndr13", 13, 8, "c8 total", c8.total, 49735);

  const IntPolynomial cp = char_poly(s13);
  const long printed[] = {4434, 9749, 18310, 20147, 19749, 13408, 8358,
                          3597, 1482, 351,   91,    0,     0};
  bool coeffs_ok = cp.degree() == 13 && cp.coeff(13) == 1;
  for (int k = 0; k <= 12; ++k)
    coeffs_ok = coeffs_ok && -cp.coeff(k) == printed[k];
  sb.row_bool("sndr13", 13, 0, "characteristic polynomial coefficients",
              coeffs_ok);
  sb.row_values("sndr13", 13, 0, "discriminant", discriminant(cp),
                Int("157525764385770965120257003012282911852530325"));
  sb.row_values("sndr13", 13, 0, "automorphism order",
                canonicalize(s13).aut_order, 1);

  // minimiser chain of orders 9, 11, 13 and the companions
  const Tournament dd = delta_wreath();
  sb.row_values("delta o delta", 9, 8, "c8 total",
                count_cycles(dd, 8, workers).total, 405);
  sb.row_values("delta o delta", 9, 0, "automorphism order",
                canonicalize(dd).aut_order, 81);
  sb.row_values("rotational(9,{2,3,4,8})", 9, 8, "c8 total",
                count_cycles(rotational(9, {2, 3, 4, 8}), 8, workers).total,
                477);
  for (int n : {9, 11, 13})
    sb.row_values("rlt(" + std::to_string(n) + ")", n, 8, "c8 total",
                  count_cycles(rlt(n), 8, workers).total,
                  to_string(eval_formula(Formula::c8_rlt, n)));
  const Tournament u11 = umin11(), u13 = umin13();
  sb.row_values("umin11", 11, 8, "c8 total",
                count_cycles(u11, 8, workers).total, 6605);
  sb.row_values("umin13", 13, 8, "c8 total",
                count_cycles(u13, 8, workers).total, 45475);
  sb.row_values("qr(11)", 11, 8, "c8 total",
                count_cycles(quadratic_residue(11), 8, workers).total, 7425);
  sb.row_values("umin11", 11, 4, "tr_4", trace_power(u11, 4), 784);
  sb.row_values("umin13", 13, 4, "tr_4", trace_power(u13, 4), 1628);
  sb.row("umin11", 11, 3, "mean out-set c3",
         to_string(mean_outset_c3(u11).trace_formula), "24/11");
  sb.row("umin13", 13, 3, "mean out-set c3",
         to_string(mean_outset_c3(u13).trace_formula), "48/13");
  sb.row("qr(11)", 11, 3, "mean out-set c3",
         to_string(mean_outset_c3(quadratic_residue(11)).trace_formula), "5");
  bool doubling_ok = true;
  for (int k = 1; k <= 10; ++k)
    doubling_ok = doubling_ok &&
                  are_isomorphic(f_map(transitive(k)), rlt(2 * k + 1), true);
  sb.row_bool("doubling map", 0, 0, "F(TT_n) isomorphic to RLT_{2n+1}, n<=10",
              doubling_ok);
  sb.row_bool("delta o delta", 9, 0,
              "not isomorphic to the doubled 4-point seed",
              !are_isomorphic(
                  dd, f_map(dominate_join(
                          cycle_blowup(transitive(1), transitive(1),
                                       transitive(1)),
                          transitive(1)))));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact cycle censuses and verification for small tournaments"};
  app.require_subcommand(1);

  std::string input_spec;
  for (int i = 0; i < argc; ++i)
    input_spec += std::string(i ? " " : "") + argv[i];

  // ---- count ----
  auto* count = app.add_subcommand("count", "count m-cycles");
  FamilyOptions count_family;
  add_family_flags(count, count_family);
  int count_m = 0;
  int workers = 1;
  bool per_vertex = false, per_arc = false, fig8 = false, unsafe = false;
  int fig_vertex = 0;
  count->add_option("--m", count_m, "cycle length")->required();
  count->add_flag("--per-vertex", per_vertex, "emit per-vertex counts");
  count->add_flag("--per-arc", per_arc, "emit per-arc counts");
  count->add_flag("--figure-eight", fig8,
                  "emit figure-eight counts at --vertex");
  count->add_option("--vertex", fig_vertex, "base vertex for --figure-eight");
  count->add_option("--workers", workers, "parallel workers");
  count->add_flag("--unsafe-scale", unsafe, "lift the desk-scale guards");
  OutputOptions count_out;
  add_output_flags(count, count_out);

  // ---- verify ----
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  int n_max = 13, opt_m = 0, opt_n = 0;
  verify
      ->add_option("--suite", suite,
                   "formulas | identities | recurrence | conjectureA | "
                   "spectral | appendix")
      ->required()
      ->check(CLI::IsMember({"formulas", "identities", "recurrence",
                             "conjectureA", "spectral", "appendix"}));
  verify->add_option("--n-max", n_max, "largest order to check");
  verify->add_option("--m", opt_m, "recurrence: cycle length");
  verify->add_option("--n", opt_n, "recurrence: order");
  verify->add_option("--workers", workers, "parallel workers");
  OutputOptions verify_out;
  add_output_flags(verify, verify_out);

  // ---- crossover ----
  auto* crossover = app.add_subcommand("crossover", "sign table of the c8 gap");
  int scan_max = 201;
  crossover->add_option("--n-max", scan_max, "scan odd orders up to this");
  OutputOptions crossover_out;
  add_output_flags(crossover, crossover_out);

  // ---- enumerate ----
  auto* enumerate = app.add_subcommand(
      "enumerate", "isomorphism classes of regular tournaments");
  int enum_n = 0;
  enumerate->add_option("--n", enum_n, "odd order (3..9; 11 behind override)")
      ->required();
  enumerate->add_flag("--unsafe-scale", unsafe, "lift the desk-scale guards");
  OutputOptions enum_out;
  add_output_flags(enumerate, enum_out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*count) {
      ReportDocument doc;
      doc.kind = "census";
      doc.input_spec = input_spec;
      doc.timestamp = ReportDocument::now_utc();
      std::uint64_t min_total = ~0ULL, max_total = 0;
      std::string min_at, max_at;
      bool any_census = false;
      for (const auto& [label, t] : load_inputs(count_family)) {
        const int n = t.order();
        if (fig8) {
          const FigureEightCensus f =
              count_figure_eight(t, fig_vertex, count_m, unsafe);
          std::cout << label << " n=" << n << " m=" << count_m
                    << " figure-eight at v" << fig_vertex << " total "
                    << f.total << '\n';
          doc.rows.push_back({label, n, count_m,
                              "fig_total(v" + std::to_string(fig_vertex) + ")",
                              std::to_string(f.total)});
          for (const auto& s : f.splits) {
            std::cout << "  split (" << s.k << "," << s.h << ") " << s.count
                      << '\n';
            doc.rows.push_back(
                {label, n, count_m,
                 "fig_split(" + std::to_string(s.k) + "," +
                     std::to_string(s.h) + ")(v" + std::to_string(fig_vertex) +
                     ")",
                 std::to_string(s.count)});
          }
          continue;
        }
        const CycleCensus census = count_cycles(t, count_m, workers, unsafe);
        any_census = true;
        std::cout << label << " n=" << n << " m=" << count_m << " total "
                  << census.total << '\n';
        doc.rows.push_back(
            {label, n, count_m, "c_total", std::to_string(census.total)});
        if (census.total < min_total) {
          min_total = census.total;
          min_at = label;
        }
        if (census.total >= max_total) {
          max_total = census.total;
          max_at = label;
        }
        if (per_vertex)
          for (int v = 0; v < n; ++v) {
            std::cout << "  v" << v << " " << census.per_vertex[v] << '\n';
            doc.rows.push_back({label, n, count_m,
                                "c_vertex(" + std::to_string(v) + ")",
                                std::to_string(census.per_vertex[v])});
          }
        if (per_arc) {
          const ArcUniformity u = arc_uniformity(t, count_m, workers, unsafe);
          if (u.uniform)
            std::cout << "  per-arc uniform " << *u.common_value << '\n';
          else
            std::cout << "  per-arc not uniform\n";
          for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
              if (t.arc(i, j))
                doc.rows.push_back({label, n, count_m,
                                    "c_arc(" + std::to_string(i) + "->" +
                                        std::to_string(j) + ")",
                                    std::to_string(census.arc_count(i, j))});
        }
      }
      if (any_census && min_at != max_at) {
        std::cout << "min total " << min_total << " at " << min_at << '\n';
        std::cout << "max total " << max_total << " at " << max_at << '\n';
      }
      emit_report(doc, count_out);
      return 0;
    }

    if (*verify) {
      Scoreboard sb;
      sb.doc.kind = "verification";
      sb.doc.input_spec = input_spec;
      sb.doc.timestamp = ReportDocument::now_utc();
      std::cout << "suite " << suite << '\n';
      if (suite == "formulas") suite_formulas(sb, n_max, workers);
      else if (suite == "identities") suite_identities(sb);
      else if (suite == "recurrence") suite_recurrence(sb, opt_m, opt_n);
      else if (suite == "conjectureA") suite_conjecture_a(sb, workers);
      else if (suite == "spectral") suite_spectral(sb);
      else suite_appendix(sb, workers);
      std::cout << (sb.all_pass ? "ALL PASS" : "FAILURES PRESENT") << " ("
                << sb.doc.rows.size() << " checks)\n";
      emit_report(sb.doc, verify_out);
      return sb.all_pass ? 0 : 1;
    }

    if (*crossover) {
      const CrossoverReport r = crossover_analysis(scan_max);
      ReportDocument doc;
      doc.kind = "crossover";
      doc.input_spec = input_spec;
      doc.timestamp = ReportDocument::now_utc();
      for (const auto& [n, s] : r.signs)
        doc.rows.push_back({"c8(rlt) - c8(dr)", n, 8, "sign",
                            s > 0 ? "+" : (s < 0 ? "-" : "0")});
      doc.rows.push_back({"c8(rlt) - c8(dr)", 0, 8, "threshold",
                          std::to_string(r.threshold)});
      doc.rows.push_back({"cubic sign pattern", 0, 8, "verdict",
                          r.cubic_pattern_ok ? "pass" : "FAIL"});
      std::cout << "negative for odd " << r.negative_from << ".."
                << r.negative_to << '\n';
      std::cout << "threshold " << r.threshold << '\n';
      std::cout << "cubic sign pattern "
                << (r.cubic_pattern_ok ? "pass" : "FAIL") << '\n';
      emit_report(doc, crossover_out);
      return 0;
    }

    if (*enumerate) {
      EnumerateOptions opt;
      opt.unsafe = unsafe;
      const EnumerationResult r = enumerate_regular(enum_n, opt);
      ReportDocument doc;
      doc.kind = "enumeration";
      doc.input_spec = input_spec;
      doc.timestamp = ReportDocument::now_utc();
      std::cout << "classes " << r.classes.size() << '\n';
      std::uint64_t cmin = ~0ULL, cmax = 0;
      for (const RegularClassInfo& cls : r.classes) {
        const std::string rec = encode_digraph6(cls.representative);
        std::cout << "  " << rec << "  aut " << cls.canon.aut_order;
        if (cls.c8) {
          std::cout << "  c8 " << *cls.c8;
          cmin = std::min(cmin, *cls.c8);
          cmax = std::max(cmax, *cls.c8);
        }
        std::cout << '\n';
        doc.rows.push_back(
            {rec, r.n, 0, "aut_order", std::to_string(cls.canon.aut_order)});
        if (cls.c8)
          doc.rows.push_back({rec, r.n, 8, "c_total", std::to_string(*cls.c8)});
      }
      if (cmax > 0) std::cout << "c8 extremes " << cmin << " " << cmax << '\n';
      emit_report(doc, enum_out);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
