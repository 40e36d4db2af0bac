#include <catch2/catch_amalgamated.hpp>

#include "tourney/census.hpp"
#include "tourney/families.hpp"
#include "tourney/figure_eight.hpp"
#include "tourney/identities.hpp"
#include "tourney/transforms.hpp"
#include "tourney/walks.hpp"

using namespace tourney;

namespace {

Tournament umin11() {
  return f_map(dominate_join(
      cycle_blowup(transitive(2), transitive(1), transitive(1)),
      transitive(1)));
}

void check_tally_sums(const CycleCensus& c) {
  std::uint64_t pv = 0, pa = 0;
  for (std::uint64_t v : c.per_vertex) pv += v;
  for (std::uint64_t v : c.per_arc) pa += v;
  CHECK(pv == static_cast<std::uint64_t>(c.m) * c.total);
  CHECK(pa == static_cast<std::uint64_t>(c.m) * c.total);
}

}  // namespace

TEST_CASE("census totals of the named families") {
  CHECK(count_cycles(rlt(9), 8).total == 441);
  CHECK(count_cycles(quadratic_residue(11), 8).total == 7425);
  CHECK(count_cycles(quadratic_residue(7), 3).total == 14);
  for (int m = 3; m <= 7; ++m)
    CHECK(count_cycles(transitive(7), m).total == 0);
}

TEST_CASE("census guards") {
  CHECK_THROWS_AS(count_cycles(rlt(9), 2), std::invalid_argument);
  CHECK_THROWS_AS(count_cycles(rlt(9), 10), std::invalid_argument);  // m > n
  CHECK_THROWS_AS(count_cycles(rlt(21), 11), std::invalid_argument);
  CHECK_NOTHROW(count_cycles(rlt(13), 11, 1, /*unsafe=*/true));
}

TEST_CASE("worker count does not change the census") {
  const Tournament t = quadratic_residue(11);
  const CycleCensus a = count_cycles(t, 7, 1);
  const CycleCensus b = count_cycles(t, 7, 4);
  CHECK(a.total == b.total);
  CHECK(a.per_vertex == b.per_vertex);
  CHECK(a.per_arc == b.per_arc);
}

TEST_CASE("per-vertex and per-arc tallies sum to m times the total") {
  for (const Tournament& t :
       {rlt(9), quadratic_residue(11), sndr13(), umin11()})
    for (int m : {3, 4, 5, 8}) check_tally_sums(count_cycles(t, m));
}

TEST_CASE("reversal leaves every cycle count unchanged") {
  for (const Tournament& t :
       {rlt(9), rlt(13), quadratic_residue(11), sndr13(), umin11()}) {
    const Tournament r = reverse(t);
    for (int m = 3; m <= 8; ++m)
      CHECK(count_cycles(t, m).total == count_cycles(r, m).total);
  }
}

TEST_CASE("vertex cycle counts agree with the full census") {
  for (const Tournament& t : {rlt(9), quadratic_residue(7), sndr13()})
    for (int m : {3, 4, 8}) {
      if (m > t.order()) continue;
      const CycleCensus c = count_cycles(t, m);
      for (int v = 0; v < t.order(); ++v)
        CHECK(count_vertex_cycles(t, v, m) == c.per_vertex[v]);
    }
}

TEST_CASE("vertex cycle counts at the origin of RLT_9") {
  CHECK(count_vertex_cycles(rlt(9), 0, 3) == 10);
  CHECK(count_vertex_cycles(rlt(9), 0, 4) == 40);
}

TEST_CASE("SNDR_13 vertex 1 lies on 30618 8-cycles") {
  // paper vertices are 1-based; vertex 1 is index 0
  CHECK(count_vertex_cycles(sndr13(), 0, 8) == 30618);
}

TEST_CASE("walk table of QR_7 shows the t=1 two-path counts") {
  const Tournament t = quadratic_residue(7);
  const WalkTable w = walk_table(t, 3);
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) {
      if (i == j) {
        CHECK(w.entry(2, i, j) == 0);
        CHECK(w.entry(3, i, j) == 6);  // (2t+1)(t+1) at t=1
      } else if (t.arc(i, j)) {
        CHECK(w.entry(2, i, j) == 1);
      } else {
        CHECK(w.entry(2, i, j) == 2);
      }
    }
}

TEST_CASE("walk table of QR_11 hits 7092 on every arc at power 7") {
  const Tournament t = quadratic_residue(11);
  const WalkTable w = walk_table(t, 7);
  for (int i = 0; i < 11; ++i)
    for (int j = 0; j < 11; ++j)
      if (t.arc(j, i)) CHECK(w.entry(7, i, j) == 7092);
}

TEST_CASE("diagonal of the square vanishes for any tournament") {
  for (const Tournament& t : {rlt(9), sndr13(), transitive(6)}) {
    const WalkTable w = walk_table(t, 2);
    for (int i = 0; i < t.order(); ++i) CHECK(w.entry(2, i, i) == 0);
  }
}

TEST_CASE("doubly regular walk recurrence holds exactly for QR_p") {
  for (int p : {7, 11, 19, 23}) {
    const WalkTable w = walk_table(quadratic_residue(p), 7);
    CHECK(dr_recurrence_holds(w, (p - 3) / 4));
  }
  // negative control: RLT_9 satisfies it for no integer parameter
  const WalkTable w9 = walk_table(rlt(9), 7);
  CHECK_FALSE(dr_recurrence_holds(w9, 1));
  CHECK_FALSE(dr_recurrence_holds(w9, 2));
}

TEST_CASE("non-path walk counts on QR_11 arcs equal 6012 at length 7") {
  const Tournament t = quadratic_residue(11);
  for (int i : {0, 3}) {
    const std::vector<std::uint64_t> row = nonpath_walk_counts(t, i, 7);
    for (int j = 0; j < 11; ++j)
      if (t.arc(j, i)) CHECK(row[j] == 6012);
  }
}

TEST_CASE("single arcs are always paths") {
  const Tournament t = quadratic_residue(7);
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j)
      if (i != j) CHECK(count_nonpath_walks(t, i, j, 1) == 0);
}

TEST_CASE("QR_7 admits no 7-paths between adjacent vertices") {
  // 8-cycles need 8 vertices; every length-7 walk across an arc repeats
  const Tournament t = quadratic_residue(7);
  const WalkTable w = walk_table(t, 7);
  const std::vector<std::uint64_t> row = nonpath_walk_counts(t, 0, 7);
  for (int j = 1; j < 7; ++j) {
    if (!t.arc(j, 0)) continue;
    CHECK(w.entry(7, 0, j) == 308);  // 2t(t+1)(16t^4+28t^3+23t^2+9t+1), t=1
    CHECK(row[j] == 308);
    CHECK(path_count(t, 0, j, 7) == 0);
  }
}

TEST_CASE("per-arc counts, path counts and the walk oracle agree") {
  for (const Tournament& t : {quadratic_residue(7), rlt(9), umin11()}) {
    const int n = t.order();
    const int m = n < 8 ? n : 8;
    const CycleCensus c = count_cycles(t, m);
    const WalkTable w = walk_table(t, m - 1);
    for (int i = 0; i < n; ++i) {
      const std::vector<std::uint64_t> corr = nonpath_walk_counts(t, i, m - 1);
      for (int j = 0; j < n; ++j) {
        if (!t.arc(j, i)) continue;
        const Int paths = w.entry(m - 1, i, j) - corr[j];
        CHECK(Int(c.arc_count(j, i)) == paths);
        if (n <= 9) CHECK(Int(path_count(t, i, j, m - 1)) == paths);
      }
    }
  }
}

TEST_CASE("figure eight census of RLT_9 at the origin") {
  const FigureEightCensus f = count_figure_eight(rlt(9), 0, 8);
  CHECK(f.total == 636);
  CHECK(f.split(3, 5) == 173);
  CHECK(f.split(4, 4) == 290);
  CHECK(f.split(5, 3) == 173);
}

TEST_CASE("figure eight census is empty on acyclic input and short lengths") {
  CHECK(count_figure_eight(transitive(9), 0, 8).total == 0);
  CHECK(count_figure_eight(rlt(9), 0, 5).total == 0);
  CHECK(count_figure_eight(rlt(9), 0, 5).splits.empty());
}

TEST_CASE("figure eight complement identity against direct pair counting") {
  for (const Tournament& t : {rlt(9), rlt(11), quadratic_residue(11)}) {
    for (int m : {6, 7, 8}) {
      const FigureEightCensus f = count_figure_eight(t, 0, m);
      for (const auto& s : f.splits) {
        const std::uint64_t ck = count_vertex_cycles(t, 0, s.k);
        const std::uint64_t ch = count_vertex_cycles(t, 0, s.h);
        CHECK(s.count == ck * ch - overlapping_pairs(t, 0, s.k, s.h));
      }
    }
  }
}

TEST_CASE("arc uniformity reports") {
  const ArcUniformity qr11 = arc_uniformity(quadratic_residue(11), 8);
  CHECK(qr11.uniform);
  CHECK(qr11.common_value == 1080);

  const ArcUniformity qr7 = arc_uniformity(quadratic_residue(7), 5);
  CHECK(qr7.uniform);
  CHECK(qr7.common_value == 10);  // 2*5*c_5 / (7*6) with c_5 = 42

  const ArcUniformity tt5 = arc_uniformity(transitive(5), 3);
  CHECK(tt5.uniform);
  CHECK(tt5.common_value == 0);

  CHECK_FALSE(arc_uniformity(rlt(9), 3).uniform);
}

TEST_CASE("named identities hold") {
  const IdentityCheck kendall = verify_kendall_c3(sndr13());
  CHECK(kendall.equal);
  CHECK(kendall.lhs == 182);  // c_3 = 91
  CHECK(count_cycles(sndr13(), 3).total == 91);

  for (const Tournament& t : {rlt(9), quadratic_residue(11), sndr13()}) {
    CHECK(verify_regular_c4(t).equal);
    CHECK(verify_c5_plus_2c4(t).equal);
  }
  const IdentityCheck c54 = verify_c5_plus_2c4(rlt(9));
  CHECK(c54.rhs == 324);

  CHECK_THROWS_AS(verify_regular_c4(transitive(6)), std::invalid_argument);
}

TEST_CASE("kendall identity on assorted non-regular tournaments") {
  for (const Tournament& t :
       {transitive(9), dominate_join(rlt(5), rlt(3)),
        cycle_blowup(transitive(2), transitive(1), transitive(1))})
    CHECK(verify_kendall_c3(t).equal);
}

TEST_CASE("deletion recurrence of RLT holds for every desk-scale m, n") {
  const IdentityCheck small = verify_rlt_recurrence(4, 5);
  CHECK(small.equal);
  CHECK(small.lhs == 12);

  for (int m = 3; m <= 8; ++m)
    for (int n = m % 2 ? m : m + 1; n <= 13; n += 2)
      CHECK(verify_rlt_recurrence(m, n).equal);
}

TEST_CASE("identity dispatcher routes by id") {
  CHECK(verify_identity(IdentityId::kendall_c3, sndr13()).equal);
  CHECK(verify_identity(IdentityId::regular_c4, rlt(9)).equal);
  CHECK(verify_identity(IdentityId::c5_plus_2c4, rlt(9)).equal);
  CHECK(verify_identity(IdentityId::rlt_recurrence, 4, 5).equal);
  CHECK_THROWS_AS(verify_identity(IdentityId::rlt_recurrence, rlt(9)),
                  std::invalid_argument);
  CHECK_THROWS_AS(verify_identity(IdentityId::kendall_c3, 4, 5),
                  std::invalid_argument);
}
