#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "tourney/census.hpp"
#include "tourney/families.hpp"
#include "tourney/spectral.hpp"
#include "tourney/transforms.hpp"

using namespace tourney;

namespace {

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

IntPolynomial poly(std::initializer_list<long> coeffs) {
  std::vector<Int> c;
  for (long v : coeffs) c.emplace_back(v);
  return IntPolynomial(std::move(c));
}

}  // namespace

TEST_CASE("characteristic polynomial of small cases") {
  CHECK(char_poly(rlt(3)) == poly({-1, 0, 0, 1}));     // x^3 - 1
  CHECK(char_poly(transitive(2)) == poly({0, 0, 1}));  // x^2
  CHECK(char_poly(transitive(5)) == poly({0, 0, 0, 0, 0, 1}));
}

TEST_CASE("characteristic polynomial of SNDR_13, exactly") {
  const IntPolynomial cp = char_poly(sndr13());
  REQUIRE(cp.degree() == 13);
  // det(A - xI) = -det(xI - A) for odd order
  const long expected[] = {4434, 9749, 18310, 20147, 19749, 13408, 8358,
                           3597, 1482, 351,   91,    0,     0};
  for (int k = 0; k <= 12; ++k) CHECK(-cp.coeff(k) == expected[k]);
  CHECK(cp.coeff(13) == 1);
}

TEST_CASE("both characteristic polynomial routes agree") {
  for (const Tournament& t :
       {rlt(9), rlt(13), quadratic_residue(11), sndr13(), umin11(),
        transitive(7), rotational(9, {2, 3, 4, 8})})
    CHECK(char_poly(t) == char_poly_interpolated(t));
}

TEST_CASE("trace powers") {
  for (const Tournament& t : {rlt(9), quadratic_residue(11), sndr13()}) {
    CHECK(trace_power(t, 1) == 0);
    CHECK(trace_power(t, 2) == 0);
    CHECK(trace_power(t, 3) == 3 * Int(count_cycles(t, 3).total));
  }
  CHECK(trace_power(umin11(), 4) == 784);
  CHECK(trace_power(umin13(), 4) == 1628);
}

TEST_CASE("discriminants of reference polynomials") {
  CHECK(discriminant(poly({-1, 0, 1})) == 4);       // x^2 - 1
  CHECK(discriminant(poly({0, 0, 1})) == 0);        // x^2
  CHECK(discriminant(poly({-1, 0, 0, 1})) == -27);  // x^3 - 1
  CHECK_THROWS_AS(discriminant(IntPolynomial{}), std::invalid_argument);
}

TEST_CASE("discriminant of the SNDR_13 characteristic polynomial") {
  const Int expected("157525764385770965120257003012282911852530325");
  CHECK(discriminant(char_poly(sndr13())) == expected);
  CHECK(expected > 0);  // simple spectrum
}

TEST_CASE("subresultant chain matches the Sylvester determinant") {
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::uniform_int_distribution<int> deg(0, 8);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Int> a(deg(rng) + 1), b(deg(rng) + 1);
    for (Int& v : a) v = coeff(rng);
    for (Int& v : b) v = coeff(rng);
    IntPolynomial pa(std::move(a)), pb(std::move(b));
    if (pa.is_zero() || pb.is_zero()) continue;
    CAPTURE(trial);
    CHECK(resultant(pa, pb) == resultant_sylvester(pa, pb));
  }
  // forced common factors: the resultant must vanish
  const auto mul = [](const IntPolynomial& x, const IntPolynomial& y) {
    std::vector<Int> r(x.c.size() + y.c.size() - 1, Int(0));
    for (std::size_t i = 0; i < x.c.size(); ++i)
      for (std::size_t j = 0; j < y.c.size(); ++j) r[i + j] += x.c[i] * y.c[j];
    return IntPolynomial(std::move(r));
  };
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Int> f(deg(rng) % 4 + 2), g(deg(rng) % 4 + 2), h(2);
    for (Int& v : f) v = coeff(rng);
    for (Int& v : g) v = coeff(rng);
    h[0] = coeff(rng);
    h[1] = 1;
    IntPolynomial pf(std::move(f)), pg(std::move(g)), common(std::move(h));
    if (pf.is_zero() || pg.is_zero()) continue;
    CHECK(resultant(mul(pf, common), mul(pg, common)) == 0);
  }
}

TEST_CASE("sigma moments of the named tournaments") {
  const SigmaMoment qr11 = sigma_moment(quadratic_residue(11), 4);
  CHECK(std::abs(qr11.value - 75.625) <= 75.625 * 1e-6);
  CHECK(qr11.error_bound <= 75.625 * 1e-6);

  const SigmaMoment rlt9 = sigma_moment(rlt(9), 2);
  CHECK(std::abs(rlt9.value - 18.0) <= 18.0 * 1e-6);

  CHECK(sigma_moment(rlt(11), 4).value > 75.625);

  CHECK_THROWS_AS(sigma_moment(transitive(5), 4), std::invalid_argument);
}

TEST_CASE("sigma lower bound with equality exactly for doubly regular") {
  const double tol = 1e-6;
  for (int m : {4, 6}) {
    for (int p : {7, 11, 19, 23}) {
      const Tournament t = quadratic_residue(p);
      const double bound = (p - 1) *
                           std::pow(static_cast<double>(p), m / 2.0) /
                           std::pow(2.0, m);
      const double got = sigma_moment(t, m).value;
      CHECK(std::abs(got - bound) <= bound * tol);
    }
    for (const Tournament& t :
         {rlt(9), rlt(11), rlt(13), rotational(9, {2, 3, 4, 8}), umin11()}) {
      const int n = t.order();
      const double bound = (n - 1) *
                           std::pow(static_cast<double>(n), m / 2.0) /
                           std::pow(2.0, m);
      const double got = sigma_moment(t, m).value;
      CHECK(got > bound * (1 + tol));  // strict away from doubly regular
    }
  }
}

TEST_CASE("odd sigma moments vanish") {
  for (const Tournament& t : {rlt(9), quadratic_residue(11), umin11()})
    for (int m : {3, 5}) {
      const SigmaMoment s = sigma_moment(t, m);
      CHECK(std::abs(s.value) <= 1e-7);
    }
}

TEST_CASE("mean out-set triangle counts") {
  CHECK(mean_outset_c3(umin11()).trace_formula == Rational(24, 11));
  CHECK(mean_outset_c3(umin13()).trace_formula == Rational(48, 13));
  CHECK(mean_outset_c3(rlt(9)).trace_formula == 0);
  CHECK(mean_outset_c3(quadratic_residue(11)).trace_formula == 5);
  for (const Tournament& t :
       {rlt(9), rlt(11), rlt(13), quadratic_residue(7), quadratic_residue(11),
        sndr13(), umin11(), umin13(), rotational(9, {2, 3, 4, 8})}) {
    const MeanOutsetC3 r = mean_outset_c3(t);
    CHECK(r.equal);
    CHECK(r.trace_formula == r.direct_average);
  }
  CHECK_THROWS_AS(mean_outset_c3(transitive(7)), std::invalid_argument);
}

TEST_CASE("spectral summary composes the exact pieces") {
  const SpectralSummary s = spectral_summary(quadratic_residue(11), 8, {4});
  CHECK(s.charpoly == char_poly(quadratic_residue(11)));
  CHECK(s.traces[0] == 0);
  CHECK(s.traces[1] == 0);
  CHECK(s.traces[2] == 3 * Int(count_cycles(quadratic_residue(11), 3).total));
  REQUIRE(s.perron.has_value());
  CHECK(*s.perron == 5);
  REQUIRE(s.sigma.size() == 1);
  CHECK(std::abs(s.sigma[0].second.value - 75.625) < 1e-6);

  const SpectralSummary tt = spectral_summary(transitive(6), 4, {2});
  CHECK_FALSE(tt.perron.has_value());
  CHECK(tt.sigma.empty());
}
