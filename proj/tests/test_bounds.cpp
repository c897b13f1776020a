#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <cmath>

#include "boolfn/bounds.hpp"
#include "support/oracles.hpp"

using namespace boolfn;

TEST_CASE("threshold crossings match the closed forms") {
  double sqrt10m2 = std::sqrt(10.0) - 2.0;
  CHECK(threshold({1, Rational(3, 2), ThresholdVariant::Exact}) ==
        doctest::Approx(sqrt10m2).epsilon(1e-9));
  CHECK(threshold({2, 1, ThresholdVariant::Exact}) ==
        doctest::Approx(std::sqrt(6.0 / 5.0)).epsilon(1e-9));
  CHECK(threshold({2, Rational(1, 15), ThresholdVariant::Approximate}) ==
        doctest::Approx(std::sqrt(6.0 / 101.0)).epsilon(1e-9));
  CHECK(threshold({3, Rational(5, 8), ThresholdVariant::Exact}) > 1.2);
  CHECK(threshold({4, Rational(1, 4), ThresholdVariant::Exact}) > 1.24);
  CHECK(threshold({5, Rational(1, 8), ThresholdVariant::Exact}) > 1.3);
}

TEST_CASE("threshold is monotone in c and stays above sqrt(10)-2 for k >= 3") {
  double prev = 0;
  for (int num = 1; num <= 8; ++num) {
    double x = threshold({2, Rational(num, 2), ThresholdVariant::Exact});
    CHECK(x > prev);
    prev = x;
  }
  // Per-order bounds used in the derivative case analysis: each step up in k
  // multiplies the left side by (2k+1)/4 > sqrt(6) > x, so the crossing keeps
  // growing once k >= 3.
  double sqrt10m2 = std::sqrt(10.0) - 2.0;
  const std::vector<Rational> cs = {Rational(3, 2), 1, Rational(5, 8), Rational(1, 4),
                                    Rational(1, 8)};
  for (int k = 3; k <= 5; ++k)
    CHECK(threshold({k, cs[k - 1], ThresholdVariant::Exact}) >= sqrt10m2);

  CHECK_THROWS_AS(threshold({0, 1, ThresholdVariant::Exact}), std::invalid_argument);
  CHECK_THROWS_AS(threshold({1, 0, ThresholdVariant::Exact}), std::invalid_argument);
}

TEST_CASE("tail sum") {
  CHECK(tail_sum(4).partial == Rational(1, 16));

  Rational prev = 0;
  for (int limit = 4; limit <= 20; ++limit) {
    Rational cur = tail_sum(limit).partial;
    CHECK(cur > prev);
    prev = cur;
  }

  TailSum at60 = tail_sum(60);
  CHECK(at60.partial < Rational(1, 8));
  CHECK(std::fabs(to_double(at60.partial) - at60.closed_form) < 1e-6);
  CHECK(at60.closed_form == doctest::Approx(4 * std::log(2.0) - 8.0 / 3.0));

  CHECK_THROWS_AS(tail_sum(3), std::invalid_argument);
}

TEST_CASE("separation report for NAE_3") {
  SeparationReport rep = verify_separations(make_nae(3), /*with_approx=*/true);
  CHECK(rep.measures.d == 2);
  CHECK(rep.measures.s == 3);
  CHECK(rep.measures.bs == 3);
  CHECK(rep.measures.D == 3);
  REQUIRE(rep.d2_over_bs.has_value());
  CHECK(*rep.d2_over_bs == Rational(4, 3));
  // (d^2 + 2bs)^2 = 100 >= 10 bs^2 = 90.
  CHECK(rep.verdict("d2_ge_sqrt10m2_bs"));
  CHECK(rep.all_ok());
  REQUIRE(rep.deg13.has_value());
  CHECK(*rep.deg13 == 2);
}

TEST_CASE("separation report for the composition") {
  TruthTable composed = compose(make_nae(3), make_nae(3));
  SeparationReport rep = verify_separations(composed, /*with_approx=*/false);
  CHECK(rep.measures.d == 4);
  CHECK(rep.measures.bs == 9);
  // (16 + 18)^2 = 1156 >= 810.
  CHECK(rep.verdict("d2_ge_sqrt10m2_bs"));
  CHECK(rep.all_ok());
  CHECK(!rep.deg13.has_value());
}

TEST_CASE("separation report for a dictator sits at the degenerate margins") {
  SeparationReport rep = verify_separations(make_dictator(3, 1), /*with_approx=*/true);
  CHECK(rep.measures.d == 1);
  CHECK(rep.measures.bs == 1);
  CHECK(rep.all_ok());
}

TEST_CASE("sweeps find no violations") {
  SweepReport n1 = sweep(1, /*with_approx=*/false);
  CHECK(n1.function_count == 4);
  CHECK(n1.violations.empty());

  SweepReport n2 = sweep(2, /*with_approx=*/true);
  CHECK(n2.function_count == 16);
  CHECK(n2.violations.empty());

  SweepReport n3 = sweep(3, /*with_approx=*/false);
  CHECK(n3.function_count == 256);
  CHECK(n3.violations.empty());
  // Among bs = 3 functions the minimum d^2/bs is 4/3, met by NAE_3-shaped
  // tables.
  REQUIRE(n3.min_ratio_by_bs.contains(3));
  CHECK(n3.min_ratio_by_bs.at(3) == Rational(4, 3));

  CHECK_THROWS_AS(sweep(5, false), std::invalid_argument);
  CHECK_THROWS_AS(sweep(4, true), std::invalid_argument);
}

TEST_CASE("third derivative check") {
  // OR_4: p(3) = 1, so the required level is 0 and anything passes.
  DerivativeCheck or4 = third_derivative_check(make_or(4));
  CHECK(or4.bound == 0);
  CHECK(or4.verdict);

  DerivativeCheck nae4 = third_derivative_check(make_nae(4));
  CHECK(nae4.bound == 0);
  CHECK(nae4.verdict);

  // The weight-in-{1,4} indicator on 4 variables is fully sensitive at 0 with
  // p(3) = 0, so the third derivative really has to reach 1 somewhere.
  TruthTable weight14(4);
  for (std::uint32_t x = 0; x < 16; ++x) {
    int w = std::popcount(x);
    weight14.set(x, w == 1 || w == 4);
  }
  DerivativeCheck hard = third_derivative_check(weight14);
  CHECK(hard.bound == 1);
  CHECK(hard.verdict);

  // (x1 or x2) and (x3 or x4) is 0 at 0 but no single flip changes it.
  TruthTable and_of_ors = compose(make_and(2), make_or(2));
  CHECK_THROWS_AS(third_derivative_check(and_of_ors), std::invalid_argument);
  CHECK_THROWS_AS(third_derivative_check(make_nae(3)), std::invalid_argument);
}

TEST_CASE("fourth derivative check") {
  TruthTable composed = compose(make_nae(3), make_nae(3));
  DerivativeCheck check = fourth_derivative_check(composed);
  CHECK(check.bound == Rational(1, 6));
  CHECK(check.verdict);
  CHECK(check.sup_estimate >= 1.0 / 6.0 - 1e-9);

  DerivativeCheck or9 = fourth_derivative_check(make_or(9));
  CHECK(or9.verdict);

  CHECK_THROWS_AS(fourth_derivative_check(make_or(4)), std::invalid_argument);
}

TEST_CASE("extremal quartic record") {
  ExtremalQuarticRecord rec = extremal_quartic();
  CHECK(rec.values_ok);
  CHECK(rec.tightness_ok);
  CHECK(rec.integrality_ok);
  CHECK(rec.fourth_derivative_ok);
  CHECK(rec.binomial_ok);
  CHECK(rec.derivative_ok);
  CHECK(rec.all_ok());
  CHECK(rec.derivative_at_zero_value == Rational(125, 72));
  // C(10,3) * 7/12 = 70 and C(10,4) * 1/6 = 35.
  CHECK(Rational(binomial(10, 3)) * rec.values[3] == 70);
  CHECK(Rational(binomial(10, 4)) * rec.values[4] == 35);
}

TEST_CASE("uniqueness record") {
  UniquenessRecord rec = uniqueness_lp();
  CHECK(rec.min_c4.status == LpStatus::Optimal);
  CHECK(rec.min_c4.value == Rational(-1, 144));
  CHECK(rec.positive_c4.status == LpStatus::Infeasible);
  CHECK(rec.max_c4.status == LpStatus::Optimal);
  CHECK(rec.max_c4.value <= 0);
  CHECK(rec.min_c4.value <= rec.max_c4.value);
  CHECK(rec.vertex_poly == extremal_quartic().poly);
  CHECK(rec.consistent);
}
