#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "boolfn/chebyshev.hpp"
#include "support/oracles.hpp"

using namespace boolfn;

TEST_CASE("evaluation by recurrence matches the expanded polynomials") {
  CHECK(chebyshev_eval(2, Rational(1)) == 1);
  CHECK(chebyshev_eval(2, Rational(5, 4)) == Rational(17, 8));  // 2x^2 - 1
  for (int k = 0; k <= 12; ++k) {
    UnivariatePoly t = chebyshev_poly(k);
    CHECK(chebyshev_eval(k, Rational(5, 4)) == t(Rational(5, 4)));
    CHECK(chebyshev_eval(k, Rational(-7, 3)) == t(Rational(-7, 3)));
  }
  // Odd index, odd function.
  CHECK(chebyshev_eval(3, Rational(-2, 3)) == -chebyshev_eval(3, Rational(2, 3)));
}

TEST_CASE("bounded by 1 on [-1, 1]") {
  for (int k = 0; k <= 20; ++k)
    for (int i = 0; i <= 200; ++i) {
      Rational x = Rational(i, 100) - 1;
      Rational v = chebyshev_eval(k, x);
      if (v < 0) v = -v;
      if (v > 1) {
        CAPTURE(k);
        CAPTURE(i);
        REQUIRE(v <= 1);
      }
    }
}

TEST_CASE("even indices give even functions") {
  std::mt19937_64 rng(47);
  for (int k : {2, 4, 6, 8})
    for (int trial = 0; trial < 20; ++trial) {
      Rational x = test::random_rational(rng, 50, 10);
      CHECK(chebyshev_eval(k, x) == chebyshev_eval(k, -x));
    }
}

TEST_CASE("second derivative grows to the right of 1") {
  const std::vector<Rational> thetas = {1, Rational(9, 8), Rational(5, 4), Rational(3, 2), 2};
  for (int k = 0; k <= 12; ++k) {
    UnivariatePoly second = chebyshev_poly(k).derivative(2);
    Rational at_one = second(Rational(1));
    for (const Rational& theta : thetas) CHECK(second(theta) >= at_one);
  }
}

TEST_CASE("derivatives at 1") {
  auto k1 = chebyshev_derivs_at_one(1);
  CHECK(k1.value == 1);
  CHECK(k1.first == 1);
  CHECK(k1.second == 0);
  CHECK(k1.third == 0);

  auto k2 = chebyshev_derivs_at_one(2);
  CHECK(k2.first == 4);
  CHECK(k2.second == 4);
  CHECK(k2.third == 0);

  auto k3 = chebyshev_derivs_at_one(3);
  CHECK(k3.first == 9);
  CHECK(k3.second == 24);
  CHECK(k3.third == 24);

  // The operation cross-validates the closed forms against the recurrence
  // polynomials internally and throws on mismatch.
  for (int k = 0; k <= 20; ++k) CHECK_NOTHROW(chebyshev_derivs_at_one(k));
}

TEST_CASE("approximant for n = 10, c = 47/100") {
  ChebyshevApproximant a = nae_approximant(10, Rational(47, 100));
  CHECK(a.degree == 2);
  CHECK(a.scale == Rational(17, 8));  // T_2(10/8)
  CHECK(a.scale >= 2);
  CHECK(a.poly(Rational(0)) == Rational(1, 3));
  CHECK(a.poly(Rational(10)) == Rational(1, 3));
  REQUIRE(a.deviations.size() == 11);
  for (const Rational& dev : a.deviations) CHECK(dev <= Rational(1, 3));
}

TEST_CASE("approximant for n = 50, c = 11/25") {
  ChebyshevApproximant a = nae_approximant(50, Rational(11, 25));
  CHECK(a.degree == 6);  // ceil(sqrt(528/25)) = 5, rounded up to even
  CHECK(a.scale >= 2);
  for (int k = 0; k <= 50; ++k) {
    Rational fk = (k == 0 || k == 50) ? 0 : 1;
    Rational dev = a.poly(Rational(k)) - fk;
    if (dev < 0) dev = -dev;
    CHECK(dev <= Rational(1, 3));
  }
}

TEST_CASE("inadmissible constants are rejected") {
  CHECK_THROWS_AS(nae_approximant(10, Rational(1, 10)), std::invalid_argument);
  CHECK_THROWS_AS(nae_approximant(4, Rational(1, 2)), std::invalid_argument);
  CHECK(!admissible_growth_constant(10, Rational(1, 10)));
  CHECK(admissible_growth_constant(10, Rational(47, 100)));
}

TEST_CASE("optimal growth constant") {
  auto n10 = optimal_c(10);
  CHECK(admissible_growth_constant(10, n10.c));
  CHECK(!admissible_growth_constant(10, n10.c - Rational(1, 1000)));
  CHECK(n10.asymptote == doctest::Approx(0.436492).epsilon(1e-5));

  // The finite-n constant always sits above the asymptote:
  // c > (sqrt(15) - 3)/2 iff (2c + 3)^2 > 15.
  for (int n : {5, 10, 26, 50, 1000}) {
    Rational c = optimal_c(n).c;
    Rational shifted = 2 * c + 3;
    CHECK(shifted * shifted > 15);
  }
}
