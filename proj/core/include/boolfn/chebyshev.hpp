#pragma once

#include <vector>

#include "boolfn/rational.hpp"
#include "boolfn/univariate.hpp"

namespace boolfn {

/// T_k(x) by the integer recurrence T_0 = 1, T_1 = x, T_{k+1} = 2x T_k - T_{k-1},
/// valid for all real x (never the trigonometric form).
Rational chebyshev_eval(int k, const Rational& x);

/// T_k as an explicit polynomial.
UnivariatePoly chebyshev_poly(int k);

struct ChebyshevDerivsAtOne {
  Rational value;   // T_k(1) = 1
  Rational first;   // k^2
  Rational second;  // (k^4 - k^2) / 3
  Rational third;   // k^2 (k^2 - 1)(k^2 - 4) / 15
};

/// Closed forms for T_k and its first three derivatives at 1, cross-validated
/// against direct differentiation of the recurrence polynomial.
ChebyshevDerivsAtOne chebyshev_derivs_at_one(int k);

/// Admissibility of the growth constant c for an n-variable construction:
/// 2c + (2/3)c^2 - 2c/(3(n-2)) > 1, checked exactly.
bool admissible_growth_constant(int n, const Rational& c);

/// A 1/3-approximant of NAE_n built from a rescaled Chebyshev polynomial.
struct ChebyshevApproximant {
  int n = 0;
  Rational c;
  int degree = 0;         // ceil(sqrt(c(n-2))) rounded up to even
  UnivariatePoly poly;    // p with p(weight) approximating NAE_n
  Rational scale;         // T_d(n/(n-2)), verified >= 2
  std::vector<Rational> deviations;  // |p(k) - f_k| at k = 0..n, each <= 1/3
};

/// Builds and fully verifies the approximant in exact rationals: scale >= 2,
/// p(0) = p(n) = 1/3, and the 1/3 band at every integer point. Requires
/// n >= 5 and an admissible c.
ChebyshevApproximant nae_approximant(int n, const Rational& c);

struct OptimalGrowthConstant {
  Rational c;        // smallest multiple of the precision that is admissible
  double asymptote;  // (sqrt(15) - 3) / 2, the n -> infinity limit
};

OptimalGrowthConstant optimal_c(int n, const Rational& precision = Rational(1, 1000));

}  // namespace boolfn
