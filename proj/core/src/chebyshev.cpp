#include "boolfn/chebyshev.hpp"

#include <cmath>
#include <stdexcept>

namespace boolfn {

Rational chebyshev_eval(int k, const Rational& x) {
  if (k < 0) throw std::invalid_argument("negative Chebyshev index");
  if (k == 0) return 1;
  Rational prev = 1, cur = x;
  for (int i = 1; i < k; ++i) {
    Rational next = 2 * x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

UnivariatePoly chebyshev_poly(int k) {
  if (k < 0) throw std::invalid_argument("negative Chebyshev index");
  UnivariatePoly prev = UnivariatePoly::constant(1);
  if (k == 0) return prev;
  UnivariatePoly cur({0, 1});
  const UnivariatePoly two_x({0, 2});
  for (int i = 1; i < k; ++i) {
    UnivariatePoly next = two_x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

ChebyshevDerivsAtOne chebyshev_derivs_at_one(int k) {
  if (k < 0) throw std::invalid_argument("negative Chebyshev index");
  Rational k2 = Rational(k) * k;
  ChebyshevDerivsAtOne d{
      1,
      k2,
      (k2 * k2 - k2) / 3,
      k2 * (k2 - 1) * (k2 - 4) / 15,
  };
  UnivariatePoly t = chebyshev_poly(k);
  const Rational one = 1;
  if (t(one) != d.value || t.derivative(1)(one) != d.first ||
      t.derivative(2)(one) != d.second || t.derivative(3)(one) != d.third)
    throw std::logic_error("Chebyshev derivative closed forms disagree with the recurrence");
  return d;
}

bool admissible_growth_constant(int n, const Rational& c) {
  if (n < 5) throw std::invalid_argument("the construction needs n >= 5");
  return 2 * c + Rational(2, 3) * c * c - 2 * c / (3 * (n - 2)) > 1;
}

ChebyshevApproximant nae_approximant(int n, const Rational& c) {
  if (n < 5) throw std::invalid_argument("the construction needs n >= 5");
  if (!admissible_growth_constant(n, c))
    throw std::invalid_argument("c = " + to_string(c) +
                                " fails the growth inequality 2c + 2c^2/3 - 2c/(3(n-2)) > 1");

  ChebyshevApproximant out;
  out.n = n;
  out.c = c;
  BigInt d = ceil_sqrt(c * (n - 2));
  if (d % 2 != 0) ++d;  // even degree keeps the two endpoints on the same side
  out.degree = d.convert_to<int>();

  out.scale = chebyshev_eval(out.degree, Rational(n, n - 2));
  if (out.scale < 2)
    throw std::logic_error("scale value below 2; the construction guarantee failed");

  // p(x) = 1 - 2 T_d((2x - n)/(n - 2)) / (3 T_d(n/(n - 2))).
  UnivariatePoly argument({Rational(-n, n - 2), Rational(2, n - 2)});
  UnivariatePoly scaled = compose(chebyshev_poly(out.degree), argument) * (Rational(-2, 3) / out.scale);
  out.poly = UnivariatePoly::constant(1) + scaled;

  const Rational third(1, 3);
  out.deviations.resize(n + 1);
  for (int k = 0; k <= n; ++k) {
    Rational fk = (k == 0 || k == n) ? 0 : 1;
    Rational dev = out.poly(Rational(k)) - fk;
    if (dev < 0) dev = -dev;
    out.deviations[k] = dev;
    if (dev > third)
      throw std::logic_error("approximant leaves the 1/3 band at weight " + std::to_string(k));
  }
  if (out.poly(Rational(0)) != third || out.poly(Rational(n)) != third)
    throw std::logic_error("approximant endpoints are not exactly 1/3");
  return out;
}

OptimalGrowthConstant optimal_c(int n, const Rational& precision) {
  if (n < 5) throw std::invalid_argument("the construction needs n >= 5");
  if (precision <= 0) throw std::invalid_argument("precision must be positive");
  // Smallest multiple of the precision that is admissible; c = 1 always is.
  Rational inverse = Rational(1) / precision;
  BigInt lo = 0;
  BigInt hi = (numerator(inverse) + denominator(inverse) - 1) / denominator(inverse);
  while (lo + 1 < hi) {
    BigInt mid = (lo + hi) / 2;
    if (admissible_growth_constant(n, Rational(mid) * precision))
      hi = mid;
    else
      lo = mid;
  }
  return {Rational(hi) * precision, (std::sqrt(15.0) - 3.0) / 2.0};
}

}  // namespace boolfn
