#pragma once

#include <string>
#include <utility>
#include <vector>

#include "boolfn/rational.hpp"

namespace boolfn {

/// Exact rational univariate polynomial in the monomial basis.
class UnivariatePoly {
 public:
  UnivariatePoly() = default;
  /// coeffs[i] is the coefficient of x^i; trailing zeros are trimmed.
  explicit UnivariatePoly(std::vector<Rational> coeffs);
  static UnivariatePoly constant(Rational c);

  /// Largest index with a nonzero coefficient; 0 for constants including the
  /// zero polynomial.
  int degree() const;
  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of x^i (0 beyond the stored degree).
  const Rational& coeff(int i) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Rational operator()(const Rational& x) const;
  double eval_double(double x) const;

  UnivariatePoly derivative(int order = 1) const;

  UnivariatePoly operator+(const UnivariatePoly& other) const;
  UnivariatePoly operator-(const UnivariatePoly& other) const;
  UnivariatePoly operator*(const UnivariatePoly& other) const;
  UnivariatePoly operator*(const Rational& scalar) const;
  UnivariatePoly operator-() const;
  bool operator==(const UnivariatePoly& other) const = default;

  /// Text form `deg=<d> coeffs=<a0>,<a1>,...` with rationals as num/den.
  std::string to_text() const;

 private:
  std::vector<Rational> coeffs_;  // empty means the zero polynomial
};

/// Substitutes q into p: returns p(q(x)).
UnivariatePoly compose(const UnivariatePoly& p, const UnivariatePoly& q);

/// Lagrange interpolation through points with pairwise distinct abscissae;
/// exact rationals, degree < #points. Throws on duplicates.
UnivariatePoly interpolate(const std::vector<std::pair<Rational, Rational>>& points);

/// Forward differences at 0: output[k] is the k-th difference of the values,
/// i.e. the coefficient of C(x, k) for the polynomial taking these values at
/// x = 0, 1, ..., values.size()-1.
std::vector<Rational> forward_differences(std::vector<Rational> values);

/// Binomial-basis coefficients c_0..c_d with p(x) = sum c_k * C(x, k).
std::vector<Rational> to_binomial_basis(const UnivariatePoly& p);
std::vector<Rational> to_binomial_basis(const std::vector<Rational>& values_at_0_to_d);

/// Expands sum c_k * C(x, k) back into the monomial basis.
UnivariatePoly from_binomial_basis(const std::vector<Rational>& c);

/// The polynomial C(x, k) = x(x-1)...(x-k+1)/k!.
UnivariatePoly binomial_poly(int k);

/// p'(0) straight from binomial coefficients: sum_{k>=1} (-1)^(k+1) c_k / k.
Rational derivative_at_zero(const std::vector<Rational>& binomial_coeffs);

/// Text form including the basis flag: `deg=<d> coeffs=... basis=binomial`.
std::string binomial_to_text(const std::vector<Rational>& c);

}  // namespace boolfn
