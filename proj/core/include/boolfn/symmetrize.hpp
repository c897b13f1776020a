#pragma once

#include <vector>

#include "boolfn/multilinear.hpp"
#include "boolfn/truth_table.hpp"
#include "boolfn/univariate.hpp"

namespace boolfn {

/// Univariate polynomial agreeing with the permutation average of f on the
/// cube: value at integer k is the fraction of weight-k inputs with f = 1.
struct SymmetrizationResult {
  UnivariatePoly poly;
  std::vector<Rational> values;  // poly(k) for k = 0..n
  int source_degree = 0;         // degree of f itself
};

/// Symmetrization via weight counting (not permutation averaging).
/// Postcondition, checked internally: deg(poly) <= degree(f).
SymmetrizationResult symmetrize(const TruthTable& f);

/// Lifts a univariate polynomial of degree d <= n to the symmetric
/// multilinear polynomial that agrees with p(|x|) on the cube, substituting
/// the elementary symmetric polynomial of each order for C(z, k).
MultilinearPoly symmetric_lift(const UnivariatePoly& p, int n);

}  // namespace boolfn
