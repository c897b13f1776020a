#pragma once

#include <optional>
#include <string>

#include "boolfn/lp.hpp"
#include "boolfn/multilinear.hpp"
#include "boolfn/truth_table.hpp"
#include "boolfn/univariate.hpp"

namespace boolfn {

inline constexpr int kMaxVarsApproxDegree = 8;

struct ApproxDegreeResult {
  Rational epsilon;
  int degree = 0;
  /// Feasible vertex of the winning LP; multilinear for the general route,
  /// univariate in the input weight for the symmetric route.
  std::optional<MultilinearPoly> witness_multilinear;
  std::optional<UnivariatePoly> witness_univariate;
  /// Why degree-1 is impossible (empty when degree = 0).
  std::string infeasibility_note;
};

/// Smallest d such that some polynomial over subsets of size <= d stays
/// within eps of f at every cube point, found by ascending exact-LP
/// feasibility from d = 0. Requires 0 < eps < 1/2 and n <= 8.
ApproxDegreeResult approx_degree(const TruthTable& f, const Rational& eps);

/// Fast path for symmetric functions: a univariate polynomial in the weight,
/// solved in binomial-basis coefficients. Agrees with approx_degree on every
/// symmetric input. Throws for non-symmetric f.
ApproxDegreeResult approx_degree_symmetric(const TruthTable& f, const Rational& eps);

}  // namespace boolfn
