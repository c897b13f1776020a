#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "boolfn/rational.hpp"
#include "boolfn/truth_table.hpp"

namespace boolfn {

/// Multilinear polynomial over the reals with exact rational coefficients,
/// indexed by variable-subset bitmasks. Unique representation: built from a
/// truth table it reproduces the function everywhere on the cube.
class MultilinearPoly {
 public:
  explicit MultilinearPoly(int n) : n_(n) {}

  int num_vars() const { return n_; }
  /// Largest |S| with a nonzero coefficient; 0 for constants.
  int degree() const;
  const Rational& coeff(std::uint32_t mask) const;
  void set_coeff(std::uint32_t mask, Rational value);
  const std::map<std::uint32_t, Rational>& terms() const { return terms_; }

  /// Value at a cube point: sum of coefficients over subsets of x.
  Rational eval_cube(std::uint32_t x) const;

  /// Human-readable form like "x1 + x2 - x1*x2".
  std::string to_string() const;

 private:
  int n_;
  std::map<std::uint32_t, Rational> terms_;
};

/// The multilinear representation of f via the subset Moebius transform:
/// c_S = sum_{T subset S} (-1)^(|S|-|T|) f(T), computed in place in O(n 2^n).
MultilinearPoly moebius(const TruthTable& f);

/// Degree of the multilinear representation (integer fast path, no rationals).
int degree(const TruthTable& f);

}  // namespace boolfn
