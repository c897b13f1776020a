#include "boolfn/symmetrize.hpp"

#include <stdexcept>

namespace boolfn {

SymmetrizationResult symmetrize(const TruthTable& f) {
  auto profile = weight_profile(f);
  int n = f.num_vars();
  SymmetrizationResult result;
  result.values.resize(n + 1);
  for (int k = 0; k <= n; ++k)
    result.values[k] = Rational(profile.ones[k], profile.totals[k]);
  result.poly = from_binomial_basis(forward_differences(result.values));
  result.source_degree = degree(f);
  if (result.poly.degree() > result.source_degree && !result.poly.is_zero())
    throw std::logic_error("symmetrization degree exceeds the function degree");
  return result;
}

MultilinearPoly symmetric_lift(const UnivariatePoly& p, int n) {
  int d = p.degree();
  if (d > n)
    throw std::invalid_argument("cannot lift degree " + std::to_string(d) +
                                " to " + std::to_string(n) + " variables");
  std::vector<Rational> values(d + 1);
  for (int k = 0; k <= d; ++k) values[k] = p(Rational(k));
  std::vector<Rational> c = forward_differences(std::move(values));

  MultilinearPoly lifted(n);
  for (int k = 0; k <= d; ++k) {
    if (c[k] == 0) continue;
    if (k == 0) {
      lifted.set_coeff(0, c[0]);
      continue;
    }
    // All subsets of size k, by Gosper's hack.
    std::uint32_t mask = (std::uint32_t{1} << k) - 1;
    std::uint32_t limit = std::uint32_t{1} << n;
    while (mask < limit) {
      lifted.set_coeff(mask, c[k]);
      std::uint32_t low = mask & (~mask + 1);
      std::uint32_t ripple = mask + low;
      mask = ripple | (((mask ^ ripple) >> 2) / low);
    }
  }
  return lifted;
}

}  // namespace boolfn
