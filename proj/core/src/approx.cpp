#include "boolfn/approx.hpp"

#include <bit>
#include <stdexcept>
#include <vector>

namespace boolfn {
namespace {

void check_epsilon(const Rational& eps) {
  if (eps <= 0 || eps >= Rational(1, 2))
    throw std::invalid_argument("epsilon must satisfy 0 < eps < 1/2, got " + to_string(eps));
}

// Subset masks of popcount <= d, ascending by (popcount, mask).
std::vector<std::uint32_t> masks_up_to(int n, int d) {
  std::vector<std::uint32_t> masks;
  for (int k = 0; k <= d; ++k)
    for (std::uint32_t s = 0; s < (std::uint32_t{1} << n); ++s)
      if (std::popcount(s) == k) masks.push_back(s);
  return masks;
}

LpOutcome feasible_general(const TruthTable& f, const Rational& eps, int d,
                           std::vector<std::uint32_t>& masks) {
  masks = masks_up_to(f.num_vars(), d);
  LinearProgram lp;
  for (std::uint32_t m : masks) lp.variables.push_back("c" + std::to_string(m));
  lp.objective.assign(masks.size(), Rational(0));
  for (std::uint32_t x = 0; x < f.size(); ++x) {
    std::vector<Rational> row(masks.size(), Rational(0));
    for (std::size_t j = 0; j < masks.size(); ++j)
      if ((masks[j] & x) == masks[j]) row[j] = 1;
    Rational fx = f.at(x) ? 1 : 0;
    lp.add_constraint(row, Relation::GreaterEq, fx - eps);
    lp.add_constraint(std::move(row), Relation::LessEq, fx + eps);
  }
  return solve(lp);
}

LpOutcome feasible_symmetric(const TruthTable& f, const Rational& eps, int d) {
  int n = f.num_vars();
  LinearProgram lp;
  for (int j = 0; j <= d; ++j) lp.variables.push_back("q" + std::to_string(j));
  lp.objective.assign(d + 1, Rational(0));
  for (int k = 0; k <= n; ++k) {
    std::vector<Rational> row(d + 1);
    for (int j = 0; j <= d; ++j) row[j] = Rational(binomial(k, j));
    std::uint32_t witness_input = (std::uint32_t{1} << k) - 1;
    Rational fk = f.at(witness_input) ? 1 : 0;
    lp.add_constraint(row, Relation::GreaterEq, fk - eps);
    lp.add_constraint(std::move(row), Relation::LessEq, fk + eps);
  }
  return solve(lp);
}

std::string note_for(int d) {
  return d <= 0 ? std::string()
                : "band LP infeasible at degree " + std::to_string(d - 1) +
                      " (positive phase-1 optimum)";
}

}  // namespace

ApproxDegreeResult approx_degree(const TruthTable& f, const Rational& eps) {
  check_epsilon(eps);
  if (f.num_vars() > kMaxVarsApproxDegree)
    throw std::invalid_argument("general approximate degree capped at n <= 8");
  for (int d = 0; d <= f.num_vars(); ++d) {
    std::vector<std::uint32_t> masks;
    LpOutcome outcome = feasible_general(f, eps, d, masks);
    if (outcome.status != LpStatus::Optimal) continue;
    ApproxDegreeResult result;
    result.epsilon = eps;
    result.degree = d;
    MultilinearPoly witness(f.num_vars());
    for (std::size_t j = 0; j < masks.size(); ++j)
      witness.set_coeff(masks[j], outcome.vertex[j]);
    result.witness_multilinear = std::move(witness);
    result.infeasibility_note = note_for(d);
    return result;
  }
  throw std::logic_error("the exact representation must be feasible");
}

ApproxDegreeResult approx_degree_symmetric(const TruthTable& f, const Rational& eps) {
  check_epsilon(eps);
  if (!is_symmetric(f))
    throw std::invalid_argument("approx_degree_symmetric requires a symmetric function");
  for (int d = 0; d <= f.num_vars(); ++d) {
    LpOutcome outcome = feasible_symmetric(f, eps, d);
    if (outcome.status != LpStatus::Optimal) continue;
    ApproxDegreeResult result;
    result.epsilon = eps;
    result.degree = d;
    result.witness_univariate = from_binomial_basis(outcome.vertex);
    result.infeasibility_note = note_for(d);
    return result;
  }
  throw std::logic_error("the exact representation must be feasible");
}

}  // namespace boolfn
