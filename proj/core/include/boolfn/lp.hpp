#pragma once

#include <string>
#include <vector>

#include "boolfn/rational.hpp"

namespace boolfn {

enum class Relation { LessEq, Equal, GreaterEq };
enum class Sense { Minimize, Maximize };
enum class LpStatus { Optimal, Infeasible, Unbounded };

struct Constraint {
  std::vector<Rational> coeffs;
  Relation rel = Relation::LessEq;
  Rational rhs = 0;
};

/// Exact rational linear program. Variables are unrestricted in sign.
struct LinearProgram {
  std::vector<std::string> variables;
  std::vector<Constraint> constraints;
  std::vector<Rational> objective;
  Sense sense = Sense::Minimize;

  void add_constraint(std::vector<Rational> coeffs, Relation rel, Rational rhs);
  /// One constraint per line: `<c1> <c2> ... <rel> <rhs>`, rationals as num/den.
  std::string dump() const;
};

struct LpOutcome {
  LpStatus status = LpStatus::Infeasible;
  Rational value = 0;             // meaningful when Optimal
  std::vector<Rational> vertex;   // per-variable assignment when Optimal
};

/// Two-phase simplex with Bland's rule (guaranteed termination); unrestricted
/// variables are split into nonnegative parts internally. Infeasibility is
/// certified by a positive phase-1 optimum. Throws std::invalid_argument on
/// malformed programs (row width mismatches).
LpOutcome solve(const LinearProgram& lp);

}  // namespace boolfn
