#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "boolfn/lp.hpp"
#include "boolfn/measures.hpp"
#include "boolfn/symmetrize.hpp"
#include "boolfn/truth_table.hpp"
#include "boolfn/univariate.hpp"

namespace boolfn {

enum class ThresholdVariant { Exact, Approximate };

/// Root query for x^k = (1 - x^2/6) * M * c on (0, sqrt(6)), where M is
/// (2k-1)!!/2^(k-1) for the exact variant and (2k-1)!!/2^k * 6/5 for the
/// approximate one. The left side increases and the right side decreases to 0
/// at sqrt(6), so the crossing is unique; the separation conclusion is
/// x >= x*.
struct ThresholdQuery {
  int k = 1;
  Rational c;
  ThresholdVariant variant = ThresholdVariant::Exact;
};

/// The unique crossing, by bisection to 1e-12.
double threshold(const ThresholdQuery& q);

struct TailSum {
  Rational partial;    // sum_{k=4..limit} 1/(k 2^(k-2)), exact
  double closed_form;  // 4 ln 2 - 8/3, the limit of the series
};

/// Requires limit >= 4.
TailSum tail_sum(int limit);

/// Measures of one function plus one pass/fail verdict per separation
/// inequality. Every verdict is an exact integer comparison; inequalities
/// with constants > 1 (sqrt(10)-2, sqrt(6/5)) degenerate to their baseline
/// forms when bs <= 1, where only +/-dictators live and the strengthened
/// constants provably fail.
struct SeparationReport {
  MeasureSet measures;
  std::optional<int> deg13;  // approximate degree at eps = 1/3, when requested
  SymmetrizationResult symmetrization;
  std::vector<std::pair<std::string, bool>> verdicts;
  std::optional<Rational> d2_over_bs;  // when bs > 0

  bool all_ok() const;
  bool verdict(std::string_view name) const;
};

/// with_approx adds the approximate-degree verdicts (n <= 6).
SeparationReport verify_separations(const TruthTable& f, bool with_approx);

struct SweepReport {
  int n = 0;
  std::uint64_t function_count = 0;
  int threads_used = 1;
  double elapsed_seconds = 0;
  /// Violating functions (hex table + failed verdict names); expected empty.
  std::vector<std::string> violations;
  /// Minimum d^2/bs over functions with bs >= 2, with examples attaining it.
  std::optional<Rational> min_d2_over_bs;
  std::vector<std::string> extremal_hex;
  /// Count of functions per (d, bs) pair.
  std::map<std::pair<int, int>, std::uint64_t> distribution;
  /// Minimum d^2/bs per bs level (bs >= 2).
  std::map<int, Rational> min_ratio_by_bs;
};

/// Runs verify_separations over all 2^(2^n) functions, fanned out across
/// worker threads over disjoint index ranges (BOOLFN_THREADS caps the count
/// when `threads` is 0). n <= 4, or n <= 3 with approx.
SweepReport sweep(int n, bool with_approx, int threads = 0);

struct DerivativeCheck {
  double sup_estimate = 0;  // lower bound for sup over [0, n]
  Rational bound;           // required level
  bool exact = false;       // true when the derivative is constant
  bool verdict = false;     // sup >= bound (exact, or within 1e-9 slack)
};

/// For f fully sensitive at 0 with n >= 4: sup |p'''| over [0, n] of the
/// symmetrization must reach 1 - p(3). The sup is lower-bounded by evaluating
/// at integers, endpoints and the isolated real critical points; that is
/// sound for a ">=" claim, and a failed check retries with a denser search.
DerivativeCheck third_derivative_check(const TruthTable& f);

/// For f fully sensitive at 0 with n >= 8: sup |p''''| >= 1/6. Exact when the
/// symmetrization has degree 4 (constant fourth derivative).
DerivativeCheck fourth_derivative_check(const TruthTable& f);

/// The extremal quartic q(x) = -x^4/144 + 5x^3/36 - 125x^2/144 + 125x/72 and
/// every identity it must satisfy, all checked exactly.
struct ExtremalQuarticRecord {
  UnivariatePoly poly;
  std::vector<Rational> values;          // q(0..10)
  std::vector<Rational> binomial;        // [0, 1, -1, 7/12, -1/6]
  Rational derivative_at_zero_value;     // 125/72
  bool values_ok = false;      // q(0..10) = 0,1,1,7/12,1/6,0,1/6,7/12,1,1,0
  bool tightness_ok = false;   // q(2)=1, q(5)=0, q(7)=7/12, q(8)=1
  bool integrality_ok = false; // C(10,k) q(k) is a nonnegative integer
  bool fourth_derivative_ok = false;  // q'''' = -1/6 identically
  bool binomial_ok = false;
  bool derivative_ok = false;  // binomial-basis formula matches q'(0)
  bool all_ok() const {
    return values_ok && tightness_ok && integrality_ok && fourth_derivative_ok &&
           binomial_ok && derivative_ok;
  }
};

ExtremalQuarticRecord extremal_quartic();

/// The degree-4 band program: variables c1..c4, p(x) = c1 x + ... + c4 x^4,
/// p(1) = 1 and 0 <= p(k) <= 1 for k = 2..10.
LinearProgram quartic_band_program();

/// Solves the band program three ways: min c4 (expect -1/144 at the extremal
/// quartic's coefficients), with the extra constraint c4 >= 1/1000 (expect
/// infeasible; stands in for the strict c4 > 0), and max c4 (expect <= 0).
struct UniquenessRecord {
  LpOutcome min_c4;
  LpOutcome positive_c4;
  LpOutcome max_c4;
  UnivariatePoly vertex_poly;  // from the min-c4 vertex, zero constant term
  bool consistent = false;
};

UniquenessRecord uniqueness_lp();

}  // namespace boolfn
