#include "boolfn/bounds.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <thread>

#include "boolfn/approx.hpp"

namespace boolfn {
namespace {

std::int64_t sq(std::int64_t v) { return v * v; }

// A >= (sqrt(10) - 2) B as integers: A + 2B >= sqrt(10) B, both sides
// nonnegative, square.
bool ge_sqrt10_minus_2(std::int64_t a, std::int64_t b) {
  return sq(a + 2 * b) >= 10 * sq(b);
}

double eval_abs(const UnivariatePoly& p, double x) { return std::fabs(p.eval_double(x)); }

// Lower bound for sup |p| over [0, n]: integers, endpoints, and the real
// roots of p' isolated by sign changes on a grid and refined by bisection.
double sup_abs_lower_bound(const UnivariatePoly& p, int n, int grid) {
  double best = 0;
  for (int k = 0; k <= n; ++k) best = std::max(best, eval_abs(p, k));
  UnivariatePoly dp = p.derivative();
  if (dp.is_zero()) return best;
  double prev_x = 0, prev_v = dp.eval_double(0);
  for (int g = 1; g <= grid; ++g) {
    double x = static_cast<double>(n) * g / grid;
    double v = dp.eval_double(x);
    if ((prev_v < 0 && v > 0) || (prev_v > 0 && v < 0)) {
      double lo = prev_x, hi = x, flo = prev_v;
      for (int it = 0; it < 80; ++it) {
        double mid = (lo + hi) / 2;
        double fm = dp.eval_double(mid);
        if ((flo < 0) == (fm < 0)) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
      }
      best = std::max(best, eval_abs(p, (lo + hi) / 2));
    } else if (v == 0) {
      best = std::max(best, eval_abs(p, x));
    }
    prev_x = x;
    prev_v = v;
  }
  return best;
}

DerivativeCheck derivative_check(const TruthTable& f, int order, int min_vars,
                                 const Rational& bound_or_unset, bool bound_from_p3) {
  int n = f.num_vars();
  if (n < min_vars)
    throw std::invalid_argument("check needs n >= " + std::to_string(min_vars));
  if (f.at(0))
    throw std::invalid_argument("check needs f(0) = 0");
  if (sensitivity_at(f, 0) != n)
    throw std::invalid_argument("check needs full sensitivity at 0");

  SymmetrizationResult sym = symmetrize(f);
  UnivariatePoly deriv = sym.poly.derivative(order);

  DerivativeCheck check;
  check.bound = bound_from_p3 ? Rational(1) - sym.poly(Rational(3)) : bound_or_unset;
  if (deriv.degree() == 0) {
    Rational sup = deriv.coeff(0) < 0 ? -deriv.coeff(0) : deriv.coeff(0);
    check.exact = true;
    check.sup_estimate = to_double(sup);
    check.verdict = sup >= check.bound;
    return check;
  }
  check.sup_estimate = sup_abs_lower_bound(deriv, n, 4096);
  double target = to_double(check.bound) - 1e-9;
  check.verdict = check.sup_estimate >= target;
  if (!check.verdict) {
    // Denser search before reporting a violation.
    check.sup_estimate = std::max(check.sup_estimate, sup_abs_lower_bound(deriv, n, 65536));
    check.verdict = check.sup_estimate >= target;
  }
  return check;
}

struct Aggregate {
  std::vector<std::string> violations;
  std::optional<Rational> min_ratio;
  std::vector<std::string> extremal_hex;
  std::map<std::pair<int, int>, std::uint64_t> distribution;
  std::map<int, Rational> min_ratio_by_bs;

  void absorb(const TruthTable& f, const SeparationReport& report) {
    ++distribution[{report.measures.d, report.measures.bs}];
    if (!report.all_ok()) {
      std::string names;
      for (const auto& [name, ok] : report.verdicts)
        if (!ok) names += (names.empty() ? "" : ",") + name;
      violations.push_back(f.to_text() + " fails " + names);
    }
    int bs = report.measures.bs;
    if (bs >= 2) {
      Rational ratio(static_cast<long>(report.measures.d) * report.measures.d, bs);
      auto it = min_ratio_by_bs.find(bs);
      if (it == min_ratio_by_bs.end() || ratio < it->second) min_ratio_by_bs[bs] = ratio;
      if (!min_ratio || ratio < *min_ratio) {
        min_ratio = ratio;
        extremal_hex.clear();
      }
      if (ratio == *min_ratio && extremal_hex.size() < 16)
        extremal_hex.push_back(f.hex());
    }
  }

  void merge(Aggregate&& other) {
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
    for (const auto& [key, count] : other.distribution) distribution[key] += count;
    for (const auto& [bs, ratio] : other.min_ratio_by_bs) {
      auto it = min_ratio_by_bs.find(bs);
      if (it == min_ratio_by_bs.end() || ratio < it->second) min_ratio_by_bs[bs] = ratio;
    }
    if (other.min_ratio) {
      if (!min_ratio || *other.min_ratio < *min_ratio) {
        min_ratio = other.min_ratio;
        extremal_hex = std::move(other.extremal_hex);
      } else if (*other.min_ratio == *min_ratio) {
        for (auto& hex : other.extremal_hex)
          if (extremal_hex.size() < 16) extremal_hex.push_back(std::move(hex));
      }
    }
  }
};

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("BOOLFN_THREADS")) {
    int parsed = std::atoi(env);
    if (parsed > 0) return parsed;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace

double threshold(const ThresholdQuery& q) {
  if (q.k < 1) throw std::invalid_argument("derivative order must be >= 1");
  if (q.c <= 0) throw std::invalid_argument("the derivative bound c must be positive");
  Rational factor = Rational(odd_double_factorial(q.k)) * q.c;
  if (q.variant == ThresholdVariant::Exact)
    factor /= Rational(BigInt(1) << (q.k - 1));
  else
    factor = factor / Rational(BigInt(1) << q.k) * Rational(6, 5);
  double mc = to_double(factor);

  double lo = 0, hi = std::sqrt(6.0);
  auto g = [&](double x) { return std::pow(x, q.k) - (1 - x * x / 6) * mc; };
  while (hi - lo > 1e-12) {
    double mid = (lo + hi) / 2;
    if (g(mid) < 0)
      lo = mid;
    else
      hi = mid;
  }
  return (lo + hi) / 2;
}

TailSum tail_sum(int limit) {
  if (limit < 4) throw std::invalid_argument("the tail starts at k = 4");
  TailSum out;
  out.partial = 0;
  for (int k = 4; k <= limit; ++k)
    out.partial += Rational(1, BigInt(k) * (BigInt(1) << (k - 2)));
  out.closed_form = 4 * std::log(2.0) - 8.0 / 3.0;
  return out;
}

bool SeparationReport::all_ok() const {
  for (const auto& [name, ok] : verdicts)
    if (!ok) return false;
  return true;
}

bool SeparationReport::verdict(std::string_view name) const {
  for (const auto& [key, ok] : verdicts)
    if (key == name) return ok;
  throw std::out_of_range("no verdict named " + std::string(name));
}

SeparationReport verify_separations(const TruthTable& f, bool with_approx) {
  SeparationReport report;
  report.measures = compute_measures(f);
  report.symmetrization = symmetrize(f);

  const std::int64_t d = report.measures.d;
  const std::int64_t s = report.measures.s;
  const std::int64_t bs = report.measures.bs;
  const std::int64_t D = report.measures.D;
  const bool degenerate = bs <= 1;

  auto& v = report.verdicts;
  v.emplace_back("d2_ge_sqrt10m2_bs", degenerate ? d * d >= bs : ge_sqrt10_minus_2(d * d, bs));
  v.emplace_back("d2_ge_sqrt6over5_bs", degenerate ? d * d >= bs : 5 * sq(d * d) >= 6 * sq(bs));
  v.emplace_back("d2_ge_bs", d * d >= bs);
  v.emplace_back("s2_ge_d", s * s >= d);
  v.emplace_back("s4_ge_sqrt10m2_bs",
                 degenerate ? sq(s * s) >= bs : ge_sqrt10_minus_2(sq(s) * sq(s), bs));
  v.emplace_back("D_le_bs_d", D <= bs * d);
  v.emplace_back("d3_ge_sqrt10m2_D", degenerate ? d * d * d >= D : ge_sqrt10_minus_2(d * d * d, D));
  v.emplace_back("sym_degree_le_d",
                 report.symmetrization.poly.degree() <= report.measures.d);

  if (with_approx) {
    if (f.num_vars() > 6)
      throw std::invalid_argument("approximate-degree verdicts capped at n <= 6");
    std::int64_t a = approx_degree(f, Rational(1, 3)).degree;
    report.deg13 = static_cast<int>(a);
    v.emplace_back("adeg2_ge_sqrt6over101_bs", 101 * sq(a * a) >= 6 * sq(bs));
    v.emplace_back("adeg2_ge_bs_over6", 6 * a * a >= bs);
  }
  if (bs > 0) report.d2_over_bs = Rational(d * d, bs);
  return report;
}

SweepReport sweep(int n, bool with_approx, int threads) {
  if (n < 1 || n > 4 || (with_approx && n > 3))
    throw std::invalid_argument("sweep supports n <= 4, or n <= 3 with approximate degrees");

  SweepReport report;
  report.n = n;
  report.function_count = std::uint64_t{1} << (std::uint32_t{1} << n);

  int workers = std::min<std::int64_t>(resolve_threads(threads),
                                       static_cast<std::int64_t>(report.function_count));
  report.threads_used = workers;

  auto start = std::chrono::steady_clock::now();
  std::vector<Aggregate> partials(workers);
  std::vector<std::thread> pool;
  std::uint64_t chunk = report.function_count / workers;
  for (int w = 0; w < workers; ++w) {
    std::uint64_t begin = w * chunk;
    std::uint64_t end = (w + 1 == workers) ? report.function_count : begin + chunk;
    pool.emplace_back([&, w, begin, end] {
      for (std::uint64_t bits = begin; bits < end; ++bits) {
        TruthTable f = TruthTable::from_bits(n, bits);
        partials[w].absorb(f, verify_separations(f, with_approx));
      }
    });
  }
  for (auto& t : pool) t.join();

  Aggregate total;
  for (auto& p : partials) total.merge(std::move(p));
  report.violations = std::move(total.violations);
  report.min_d2_over_bs = std::move(total.min_ratio);
  report.extremal_hex = std::move(total.extremal_hex);
  report.distribution = std::move(total.distribution);
  report.min_ratio_by_bs = std::move(total.min_ratio_by_bs);
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

DerivativeCheck third_derivative_check(const TruthTable& f) {
  return derivative_check(f, 3, 4, 0, /*bound_from_p3=*/true);
}

DerivativeCheck fourth_derivative_check(const TruthTable& f) {
  return derivative_check(f, 4, 8, Rational(1, 6), /*bound_from_p3=*/false);
}

ExtremalQuarticRecord extremal_quartic() {
  ExtremalQuarticRecord rec;
  rec.poly = UnivariatePoly(
      {0, Rational(125, 72), Rational(-125, 144), Rational(5, 36), Rational(-1, 144)});

  const std::vector<Rational> expected = {0,      1, 1, Rational(7, 12), Rational(1, 6), 0,
                                          Rational(1, 6), Rational(7, 12), 1, 1, 0};
  rec.values.resize(11);
  for (int k = 0; k <= 10; ++k) rec.values[k] = rec.poly(Rational(k));
  rec.values_ok = rec.values == expected;

  rec.tightness_ok = rec.values[2] == 1 && rec.values[5] == 0 &&
                     rec.values[7] == Rational(7, 12) && rec.values[8] == 1;

  rec.integrality_ok = true;
  for (int k = 0; k <= 10; ++k)
    if (!is_nonnegative_integer(Rational(binomial(10, k)) * rec.values[k]))
      rec.integrality_ok = false;

  UnivariatePoly fourth = rec.poly.derivative(4);
  rec.fourth_derivative_ok = fourth == UnivariatePoly::constant(Rational(-1, 6));

  rec.binomial = to_binomial_basis(rec.poly);
  rec.binomial_ok =
      rec.binomial == std::vector<Rational>{0, 1, -1, Rational(7, 12), Rational(-1, 6)};

  rec.derivative_at_zero_value = derivative_at_zero(rec.binomial);
  rec.derivative_ok = rec.derivative_at_zero_value == Rational(125, 72) &&
                      rec.poly.derivative()(Rational(0)) == Rational(125, 72);
  return rec;
}

LinearProgram quartic_band_program() {
  LinearProgram lp;
  lp.variables = {"c1", "c2", "c3", "c4"};
  lp.objective = {0, 0, 0, 1};
  lp.add_constraint({1, 1, 1, 1}, Relation::Equal, 1);
  for (int k = 2; k <= 10; ++k) {
    std::vector<Rational> row = {k, k * k, k * k * k, k * k * k * k};
    lp.add_constraint(row, Relation::GreaterEq, 0);
    lp.add_constraint(std::move(row), Relation::LessEq, 1);
  }
  return lp;
}

UniquenessRecord uniqueness_lp() {
  UniquenessRecord rec;
  LinearProgram lp = quartic_band_program();
  rec.min_c4 = solve(lp);

  LinearProgram positive = lp;
  positive.add_constraint({0, 0, 0, 1}, Relation::GreaterEq, Rational(1, 1000));
  rec.positive_c4 = solve(positive);

  LinearProgram maximize = lp;
  maximize.sense = Sense::Maximize;
  rec.max_c4 = solve(maximize);

  if (rec.min_c4.status == LpStatus::Optimal) {
    std::vector<Rational> coeffs = {0};
    coeffs.insert(coeffs.end(), rec.min_c4.vertex.begin(), rec.min_c4.vertex.end());
    rec.vertex_poly = UnivariatePoly(std::move(coeffs));
  }

  rec.consistent = rec.min_c4.status == LpStatus::Optimal &&
                   rec.min_c4.value == Rational(-1, 144) &&
                   rec.positive_c4.status == LpStatus::Infeasible &&
                   rec.max_c4.status == LpStatus::Optimal && rec.max_c4.value <= 0 &&
                   rec.min_c4.value <= rec.max_c4.value &&
                   rec.vertex_poly == extremal_quartic().poly;
  return rec;
}

}  // namespace boolfn
