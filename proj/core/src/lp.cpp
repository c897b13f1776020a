#include "boolfn/lp.hpp"

#include <stdexcept>

namespace boolfn {

void LinearProgram::add_constraint(std::vector<Rational> coeffs, Relation rel, Rational rhs) {
  constraints.push_back({std::move(coeffs), rel, std::move(rhs)});
}

std::string LinearProgram::dump() const {
  std::string out;
  for (const auto& c : constraints) {
    for (const auto& v : c.coeffs) out += to_string(v) + " ";
    switch (c.rel) {
      case Relation::LessEq: out += "<="; break;
      case Relation::Equal: out += "="; break;
      case Relation::GreaterEq: out += ">="; break;
    }
    out += " " + to_string(c.rhs) + "\n";
  }
  return out;
}

namespace {

// Dense simplex tableau. Columns: split variables (2 per original), then one
// slack/surplus per inequality row, then artificials, then the rhs.
class Tableau {
 public:
  explicit Tableau(const LinearProgram& lp) : lp_(lp), nv_(lp.variables.size()) {
    for (const auto& c : lp.constraints)
      if (c.coeffs.size() != nv_)
        throw std::invalid_argument("constraint width does not match variable count");
    if (lp.objective.size() != nv_)
      throw std::invalid_argument("objective width does not match variable count");

    std::size_t rows = lp.constraints.size();
    std::size_t slacks = 0;
    for (const auto& c : lp.constraints)
      if (c.rel != Relation::Equal) ++slacks;

    split_cols_ = 2 * nv_;
    slack_begin_ = split_cols_;
    art_begin_ = slack_begin_ + slacks;
    // Worst case one artificial per row.
    cols_ = art_begin_ + rows;

    rows_.reserve(rows);
    basis_.reserve(rows);
    std::size_t next_slack = slack_begin_;
    std::size_t next_art = art_begin_;
    for (const auto& c : lp.constraints) {
      std::vector<Rational> row(cols_ + 1, Rational(0));
      for (std::size_t j = 0; j < nv_; ++j) {
        row[2 * j] = c.coeffs[j];
        row[2 * j + 1] = -c.coeffs[j];
      }
      row[cols_] = c.rhs;
      Relation rel = c.rel;
      if (row[cols_] < 0) {
        for (auto& v : row) v = -v;
        if (rel == Relation::LessEq)
          rel = Relation::GreaterEq;
        else if (rel == Relation::GreaterEq)
          rel = Relation::LessEq;
      }
      std::size_t basic;
      if (rel == Relation::LessEq) {
        row[next_slack] = 1;
        basic = next_slack++;
      } else if (rel == Relation::GreaterEq) {
        row[next_slack] = -1;
        ++next_slack;
        row[next_art] = 1;
        basic = next_art++;
      } else {
        row[next_art] = 1;
        basic = next_art++;
      }
      rows_.push_back(std::move(row));
      basis_.push_back(basic);
    }
    art_end_ = next_art;
  }

  LpOutcome run() {
    // Phase 1: minimize the sum of artificials.
    std::vector<Rational> cost(cols_, Rational(0));
    for (std::size_t j = art_begin_; j < art_end_; ++j) cost[j] = 1;
    load_objective(cost);
    iterate(/*allow_artificial=*/true);
    if (objective_value() > 0) return {LpStatus::Infeasible, 0, {}};
    drive_out_artificials();

    // Phase 2: the caller's objective over the split variables.
    cost.assign(cols_, Rational(0));
    for (std::size_t j = 0; j < nv_; ++j) {
      Rational c = lp_.objective[j];
      if (lp_.sense == Sense::Maximize) c = -c;
      cost[2 * j] = c;
      cost[2 * j + 1] = -c;
    }
    load_objective(cost);
    if (!iterate(/*allow_artificial=*/false)) return {LpStatus::Unbounded, 0, {}};

    LpOutcome out;
    out.status = LpStatus::Optimal;
    out.vertex.assign(nv_, Rational(0));
    std::vector<Rational> split(split_cols_, Rational(0));
    for (std::size_t r = 0; r < rows_.size(); ++r)
      if (basis_[r] < split_cols_) split[basis_[r]] = rows_[r][cols_];
    for (std::size_t j = 0; j < nv_; ++j) out.vertex[j] = split[2 * j] - split[2 * j + 1];
    for (std::size_t j = 0; j < nv_; ++j) out.value += lp_.objective[j] * out.vertex[j];
    return out;
  }

 private:
  void load_objective(const std::vector<Rational>& cost) {
    obj_.assign(cols_ + 1, Rational(0));
    for (std::size_t j = 0; j < cols_; ++j) obj_[j] = cost[j];
    // Zero out reduced costs of basic columns.
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Rational& cb = cost[basis_[r]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j <= cols_; ++j)
        if (rows_[r][j] != 0) obj_[j] -= cb * rows_[r][j];
    }
  }

  Rational objective_value() const { return -obj_[cols_]; }

  // Bland's rule: entering column is the smallest index with a negative
  // reduced cost; the leaving row is the ratio-test winner with the smallest
  // basic index. Returns false on unboundedness.
  bool iterate(bool allow_artificial) {
    std::size_t scan_end = allow_artificial ? art_end_ : art_begin_;
    for (;;) {
      std::size_t entering = cols_;
      for (std::size_t j = 0; j < scan_end; ++j)
        if (obj_[j] < 0) {
          entering = j;
          break;
        }
      if (entering == cols_) return true;

      std::size_t leaving = rows_.size();
      Rational best_ratio = 0;
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (rows_[r][entering] <= 0) continue;
        Rational ratio = rows_[r][cols_] / rows_[r][entering];
        if (leaving == rows_.size() || ratio < best_ratio ||
            (ratio == best_ratio && basis_[r] < basis_[leaving])) {
          leaving = r;
          best_ratio = ratio;
        }
      }
      if (leaving == rows_.size()) return false;
      pivot(leaving, entering);
    }
  }

  void pivot(std::size_t r, std::size_t j) {
    auto& prow = rows_[r];
    Rational inv = 1 / prow[j];
    if (inv != 1)
      for (auto& v : prow)
        if (v != 0) v *= inv;
    for (std::size_t rr = 0; rr < rows_.size(); ++rr) {
      if (rr == r || rows_[rr][j] == 0) continue;
      eliminate(rows_[rr], prow, j);
    }
    if (obj_[j] != 0) eliminate(obj_, prow, j);
    basis_[r] = j;
  }

  static void eliminate(std::vector<Rational>& target, const std::vector<Rational>& prow,
                        std::size_t j) {
    Rational factor = target[j];
    for (std::size_t c = 0; c < target.size(); ++c)
      if (prow[c] != 0) target[c] -= factor * prow[c];
  }

  // Basic artificials at value zero are pivoted out on any usable column;
  // rows with no such column are redundant and dropped.
  void drive_out_artificials() {
    for (std::size_t r = 0; r < rows_.size();) {
      if (basis_[r] < art_begin_) {
        ++r;
        continue;
      }
      std::size_t col = art_begin_;
      for (std::size_t j = 0; j < art_begin_; ++j)
        if (rows_[r][j] != 0) {
          col = j;
          break;
        }
      if (col < art_begin_) {
        pivot(r, col);
        ++r;
      } else {
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(r));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
      }
    }
  }

  const LinearProgram& lp_;
  std::size_t nv_;
  std::size_t split_cols_ = 0, slack_begin_ = 0, art_begin_ = 0, art_end_ = 0, cols_ = 0;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> basis_;
  std::vector<Rational> obj_;
};

}  // namespace

LpOutcome solve(const LinearProgram& lp) {
  Tableau tableau(lp);
  return tableau.run();
}

}  // namespace boolfn
