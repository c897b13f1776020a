#include "boolfn/measures.hpp"

#include <bit>
#include <stdexcept>

#include "boolfn/multilinear.hpp"

namespace boolfn {
namespace {

std::vector<std::uint32_t> minimal_sensitive_blocks(const TruthTable& f, std::uint32_t x) {
  std::uint32_t size = f.size();
  bool fx = f.at(x);
  std::vector<std::uint8_t> sensitive(size), contains(size);
  for (std::uint32_t r = 1; r < size; ++r)
    sensitive[r] = f.at(x ^ r) != fx;
  // contains[r]: some nonempty subset of r is sensitive.
  std::vector<std::uint32_t> minimal;
  for (std::uint32_t r = 1; r < size; ++r) {
    bool proper_subset_sensitive = false;
    for (int i = 0; i < f.num_vars(); ++i) {
      std::uint32_t bit = std::uint32_t{1} << i;
      if ((r & bit) && contains[r ^ bit]) {
        proper_subset_sensitive = true;
        break;
      }
    }
    contains[r] = sensitive[r] || proper_subset_sensitive;
    if (sensitive[r] && !proper_subset_sensitive) minimal.push_back(r);
  }
  return minimal;
}

// DFS over ascending block masks; the first maximum-size packing found is the
// lexicographically smallest one because candidates are tried in order and
// pruning only drops branches that cannot exceed the current best.
void pack(const std::vector<std::uint32_t>& blocks, std::size_t from, std::uint32_t used,
          std::vector<std::uint32_t>& current, std::vector<std::uint32_t>& best) {
  if (current.size() > best.size()) best = current;
  for (std::size_t j = from; j < blocks.size(); ++j) {
    if (current.size() + (blocks.size() - j) <= best.size()) break;
    if (blocks[j] & used) continue;
    current.push_back(blocks[j]);
    pack(blocks, j + 1, used | blocks[j], current, best);
    current.pop_back();
  }
}

int dtd_rec(const TruthTable& f, std::vector<std::int8_t>& memo,
            const std::vector<std::uint32_t>& pow3, std::uint32_t pattern,
            std::uint32_t fixed_ones, std::uint32_t free_mask) {
  std::int8_t& slot = memo[pattern];
  if (slot >= 0) return slot;

  bool first = f.at(fixed_ones);
  bool constant = true;
  for (std::uint32_t sub = free_mask; sub != 0; sub = (sub - 1) & free_mask) {
    if (f.at(fixed_ones | sub) != first) {
      constant = false;
      break;
    }
  }
  if (constant) return slot = 0;

  int best = f.num_vars() + 1;
  for (int i = 0; i < f.num_vars(); ++i) {
    std::uint32_t bit = std::uint32_t{1} << i;
    if (!(free_mask & bit)) continue;
    // Pattern digit i goes from * (2) to the queried value.
    std::uint32_t p0 = pattern - 2 * pow3[i];
    int d0 = dtd_rec(f, memo, pow3, p0, fixed_ones, free_mask ^ bit);
    int d1 = dtd_rec(f, memo, pow3, p0 + pow3[i], fixed_ones | bit, free_mask ^ bit);
    best = std::min(best, 1 + std::max(d0, d1));
  }
  return slot = static_cast<std::int8_t>(best);
}

}  // namespace

int sensitivity_at(const TruthTable& f, std::uint32_t x) {
  bool fx = f.at(x);
  int count = 0;
  for (int i = 0; i < f.num_vars(); ++i)
    if (f.at(x ^ (std::uint32_t{1} << i)) != fx) ++count;
  return count;
}

SensitivityResult sensitivity(const TruthTable& f) {
  SensitivityResult result;
  for (std::uint32_t x = 0; x < f.size(); ++x) {
    int s = sensitivity_at(f, x);
    if (s > result.value) {
      result.value = s;
      result.witness = x;
    }
  }
  return result;
}

BlockSensitivityResult block_sensitivity_at(const TruthTable& f, std::uint32_t x) {
  auto blocks = minimal_sensitive_blocks(f, x);
  std::vector<std::uint32_t> current, best;
  pack(blocks, 0, 0, current, best);
  return {static_cast<int>(best.size()), {x, std::move(best)}};
}

BlockSensitivityResult block_sensitivity(const TruthTable& f) {
  if (f.num_vars() > kMaxVarsBlockSensitivity)
    throw std::invalid_argument("exact block sensitivity capped at n <= 16");
  BlockSensitivityResult result;
  result.witness.x = 0;
  for (std::uint32_t x = 0; x < f.size(); ++x) {
    auto local = block_sensitivity_at(f, x);
    if (local.value > result.value) result = std::move(local);
  }
  return result;
}

int decision_tree_depth(const TruthTable& f) {
  int n = f.num_vars();
  if (n > kMaxVarsDecisionTree)
    throw std::invalid_argument("decision tree depth capped at n <= 10");
  std::vector<std::uint32_t> pow3(n + 1);
  pow3[0] = 1;
  for (int i = 1; i <= n; ++i) pow3[i] = pow3[i - 1] * 3;
  std::vector<std::int8_t> memo(pow3[n], -1);
  std::uint32_t all_free = pow3[n] - 1;  // every digit = 2
  std::uint32_t free_mask = f.size() - 1;
  return dtd_rec(f, memo, pow3, all_free, 0, free_mask);
}

ReductionResult reduce_fully_sensitive(const TruthTable& f) {
  if (f.is_constant())
    throw std::invalid_argument("cannot reduce a constant function");
  auto bs = block_sensitivity(f);
  ReductionRecord record{bs.witness, f.at(bs.witness.x)};
  const TruthTable base = record.complemented ? f.complemented() : f;

  int t = bs.value;
  TruthTable reduced(t);
  for (std::uint32_t y = 0; y < reduced.size(); ++y) {
    std::uint32_t z = bs.witness.x;
    for (int i = 0; i < t; ++i)
      if (y >> i & 1) z ^= bs.witness.blocks[i];
    reduced.set(y, base.at(z));
  }
  return {std::move(reduced), std::move(record)};
}

MeasureSet compute_measures(const TruthTable& f) {
  MeasureSet m;
  m.d = degree(f);
  m.s = sensitivity(f).value;
  auto bs = block_sensitivity(f);
  m.bs = bs.value;
  m.bs_witness = std::move(bs.witness);
  m.D = decision_tree_depth(f);
  return m;
}

}  // namespace boolfn
