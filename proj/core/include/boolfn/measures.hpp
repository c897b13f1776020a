#pragma once

#include <cstdint>
#include <vector>

#include "boolfn/truth_table.hpp"

namespace boolfn {

inline constexpr int kMaxVarsBlockSensitivity = 16;
inline constexpr int kMaxVarsDecisionTree = 10;

/// A certified block-sensitivity witness: pairwise-disjoint nonempty blocks,
/// each flipping the value of f at x.
struct BsWitness {
  std::uint32_t x = 0;
  std::vector<std::uint32_t> blocks;  // sorted ascending by mask
};

struct SensitivityResult {
  int value = 0;
  std::uint32_t witness = 0;
};

/// Number of single-bit flips at x that change f.
int sensitivity_at(const TruthTable& f, std::uint32_t x);
/// Max over all inputs, with the smallest witness attaining it.
SensitivityResult sensitivity(const TruthTable& f);

struct BlockSensitivityResult {
  int value = 0;
  BsWitness witness;
};

/// Exact local block sensitivity at x. The search packs minimal sensitive
/// blocks only: every sensitive block contains a minimal one, and shrinking
/// blocks preserves disjointness, so the optimum is unchanged (finite
/// descent). Among maximum packings the lexicographically smallest sorted
/// block list is returned.
BlockSensitivityResult block_sensitivity_at(const TruthTable& f, std::uint32_t x);

/// Exact block sensitivity, n <= 16. Witness ties break toward the smallest
/// x, then the lexicographically smallest sorted block list.
BlockSensitivityResult block_sensitivity(const TruthTable& f);

/// Worst-case adaptive query count; memoized over restriction patterns in
/// {0,1,*}^n, so n <= 10.
int decision_tree_depth(const TruthTable& f);

struct ReductionRecord {
  BsWitness witness;
  bool complemented = false;  // true when f(witness.x) = 1
};

struct ReductionResult {
  TruthTable function;  // on bs(f) variables, fully sensitive at 0
  ReductionRecord record;
};

/// Builds g(y) = f*(x xor y_1 S_1 xor ... xor y_t S_t) from the block
/// sensitivity witness, complementing f first when f(x) = 1. The output
/// satisfies g(0) = 0, s(g, 0) = bs(f) and degree(g) <= degree(f).
/// Throws for constant f.
ReductionResult reduce_fully_sensitive(const TruthTable& f);

struct MeasureSet {
  int d = 0;   // polynomial degree
  int s = 0;   // sensitivity
  int bs = 0;  // block sensitivity
  int D = 0;   // decision-tree depth
  BsWitness bs_witness;
};

/// All integer measures at once (subject to the caps above).
MeasureSet compute_measures(const TruthTable& f);

}  // namespace boolfn
