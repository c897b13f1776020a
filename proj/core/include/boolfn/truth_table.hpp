#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace boolfn {

inline constexpr int kMaxVars = 24;

/// A Boolean function on n variables stored as a 2^n-bit table.
/// Input x is a bitmask with variable i (1-based) at bit i-1, so the table
/// index of an assignment is sum x_i * 2^(i-1) and x_1 is the least
/// significant bit.
class TruthTable {
 public:
  /// All-zero function on n variables (1 <= n <= kMaxVars).
  explicit TruthTable(int n);

  /// Builds a table from the low 2^n bits of `bits` (requires n <= 6).
  static TruthTable from_bits(int n, std::uint64_t bits);

  /// Parses the text form `n=<int> tt=<hex>`.
  static TruthTable parse(std::string_view line);

  int num_vars() const { return n_; }
  std::uint32_t size() const { return std::uint32_t{1} << n_; }

  /// Checked read; throws std::out_of_range for x >= 2^n.
  bool evaluate(std::uint32_t x) const;
  /// Unchecked read for inner loops.
  bool at(std::uint32_t x) const {
    return (words_[x >> 6] >> (x & 63)) & 1u;
  }
  void set(std::uint32_t x, bool value);

  std::uint64_t ones_count() const;
  bool is_constant() const;
  TruthTable complemented() const;
  /// Subfunction with variable `var` (0-based bit index) fixed to `value`.
  TruthTable restricted(int var, bool value) const;

  /// Hex serialization: the table read as a little-endian integer (bit i of
  /// the integer is f at index i), printed with enough digits for 2^n bits.
  std::string hex() const;
  /// Full text form, e.g. "n=3 tt=7e".
  std::string to_text() const;

  bool operator==(const TruthTable& other) const = default;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

/// A block of variables to flip, as a bitmask over {1..n}.
struct BlockFlip {
  std::uint32_t mask = 0;
};

/// Complements exactly the bits of x selected by the block.
inline std::uint32_t flip(std::uint32_t x, BlockFlip block) {
  return x ^ block.mask;
}

/// Composition: result(y) = outer(inner(block 1 of y), ..., inner(block n)),
/// where block i of y is the m consecutive bits starting at (i-1)*m.
/// Requires n*m <= kMaxVars.
TruthTable compose(const TruthTable& outer, const TruthTable& inner);

TruthTable make_or(int n);
TruthTable make_and(int n);
TruthTable make_xor(int n);
/// 1 iff the bits of the input are not all equal.
TruthTable make_nae(int n);
/// f(x) = x_index (index is 1-based).
TruthTable make_dictator(int n, int index);
TruthTable make_constant(int n, bool value);

/// Family lookup by name: "or", "and", "xor", "nae", "dictator_<i>",
/// "const0"/"zero", "const1"/"one". Throws on unknown names.
TruthTable family(std::string_view name, int n);

struct WeightProfile {
  /// ones[k] = #{x : |x| = k, f(x) = 1}, totals[k] = C(n, k), k = 0..n.
  std::vector<std::uint64_t> ones;
  std::vector<std::uint64_t> totals;
};

WeightProfile weight_profile(const TruthTable& f);

/// True when f(x) depends only on the weight of x.
bool is_symmetric(const TruthTable& f);

}  // namespace boolfn
