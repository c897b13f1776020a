#include "boolfn/truth_table.hpp"

#include <bit>
#include <charconv>
#include <stdexcept>

namespace boolfn {
namespace {

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

std::uint64_t binom_u64(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
  return r;
}

}  // namespace

TruthTable::TruthTable(int n) : n_(n) {
  if (n < 1 || n > kMaxVars)
    throw std::invalid_argument("truth table needs 1 <= n <= 24, got " + std::to_string(n));
  words_.assign((size() + 63) / 64, 0);
}

TruthTable TruthTable::from_bits(int n, std::uint64_t bits) {
  if (n < 1 || n > 6) throw std::invalid_argument("from_bits requires 1 <= n <= 6");
  TruthTable t(n);
  std::uint64_t mask = (n == 6) ? ~std::uint64_t{0} : ((std::uint64_t{1} << (1u << n)) - 1);
  t.words_[0] = bits & mask;
  return t;
}

bool TruthTable::evaluate(std::uint32_t x) const {
  if (x >= size()) throw std::out_of_range("input " + std::to_string(x) + " out of range for n=" + std::to_string(n_));
  return at(x);
}

void TruthTable::set(std::uint32_t x, bool value) {
  if (x >= size()) throw std::out_of_range("input out of range");
  std::uint64_t bit = std::uint64_t{1} << (x & 63);
  if (value)
    words_[x >> 6] |= bit;
  else
    words_[x >> 6] &= ~bit;
}

std::uint64_t TruthTable::ones_count() const {
  std::uint64_t total = 0;
  for (std::uint64_t w : words_) total += std::popcount(w);
  return total;
}

bool TruthTable::is_constant() const {
  std::uint64_t ones = ones_count();
  return ones == 0 || ones == size();
}

TruthTable TruthTable::complemented() const {
  TruthTable t(n_);
  for (std::size_t i = 0; i < words_.size(); ++i) t.words_[i] = ~words_[i];
  if (size() < 64) t.words_[0] &= (std::uint64_t{1} << size()) - 1;
  return t;
}

TruthTable TruthTable::restricted(int var, bool value) const {
  if (n_ < 2) throw std::invalid_argument("cannot restrict a 1-variable function");
  if (var < 0 || var >= n_) throw std::invalid_argument("variable index out of range");
  TruthTable t(n_ - 1);
  std::uint32_t low = (std::uint32_t{1} << var) - 1;
  for (std::uint32_t y = 0; y < t.size(); ++y) {
    std::uint32_t x = (y & low) | ((y & ~low) << 1) | (value ? (std::uint32_t{1} << var) : 0);
    t.set(y, at(x));
  }
  return t;
}

std::string TruthTable::hex() const {
  std::uint32_t digits = (size() + 3) / 4;
  std::string out(digits, '0');
  static const char* kHex = "0123456789abcdef";
  for (std::uint32_t d = 0; d < digits; ++d) {
    std::uint32_t nibble = (words_[d / 16] >> ((d % 16) * 4)) & 0xF;
    out[digits - 1 - d] = kHex[nibble];
  }
  return out;
}

std::string TruthTable::to_text() const {
  return "n=" + std::to_string(n_) + " tt=" + hex();
}

TruthTable TruthTable::parse(std::string_view line) {
  auto fail = [&] { throw std::invalid_argument("malformed truth table: expected 'n=<int> tt=<hex>', got '" + std::string(line) + "'"); };
  std::size_t pos = line.find_first_not_of(" \t");
  if (pos == std::string_view::npos || line.substr(pos, 2) != "n=") fail();
  pos += 2;
  int n = 0;
  auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + line.size(), n);
  if (ec != std::errc{}) fail();
  pos = static_cast<std::size_t>(ptr - line.data());
  pos = line.find_first_not_of(" \t", pos);
  if (pos == std::string_view::npos || line.substr(pos, 3) != "tt=") fail();
  pos += 3;
  std::size_t end = line.find_first_of(" \t", pos);
  std::string_view hex_str = line.substr(pos, end == std::string_view::npos ? line.size() - pos : end - pos);
  if (hex_str.empty()) fail();
  if (end != std::string_view::npos && line.find_first_not_of(" \t", end) != std::string_view::npos) fail();

  TruthTable t(n);
  std::uint32_t max_digits = (t.size() + 3) / 4;
  if (hex_str.size() > max_digits)
    throw std::invalid_argument("hex table longer than 2^n bits");
  for (std::size_t i = 0; i < hex_str.size(); ++i) {
    int v = hex_digit(hex_str[hex_str.size() - 1 - i]);
    if (v < 0) fail();
    t.words_[i / 16] |= static_cast<std::uint64_t>(v) << ((i % 16) * 4);
  }
  if (t.size() < 4 && (t.words_[0] >> t.size()) != 0)
    throw std::invalid_argument("hex table has bits beyond 2^n");
  return t;
}

TruthTable compose(const TruthTable& outer, const TruthTable& inner) {
  int n = outer.num_vars();
  int m = inner.num_vars();
  if (n * m > kMaxVars)
    throw std::invalid_argument("composition has " + std::to_string(n * m) + " variables, cap is 24");
  TruthTable result(n * m);
  std::uint32_t inner_mask = inner.size() - 1;
  for (std::uint32_t y = 0; y < result.size(); ++y) {
    std::uint32_t x = 0;
    for (int i = 0; i < n; ++i) {
      std::uint32_t block = (y >> (i * m)) & inner_mask;
      if (inner.at(block)) x |= std::uint32_t{1} << i;
    }
    result.set(y, outer.at(x));
  }
  return result;
}

TruthTable make_or(int n) {
  TruthTable t = make_constant(n, true);
  t.set(0, false);
  return t;
}

TruthTable make_and(int n) {
  TruthTable t(n);
  t.set(t.size() - 1, true);
  return t;
}

TruthTable make_xor(int n) {
  TruthTable t(n);
  for (std::uint32_t x = 0; x < t.size(); ++x) t.set(x, std::popcount(x) & 1);
  return t;
}

TruthTable make_nae(int n) {
  TruthTable t = make_constant(n, true);
  t.set(0, false);
  t.set(t.size() - 1, false);
  return t;
}

TruthTable make_dictator(int n, int index) {
  if (index < 1 || index > n) throw std::invalid_argument("dictator index out of range");
  TruthTable t(n);
  for (std::uint32_t x = 0; x < t.size(); ++x) t.set(x, (x >> (index - 1)) & 1);
  return t;
}

TruthTable make_constant(int n, bool value) {
  TruthTable t(n);
  if (value)
    for (std::uint32_t x = 0; x < t.size(); ++x) t.set(x, true);
  return t;
}

TruthTable family(std::string_view name, int n) {
  if (name == "or") return make_or(n);
  if (name == "and") return make_and(n);
  if (name == "xor") return make_xor(n);
  if (name == "nae") return make_nae(n);
  if (name == "const0" || name == "zero") return make_constant(n, false);
  if (name == "const1" || name == "one") return make_constant(n, true);
  if (name.starts_with("dictator_")) {
    int index = 0;
    auto digits = name.substr(9);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
    if (ec == std::errc{} && ptr == digits.data() + digits.size())
      return make_dictator(n, index);
  }
  throw std::invalid_argument("unknown function family '" + std::string(name) + "'");
}

WeightProfile weight_profile(const TruthTable& f) {
  int n = f.num_vars();
  WeightProfile p;
  p.ones.assign(n + 1, 0);
  p.totals.resize(n + 1);
  for (int k = 0; k <= n; ++k) p.totals[k] = binom_u64(n, k);
  for (std::uint32_t x = 0; x < f.size(); ++x)
    if (f.at(x)) ++p.ones[std::popcount(x)];
  return p;
}

bool is_symmetric(const TruthTable& f) {
  int n = f.num_vars();
  std::vector<int> value(n + 1, -1);
  for (std::uint32_t x = 0; x < f.size(); ++x) {
    int w = std::popcount(x);
    int v = f.at(x) ? 1 : 0;
    if (value[w] == -1)
      value[w] = v;
    else if (value[w] != v)
      return false;
  }
  return true;
}

}  // namespace boolfn
