#include "boolfn/multilinear.hpp"

#include <bit>
#include <vector>

namespace boolfn {
namespace {
const Rational kZero = 0;

// In-place subset Moebius pass; coefficients of a 0/1 table fit in int64
// (|c_S| <= 2^|S|, n <= 24).
std::vector<std::int64_t> moebius_ints(const TruthTable& f) {
  std::vector<std::int64_t> a(f.size());
  for (std::uint32_t x = 0; x < f.size(); ++x) a[x] = f.at(x);
  for (int i = 0; i < f.num_vars(); ++i) {
    std::uint32_t bit = std::uint32_t{1} << i;
    for (std::uint32_t s = 0; s < f.size(); ++s)
      if (s & bit) a[s] -= a[s ^ bit];
  }
  return a;
}
}  // namespace

int MultilinearPoly::degree() const {
  int d = 0;
  for (const auto& [mask, c] : terms_)
    d = std::max(d, std::popcount(mask));
  return d;
}

const Rational& MultilinearPoly::coeff(std::uint32_t mask) const {
  auto it = terms_.find(mask);
  return it == terms_.end() ? kZero : it->second;
}

void MultilinearPoly::set_coeff(std::uint32_t mask, Rational value) {
  if (value == 0)
    terms_.erase(mask);
  else
    terms_[mask] = std::move(value);
}

Rational MultilinearPoly::eval_cube(std::uint32_t x) const {
  Rational acc = 0;
  for (const auto& [mask, c] : terms_)
    if ((mask & x) == mask) acc += c;
  return acc;
}

std::string MultilinearPoly::to_string() const {
  if (terms_.empty()) return "0";
  // Order by degree, then by mask, so x1 prints before x1*x2.
  std::multimap<std::pair<int, std::uint32_t>, const Rational*> ordered;
  for (const auto& [mask, c] : terms_)
    ordered.emplace(std::make_pair(std::popcount(mask), mask), &c);
  std::string out;
  for (const auto& [key, c] : ordered) {
    Rational value = *c;
    if (out.empty()) {
      if (value < 0) {
        out += "-";
        value = -value;
      }
    } else {
      out += value < 0 ? " - " : " + ";
      if (value < 0) value = -value;
    }
    std::uint32_t mask = key.second;
    if (mask == 0) {
      out += boolfn::to_string(value);
      continue;
    }
    if (value != 1) out += boolfn::to_string(value) + "*";
    bool first = true;
    for (int i = 0; i < n_; ++i)
      if (mask >> i & 1) {
        if (!first) out += "*";
        out += "x" + std::to_string(i + 1);
        first = false;
      }
  }
  return out;
}

MultilinearPoly moebius(const TruthTable& f) {
  auto ints = moebius_ints(f);
  MultilinearPoly p(f.num_vars());
  for (std::uint32_t s = 0; s < f.size(); ++s)
    if (ints[s] != 0) p.set_coeff(s, Rational(ints[s]));
  return p;
}

int degree(const TruthTable& f) {
  auto ints = moebius_ints(f);
  int d = 0;
  for (std::uint32_t s = 0; s < f.size(); ++s)
    if (ints[s] != 0) d = std::max(d, std::popcount(s));
  return d;
}

}  // namespace boolfn
