#include "boolfn/rational.hpp"

#include <stdexcept>

namespace boolfn {

Rational parse_rational(std::string_view text) {
  auto valid = [](std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  std::string_view num = text, den;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
    if (!valid(den)) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  if (!valid(num)) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  try {
    Rational r{std::string(text)};
    if (denominator(r) == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    // mpq string construction does not canonicalize.
    mpq_canonicalize(r.backend().data());
    return r;
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
}

std::string to_string(const Rational& value) { return value.str(); }

double to_double(const Rational& value) { return value.convert_to<double>(); }

bool is_nonnegative_integer(const Rational& value) {
  return value >= 0 && denominator(value) == 1;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt odd_double_factorial(unsigned k) {
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) r *= 2 * i - 1;
  return r;
}

BigInt ceil_sqrt(const Rational& value) {
  if (value < 0) throw std::invalid_argument("ceil_sqrt of a negative value");
  BigInt m = sqrt(numerator(value) / denominator(value));
  while (m * m < value) ++m;
  while (m > 0 && (m - 1) * (m - 1) >= value) --m;
  return m;
}

}  // namespace boolfn
