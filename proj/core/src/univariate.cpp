#include "boolfn/univariate.hpp"

#include <stdexcept>

namespace boolfn {
namespace {
const Rational kZero = 0;

void trim(std::vector<Rational>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}
}  // namespace

UnivariatePoly::UnivariatePoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  trim(coeffs_);
}

UnivariatePoly UnivariatePoly::constant(Rational c) {
  return UnivariatePoly(std::vector<Rational>{std::move(c)});
}

int UnivariatePoly::degree() const {
  return coeffs_.empty() ? 0 : static_cast<int>(coeffs_.size()) - 1;
}

const Rational& UnivariatePoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZero;
  return coeffs_[i];
}

Rational UnivariatePoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double UnivariatePoly::eval_double(double x) const {
  double acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + to_double(*it);
  return acc;
}

UnivariatePoly UnivariatePoly::derivative(int order) const {
  if (order < 0) throw std::invalid_argument("negative derivative order");
  std::vector<Rational> c = coeffs_;
  for (int pass = 0; pass < order; ++pass) {
    if (c.size() <= 1) return {};
    std::vector<Rational> d(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i) d[i - 1] = c[i] * static_cast<int>(i);
    c = std::move(d);
  }
  return UnivariatePoly(std::move(c));
}

UnivariatePoly UnivariatePoly::operator+(const UnivariatePoly& other) const {
  std::vector<Rational> c(std::max(coeffs_.size(), other.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) c[i] += other.coeffs_[i];
  return UnivariatePoly(std::move(c));
}

UnivariatePoly UnivariatePoly::operator-(const UnivariatePoly& other) const {
  return *this + (-other);
}

UnivariatePoly UnivariatePoly::operator*(const UnivariatePoly& other) const {
  if (coeffs_.empty() || other.coeffs_.empty()) return {};
  std::vector<Rational> c(coeffs_.size() + other.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
      c[i + j] += coeffs_[i] * other.coeffs_[j];
  return UnivariatePoly(std::move(c));
}

UnivariatePoly UnivariatePoly::operator*(const Rational& scalar) const {
  std::vector<Rational> c = coeffs_;
  for (auto& x : c) x *= scalar;
  return UnivariatePoly(std::move(c));
}

UnivariatePoly UnivariatePoly::operator-() const {
  return *this * Rational(-1);
}

std::string UnivariatePoly::to_text() const {
  std::string out = "deg=" + std::to_string(degree()) + " coeffs=";
  if (coeffs_.empty()) return out + "0";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ',';
    out += to_string(coeffs_[i]);
  }
  return out;
}

UnivariatePoly compose(const UnivariatePoly& p, const UnivariatePoly& q) {
  UnivariatePoly acc;
  for (int i = p.degree(); i >= 0; --i)
    acc = acc * q + UnivariatePoly::constant(p.coeff(i));
  return acc;
}

UnivariatePoly interpolate(const std::vector<std::pair<Rational, Rational>>& points) {
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i].first == points[j].first)
        throw std::invalid_argument("duplicate abscissa " + to_string(points[i].first));
  UnivariatePoly acc;
  for (std::size_t j = 0; j < points.size(); ++j) {
    if (points[j].second == 0) continue;
    UnivariatePoly basis = UnivariatePoly::constant(1);
    Rational denom = 1;
    for (std::size_t m = 0; m < points.size(); ++m) {
      if (m == j) continue;
      basis = basis * UnivariatePoly({-points[m].first, 1});
      denom *= points[j].first - points[m].first;
    }
    acc = acc + basis * (points[j].second / denom);
  }
  return acc;
}

std::vector<Rational> forward_differences(std::vector<Rational> values) {
  std::vector<Rational> c;
  c.reserve(values.size());
  while (!values.empty()) {
    c.push_back(values.front());
    for (std::size_t i = 0; i + 1 < values.size(); ++i) values[i] = values[i + 1] - values[i];
    values.pop_back();
  }
  return c;
}

std::vector<Rational> to_binomial_basis(const UnivariatePoly& p) {
  std::vector<Rational> values(p.degree() + 1);
  for (int k = 0; k <= p.degree(); ++k) values[k] = p(Rational(k));
  return forward_differences(std::move(values));
}

std::vector<Rational> to_binomial_basis(const std::vector<Rational>& values_at_0_to_d) {
  return forward_differences(values_at_0_to_d);
}

UnivariatePoly binomial_poly(int k) {
  UnivariatePoly b = UnivariatePoly::constant(1);
  for (int i = 0; i < k; ++i)
    b = b * UnivariatePoly({Rational(-i), 1}) * Rational(1, i + 1);
  return b;
}

UnivariatePoly from_binomial_basis(const std::vector<Rational>& c) {
  UnivariatePoly acc;
  UnivariatePoly basis = UnivariatePoly::constant(1);
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k > 0)
      basis = basis * UnivariatePoly({Rational(-(static_cast<int>(k) - 1)), 1}) * Rational(1, static_cast<int>(k));
    acc = acc + basis * c[k];
  }
  return acc;
}

Rational derivative_at_zero(const std::vector<Rational>& binomial_coeffs) {
  Rational acc = 0;
  for (std::size_t k = 1; k < binomial_coeffs.size(); ++k) {
    Rational term = binomial_coeffs[k] / static_cast<int>(k);
    acc += (k % 2 == 1) ? term : -term;
  }
  return acc;
}

std::string binomial_to_text(const std::vector<Rational>& c) {
  std::vector<Rational> trimmed = c;
  trim(trimmed);
  std::string out = "deg=" + std::to_string(trimmed.empty() ? 0 : trimmed.size() - 1) + " coeffs=";
  if (trimmed.empty()) {
    out += "0";
  } else {
    for (std::size_t i = 0; i < trimmed.size(); ++i) {
      if (i) out += ',';
      out += to_string(trimmed[i]);
    }
  }
  return out + " basis=binomial";
}

}  // namespace boolfn
