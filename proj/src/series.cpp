#include "padetrack/series.hpp"

#include <algorithm>
#include <cmath>

#include "padetrack/errors.hpp"

namespace padetrack {

Series::Series(std::size_t w) : c_(w, Complex(0.0, 0.0)) {
  if (w == 0) throw InvalidArgument("series: truncation order must be positive");
}

Series::Series(std::vector<Complex> coefficients) : c_(std::move(coefficients)) {
  if (c_.empty()) throw InvalidArgument("series: truncation order must be positive");
}

Series Series::constant(Complex value, std::size_t w) {
  Series s(w);
  s.c_[0] = value;
  return s;
}

Complex Series::evaluate(Complex t) const {
  Complex acc(0.0, 0.0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

namespace series {

namespace {
void require_same_order(const Series& a, const Series& b) {
  if (a.order_bound() != b.order_bound()) {
    throw InvalidArgument("series: mismatched truncation orders");
  }
}
}  // namespace

Series add(const Series& a, const Series& b) {
  require_same_order(a, b);
  Series out = a;
  for (std::size_t i = 0; i < out.order_bound(); ++i) out[i] += b[i];
  return out;
}

Series sub(const Series& a, const Series& b) {
  require_same_order(a, b);
  Series out = a;
  for (std::size_t i = 0; i < out.order_bound(); ++i) out[i] -= b[i];
  return out;
}

Series scale(const Series& a, Complex factor) {
  Series out = a;
  for (auto& c : out.coefficients()) c *= factor;
  return out;
}

Series mul(const Series& a, const Series& b) {
  require_same_order(a, b);
  Series out(a.order_bound());
  mul_into(a.coefficients(), b.coefficients(), out.coefficients());
  return out;
}

Series truncate(const Series& a, std::size_t w) {
  if (w == 0 || w > a.order_bound()) {
    throw InvalidArgument("series: truncation order out of range");
  }
  auto c = a.coefficients();
  return Series(std::vector<Complex>(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(w)));
}

double order_threshold(std::span<const Complex> c) {
  double biggest = 0.0;
  for (const auto& v : c) biggest = std::max(biggest, std::abs(v));
  return 1e-14 * (1.0 + biggest);
}

int order(const Series& a) {
  const auto c = a.coefficients();
  const double tau = order_threshold(c);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (std::abs(c[i]) > tau) return static_cast<int>(i);
  }
  return kInfiniteOrder;
}

int order(const SeriesVector& v) {
  int best = kInfiniteOrder;
  for (Eigen::Index i = 0; i < v.size(); ++i) best = std::min(best, order(v.component(i)));
  return best;
}

void mul_into(std::span<const Complex> a, std::span<const Complex> b, std::span<Complex> out) {
  std::fill(out.begin(), out.end(), Complex(0.0, 0.0));
  mul_accumulate(a, b, Complex(1.0, 0.0), out);
}

void mul_accumulate(std::span<const Complex> a, std::span<const Complex> b, Complex factor,
                    std::span<Complex> out) {
  const std::size_t w = out.size();
  const std::size_t na = std::min(a.size(), w);
  for (std::size_t i = 0; i < na; ++i) {
    const Complex ai = factor * a[i];
    if (ai == Complex(0.0, 0.0)) continue;
    const std::size_t nb = std::min(b.size(), w - i);
    for (std::size_t j = 0; j < nb; ++j) out[i + j] += ai * b[j];
  }
}

}  // namespace series

SeriesVector::SeriesVector(Eigen::Index n, std::size_t w)
    : c_(ComplexMatrix::Zero(n, static_cast<Eigen::Index>(w))) {
  if (w == 0) throw InvalidArgument("series: truncation order must be positive");
}

SeriesVector::SeriesVector(ComplexMatrix coefficients) : c_(std::move(coefficients)) {
  if (c_.cols() == 0) throw InvalidArgument("series: truncation order must be positive");
}

SeriesVector SeriesVector::constant(const ComplexVector& value, std::size_t w) {
  SeriesVector v(value.size(), w);
  v.c_.col(0) = value;
  return v;
}

Series SeriesVector::component(Eigen::Index i) const {
  std::vector<Complex> c(static_cast<std::size_t>(c_.cols()));
  for (Eigen::Index l = 0; l < c_.cols(); ++l) c[static_cast<std::size_t>(l)] = c_(i, l);
  return Series(std::move(c));
}

void SeriesVector::set_component(Eigen::Index i, const Series& s) {
  if (s.order_bound() != order_bound()) throw InvalidArgument("series: mismatched truncation orders");
  for (Eigen::Index l = 0; l < c_.cols(); ++l) c_(i, l) = s[static_cast<std::size_t>(l)];
}

ComplexVector SeriesVector::evaluate(Complex t) const {
  ComplexVector acc = ComplexVector::Zero(c_.rows());
  for (Eigen::Index l = c_.cols() - 1; l >= 0; --l) acc = acc * t + c_.col(l);
  return acc;
}

SeriesVector SeriesVector::truncated(std::size_t w) const {
  if (w == 0 || w > order_bound()) throw InvalidArgument("series: truncation order out of range");
  return SeriesVector(ComplexMatrix(c_.leftCols(static_cast<Eigen::Index>(w))));
}

SeriesMatrix::SeriesMatrix(Eigen::Index rows, Eigen::Index cols, std::size_t w)
    : rows_(rows), cols_(cols), c_(w, ComplexMatrix::Zero(rows, cols)) {
  if (w == 0) throw InvalidArgument("series: truncation order must be positive");
}

Series SeriesMatrix::entry(Eigen::Index i, Eigen::Index j) const {
  std::vector<Complex> c(c_.size());
  for (std::size_t l = 0; l < c_.size(); ++l) c[l] = c_[l](i, j);
  return Series(std::move(c));
}

}  // namespace padetrack
