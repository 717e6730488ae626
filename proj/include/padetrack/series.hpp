#pragma once

#include <limits>
#include <span>
#include <vector>

#include "padetrack/algebra.hpp"

namespace padetrack {

/// Sentinel order of the zero series.
inline constexpr int kInfiniteOrder = std::numeric_limits<int>::max();

/// Truncated power series c_0 + c_1 t + ... + c_{w-1} t^{w-1}, an element of
/// C[[t]] / t^w. The truncation order w is the coefficient count.
class Series {
 public:
  explicit Series(std::size_t w);
  explicit Series(std::vector<Complex> coefficients);
  static Series constant(Complex value, std::size_t w);

  std::size_t order_bound() const { return c_.size(); }
  std::span<const Complex> coefficients() const { return c_; }
  std::span<Complex> coefficients() { return c_; }
  Complex operator[](std::size_t i) const { return c_[i]; }
  Complex& operator[](std::size_t i) { return c_[i]; }

  /// Value of the truncated polynomial at t.
  Complex evaluate(Complex t) const;

  bool operator==(const Series&) const = default;

 private:
  std::vector<Complex> c_;
};

namespace series {

Series add(const Series& a, const Series& b);
Series sub(const Series& a, const Series& b);
Series scale(const Series& a, Complex factor);
/// Schoolbook Cauchy product truncated at the common order.
Series mul(const Series& a, const Series& b);
/// Drops coefficients of index >= w. Throws InvalidArgument if w exceeds the
/// current truncation order.
Series truncate(const Series& a, std::size_t w);

/// Numerical threshold below which a coefficient counts as zero:
/// 1e-14 * (1 + max |c_l|).
double order_threshold(std::span<const Complex> c);
/// Index of the first coefficient above order_threshold, or kInfiniteOrder.
int order(const Series& a);

// Raw kernels for callers that manage their own buffers. All spans share a
// truncation order given by out.size(); inputs may be longer.
void mul_into(std::span<const Complex> a, std::span<const Complex> b, std::span<Complex> out);
void mul_accumulate(std::span<const Complex> a, std::span<const Complex> b, Complex factor,
                    std::span<Complex> out);

}  // namespace series

/// n series sharing one truncation order, stored as an n x w coefficient
/// matrix: column l holds the vector coefficient of t^l.
class SeriesVector {
 public:
  SeriesVector(Eigen::Index n, std::size_t w);
  explicit SeriesVector(ComplexMatrix coefficients);
  static SeriesVector constant(const ComplexVector& value, std::size_t w);

  Eigen::Index size() const { return c_.rows(); }
  std::size_t order_bound() const { return static_cast<std::size_t>(c_.cols()); }

  const ComplexMatrix& coefficients() const { return c_; }
  ComplexMatrix& coefficients() { return c_; }
  auto coefficient(std::size_t l) const { return c_.col(static_cast<Eigen::Index>(l)); }
  auto coefficient(std::size_t l) { return c_.col(static_cast<Eigen::Index>(l)); }

  Series component(Eigen::Index i) const;
  void set_component(Eigen::Index i, const Series& s);
  ComplexVector evaluate(Complex t) const;
  SeriesVector truncated(std::size_t w) const;

 private:
  ComplexMatrix c_;
};

/// n x m matrix of series sharing one truncation order, stored by degree.
class SeriesMatrix {
 public:
  SeriesMatrix(Eigen::Index rows, Eigen::Index cols, std::size_t w);

  Eigen::Index rows() const { return rows_; }
  Eigen::Index cols() const { return cols_; }
  std::size_t order_bound() const { return c_.size(); }

  const ComplexMatrix& coefficient(std::size_t l) const { return c_[l]; }
  ComplexMatrix& coefficient(std::size_t l) { return c_[l]; }

  Series entry(Eigen::Index i, Eigen::Index j) const;

 private:
  Eigen::Index rows_;
  Eigen::Index cols_;
  std::vector<ComplexMatrix> c_;
};

namespace series {
/// Minimum order over the components.
int order(const SeriesVector& v);
}  // namespace series

}  // namespace padetrack
