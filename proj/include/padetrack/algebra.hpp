#pragma once

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace padetrack {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

namespace algebra {

/// Singular values of a square matrix in descending order.
/// Throws InvalidArgument for non-square or non-finite input.
RealVector singular_values(const ComplexMatrix& a);

/// LU factorization with partial pivoting. Construction throws SingularMatrix
/// when a pivot has modulus below kSingularPivot.
class LuFactorization {
 public:
  static constexpr double kSingularPivot = 1e-300;

  explicit LuFactorization(const ComplexMatrix& a);

  ComplexVector solve(const ComplexVector& b) const;
  ComplexMatrix solve(const ComplexMatrix& b) const;
  Complex determinant() const;
  Eigen::Index size() const { return lu_.rows(); }

 private:
  Eigen::PartialPivLU<ComplexMatrix> lu_;
};

ComplexVector lu_solve(const ComplexMatrix& a, const ComplexVector& b);
ComplexMatrix lu_solve(const ComplexMatrix& a, const ComplexMatrix& b);

/// Roots of q[0] + q[1] t + ... + q[M] t^M with q[0] == 1.
///
/// Trailing zero coefficients are dropped first, so the number of roots is the
/// effective degree. Degrees one and two use closed forms (the quadratic takes
/// the larger root first and recovers the other from the root product); higher
/// degrees go through the eigenvalues of the companion matrix.
std::vector<Complex> poly_roots(std::span<const Complex> q);

/// Ratio of extreme singular values; +inf for an exactly singular matrix.
double condition_number(const ComplexMatrix& a);

}  // namespace algebra
}  // namespace padetrack
