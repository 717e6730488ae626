#include "padetrack/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "padetrack/errors.hpp"

namespace padetrack::algebra {

namespace {

void require_square_finite(const ComplexMatrix& a, const char* what) {
  if (a.rows() != a.cols() || a.rows() == 0) {
    throw InvalidArgument(std::string(what) + ": matrix must be square and non-empty");
  }
  if (!a.allFinite()) {
    throw InvalidArgument(std::string(what) + ": matrix has non-finite entries");
  }
}

}  // namespace

RealVector singular_values(const ComplexMatrix& a) {
  require_square_finite(a, "singular_values");
  // JacobiSVD already sorts in decreasing order.
  Eigen::JacobiSVD<ComplexMatrix> svd(a);
  return svd.singularValues();
}

double condition_number(const ComplexMatrix& a) {
  const RealVector s = singular_values(a);
  const double smallest = s(s.size() - 1);
  if (smallest == 0.0) return std::numeric_limits<double>::infinity();
  return s(0) / smallest;
}

LuFactorization::LuFactorization(const ComplexMatrix& a) {
  require_square_finite(a, "lu_solve");
  lu_.compute(a);
  const auto& packed = lu_.matrixLU();
  for (Eigen::Index i = 0; i < packed.rows(); ++i) {
    if (std::abs(packed(i, i)) < kSingularPivot) {
      throw SingularMatrix("lu_solve: matrix is numerically singular");
    }
  }
}

ComplexVector LuFactorization::solve(const ComplexVector& b) const {
  if (b.size() != lu_.rows()) throw InvalidArgument("lu_solve: right-hand side has wrong length");
  return lu_.solve(b);
}

ComplexMatrix LuFactorization::solve(const ComplexMatrix& b) const {
  if (b.rows() != lu_.rows()) throw InvalidArgument("lu_solve: right-hand side has wrong row count");
  return lu_.solve(b);
}

Complex LuFactorization::determinant() const { return lu_.determinant(); }

ComplexVector lu_solve(const ComplexMatrix& a, const ComplexVector& b) {
  return LuFactorization(a).solve(b);
}

ComplexMatrix lu_solve(const ComplexMatrix& a, const ComplexMatrix& b) {
  return LuFactorization(a).solve(b);
}

std::vector<Complex> poly_roots(std::span<const Complex> q) {
  if (q.empty() || q[0] != Complex(1.0, 0.0)) {
    throw InvalidArgument("poly_roots: constant coefficient must be exactly 1");
  }
  std::size_t degree = q.size() - 1;
  while (degree > 0 && q[degree] == Complex(0.0, 0.0)) --degree;

  if (degree == 0) return {};
  if (degree == 1) return {-q[0] / q[1]};
  if (degree == 2) {
    const Complex disc = std::sqrt(q[1] * q[1] - 4.0 * q[2] * q[0]);
    // Pick the sign that avoids cancellation in -q1 -/+ sqrt(disc).
    const Complex plus = -q[1] + disc;
    const Complex minus = -q[1] - disc;
    const Complex big = std::abs(plus) >= std::abs(minus) ? plus : minus;
    const Complex r1 = big / (2.0 * q[2]);
    const Complex r2 = q[0] / (q[2] * r1);
    return {r1, r2};
  }

  const auto d = static_cast<Eigen::Index>(degree);
  ComplexMatrix companion = ComplexMatrix::Zero(d, d);
  for (Eigen::Index i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
  for (Eigen::Index i = 0; i < d; ++i) companion(i, d - 1) = -q[i] / q[degree];
  Eigen::ComplexEigenSolver<ComplexMatrix> solver(companion, /*computeEigenvectors=*/false);
  const ComplexVector ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

}  // namespace padetrack::algebra
