#pragma once

#include <limits>
#include <span>
#include <vector>

#include "padetrack/algebra.hpp"

namespace padetrack {

/// Rational function (a_0 + ... + a_L t^L) / (1 + b_1 t + ... + b_M t^M).
/// `numerator` has L + 1 entries and `denominator` M + 1 entries with
/// denominator[0] == 1; trailing entries may be zero when the fit had to drop
/// to a lower type.
struct PadeApproximant {
  int L = 0;
  int M = 0;
  std::vector<Complex> numerator;
  std::vector<Complex> denominator;
  /// Denominator degree actually used by the fit (<= M).
  int effective_M = 0;
};

/// Per-coordinate approximants of one series solution with their error
/// coefficients and the nearest pole.
struct PadeBundle {
  std::vector<PadeApproximant> approximants;
  ComplexVector error_coefficients;
  double pole_distance = std::numeric_limits<double>::infinity();
  int defect_order = 0;
};

namespace pade {

/// Relative singular value cutoff below which the denominator degree is reduced.
inline constexpr double kRankCutoff = 1e-10;
/// Poles farther out than this are treated as numerical artifacts.
inline constexpr double kPoleCutoff = 1e6;

/// Type (L, M) approximant from c_0 .. c_{L+M}.
///
/// The denominator solves sum_{j=1..M} b_j c_{L+i-j} = -c_{L+i}, i = 1..M. When
/// that Toeplitz matrix is numerically rank deficient (smallest singular value
/// below kRankCutoff times its largest, or the largest at most the order
/// threshold of c) M is reduced by one and the fit retried, down to
/// the plain Taylor polynomial at M = 0. For M = 1 the solution is the closed
/// form b_1 = -c_{L+1} / c_L, used when |c_L| exceeds the order threshold.
/// The numerator is the convolution of b and c.
PadeApproximant fit(std::span<const Complex> c, int L, int M);

/// Coefficient of t^k in p - c q with k = L + M + 1:
/// a_k - (c_k + b_1 c_{k-1} + ... + b_M c_{k-M}), a_k = 0 for k > L.
Complex error_coefficient(std::span<const Complex> c, const PadeApproximant& p);

/// Roots of the denominator, excluding those beyond kPoleCutoff.
std::vector<Complex> poles(const PadeApproximant& p);

/// Smallest pole modulus over all approximants; +inf when there is none.
double pole_distance(std::span<const PadeApproximant> approximants);

/// p(dt) / q(dt). Throws PoleEvaluation when |q(dt)| < 1e-300.
Complex evaluate(const PadeApproximant& p, Complex dt);

}  // namespace pade
}  // namespace padetrack
