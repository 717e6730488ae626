#pragma once

#include <vector>

#include "padetrack/polysys.hpp"
#include "padetrack/series.hpp"

namespace padetrack {

struct SeriesSolveReport {
  SeriesVector series;
  int iterations = 0;
  /// Truncation order reached after each iteration.
  std::vector<std::size_t> update_orders;
  std::size_t achieved_order = 0;
};

struct CorrectorReport {
  ComplexVector point;
  bool converged = false;
  bool singular = false;
  int iterations = 0;
  double update_norm = 0.0;
  double residual = 0.0;
};

namespace newton {

/// Residual threshold for a usable expansion point.
inline constexpr double kStartResidualTolerance = 1e-8;

/// One Newton step on series for H(x, t_offset + s) = 0.
///
/// Solves J_0 d_l + J_1 d_{l-1} + ... + J_l d_0 = -H_l for l = first .. w - 1 by
/// block back-substitution with one LU factorization of J_0, leaves d_l = 0
/// below `first`, and returns x + d truncated at w. `first` = 0 is the plain
/// Newton iteration; a larger value skips degrees that are already exact.
SeriesVector series_newton_step(const Homotopy& h, Complex t_offset, const SeriesVector& x, std::size_t w,
                                std::size_t first = 0);

/// Power series solution of H(x, t_star + s) = 0 through z0, accurate to
/// order w. Runs ceil(log2 w) steps with truncations 2, 4, 8, ... capped at w.
/// Throws InvalidStart when the relative residual of z0 exceeds
/// kStartResidualTolerance and SingularJacobian when J_H(z0, t_star) is singular.
SeriesSolveReport compute_series(const Homotopy& h, Complex t_star, std::size_t w, const ComplexVector& z0);

/// Newton corrector at fixed t. Takes at least one step; stops as soon as the
/// relative residual is at most tol or the update is below tol * (1 + |z|).
/// `converged` is set only when the final residual is at most tol.
CorrectorReport correct(const Homotopy& h, const ComplexVector& z, Complex t, double tol, int max_iters);

}  // namespace newton
}  // namespace padetrack
