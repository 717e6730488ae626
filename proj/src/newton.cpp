#include "padetrack/newton.hpp"

#include <cmath>
#include <optional>

#include "padetrack/errors.hpp"

namespace padetrack::newton {

SeriesVector series_newton_step(const Homotopy& h, Complex t_offset, const SeriesVector& x, std::size_t w,
                                std::size_t first) {
  if (w == 0 || w > x.order_bound()) throw InvalidArgument("series_newton_step: truncation out of range");
  const SeriesVector residual = polysys::evaluate_series(h, x, w, t_offset);
  const SeriesMatrix jac = polysys::jacobian_series(h, x, w, t_offset);

  std::optional<algebra::LuFactorization> lu;
  try {
    lu.emplace(jac.coefficient(0));
  } catch (const SingularMatrix&) {
    throw SingularJacobian("series_newton_step: Jacobian at the expansion point is singular");
  }

  SeriesVector out = x;
  auto& c = out.coefficients();
  for (Eigen::Index l = static_cast<Eigen::Index>(w); l < c.cols(); ++l) c.col(l).setZero();

  std::vector<ComplexVector> d(w);
  for (std::size_t l = first; l < w; ++l) {
    ComplexVector rhs = -residual.coefficient(l);
    for (std::size_t m = 1; m + first <= l; ++m) rhs -= jac.coefficient(m) * d[l - m];
    d[l] = lu->solve(rhs);
    c.col(static_cast<Eigen::Index>(l)) += d[l];
  }
  return out;
}

SeriesSolveReport compute_series(const Homotopy& h, Complex t_star, std::size_t w, const ComplexVector& z0) {
  if (w == 0) throw InvalidArgument("compute_series: truncation order must be positive");
  if (z0.size() != h.n()) throw InvalidArgument("compute_series: start point has wrong dimension");
  const double res = polysys::relative_residual(h, z0, t_star);
  if (!(res <= kStartResidualTolerance)) {
    throw InvalidStart("compute_series: start point is not a solution (residual " + std::to_string(res) + ")");
  }

  SeriesSolveReport report{SeriesVector::constant(z0, w), 0, {}, 1};
  // The constant term is already exact, so each pass only fills degrees
  // [current, next) and the error order doubles.
  std::size_t current = 1;
  while (current < w) {
    const std::size_t next = std::min(2 * current, w);
    report.series = series_newton_step(h, t_star, report.series, next, current);
    report.update_orders.push_back(next);
    ++report.iterations;
    current = next;
  }
  report.achieved_order = current;
  return report;
}

CorrectorReport correct(const Homotopy& h, const ComplexVector& z, Complex t, double tol, int max_iters) {
  CorrectorReport report;
  report.point = z;
  double previous_update = -1.0;
  int growth_events = 0;
  bool finite = true;

  for (int k = 0; k < max_iters; ++k) {
    const ComplexVector value = polysys::evaluate(h, report.point, t);
    const ComplexMatrix jac = polysys::jacobian(h, report.point, t);
    ComplexVector dz;
    try {
      dz = algebra::lu_solve(jac, ComplexVector(-value));
    } catch (const SingularMatrix&) {
      report.singular = true;
      break;
    } catch (const InvalidArgument&) {
      finite = false;
      break;
    }
    report.point += dz;
    ++report.iterations;
    report.update_norm = dz.norm();
    if (!std::isfinite(report.update_norm) || !report.point.allFinite()) {
      finite = false;
      break;
    }
    if (previous_update > 0.0 && report.update_norm > 10.0 * previous_update && ++growth_events >= 2) break;
    previous_update = report.update_norm;

    report.residual = polysys::relative_residual(h, report.point, t);
    if (report.residual <= tol || report.update_norm <= tol * (1.0 + report.point.norm())) break;
  }

  if (finite && report.point.allFinite()) {
    report.residual = polysys::relative_residual(h, report.point, t);
  } else {
    report.residual = std::numeric_limits<double>::infinity();
  }
  report.converged = finite && !report.singular && report.residual <= tol;
  return report;
}

}  // namespace padetrack::newton
