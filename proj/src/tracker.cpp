#include "padetrack/tracker.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <thread>

#include "padetrack/errors.hpp"

namespace padetrack {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

const char* const kStatusNames[] = {"success", "corrector-failure", "step-underflow", "step-budget-exhausted",
                                    "singular-endpoint"};
}  // namespace

void TrackerConfig::validate() const {
  if (L < 0 || M < 0) throw InvalidArgument("config: Pade degrees must be nonnegative");
  if (!(beta1 > 0.0 && beta1 < 1.0)) throw InvalidArgument("config: beta1 must lie in (0, 1)");
  if (!(beta2 > 0.0 && beta2 < 1.0)) throw InvalidArgument("config: beta2 must lie in (0, 1)");
  if (!(t_end_game > 0.0 && t_end_game <= 1.0)) throw InvalidArgument("config: t_end_game must lie in (0, 1]");
  if (!(min_step > 0.0 && min_step < max_step && max_step <= 1.0)) {
    throw InvalidArgument("config: need 0 < min_step < max_step <= 1");
  }
  if (!(corrector_tol > 0.0)) throw InvalidArgument("config: corrector_tol must be positive");
  if (corrector_max_iters < 1) throw InvalidArgument("config: corrector_max_iters must be at least 1");
  if (max_steps_per_path < 1) throw InvalidArgument("config: max_steps_per_path must be at least 1");
  if (!(eta_floor >= 0.0)) throw InvalidArgument("config: eta_floor must be nonnegative");
}

std::string to_string(PathStatus status) { return kStatusNames[static_cast<int>(status)]; }

PathStatus path_status_from_string(const std::string& name) {
  for (int i = 0; i < 5; ++i) {
    if (name == kStatusNames[i]) return static_cast<PathStatus>(i);
  }
  throw InvalidArgument("unknown path status '" + name + "'");
}

namespace tracker {

namespace {

double hessian_scale(const Homotopy& h, const ComplexVector& z, Complex t) {
  double sum = 0.0;
  for (const auto& hess : polysys::hessians(h, z, t)) {
    const double s = algebra::singular_values(hess)(0);
    sum += s * s;
  }
  return std::sqrt(sum);
}

}  // namespace

double eta(const Homotopy& h, const ComplexVector& z, Complex t) {
  const double curvature = hessian_scale(h, z, t);
  if (curvature == 0.0) return kInf;
  const RealVector s = algebra::singular_values(polysys::jacobian(h, z, t));
  return 2.0 * s(s.size() - 1) / curvature;
}

double condition_estimate(const Homotopy& h, const ComplexVector& z, Complex t) {
  const RealVector s = algebra::singular_values(polysys::jacobian(h, z, t));
  const double smallest = s(s.size() - 1);
  if (smallest == 0.0) return kInf;
  const double curvature = hessian_scale(h, z, t);
  return std::max(s(0) / smallest, (1.0 + z.norm()) * curvature / smallest);
}

ComplexVector evaluate_bundle(const PadeBundle& bundle, double dt) {
  ComplexVector out(static_cast<Eigen::Index>(bundle.approximants.size()));
  for (std::size_t j = 0; j < bundle.approximants.size(); ++j) {
    out(static_cast<Eigen::Index>(j)) = pade::evaluate(bundle.approximants[j], dt);
  }
  return out;
}

Prediction predict(const Homotopy& h, const ComplexVector& z, double t_star, const TrackerConfig& cfg) {
  const auto w = static_cast<std::size_t>(cfg.L + cfg.M + 2);
  const int k = cfg.L + cfg.M + 1;
  const SeriesSolveReport sol = newton::compute_series(h, t_star, w, z);

  Prediction pr;
  pr.eta = eta(h, z, t_star);
  pr.bundle.defect_order = k;
  pr.bundle.error_coefficients.resize(h.n());
  std::vector<Complex> c(w);
  for (int j = 0; j < h.n(); ++j) {
    for (std::size_t l = 0; l < w; ++l) c[l] = sol.series.coefficients()(j, static_cast<Eigen::Index>(l));
    PadeApproximant p = pade::fit(c, cfg.L, cfg.M);
    pr.bundle.error_coefficients(j) = pade::error_coefficient(c, p);
    pr.bundle.approximants.push_back(std::move(p));
  }
  pr.bundle.pole_distance = pade::pole_distance(pr.bundle.approximants);
  pr.error_norm = pr.bundle.error_coefficients.norm();

  if (pr.error_norm < cfg.eta_floor || std::isinf(pr.eta)) {
    pr.dt1 = 1.0;
  } else {
    pr.dt1 = std::pow(cfg.beta1 * pr.eta / pr.error_norm, 1.0 / k);
  }
  pr.dt2 = cfg.beta2 * pr.bundle.pole_distance;

  const double remaining = cfg.t_end_game - t_star;
  const double bound = std::min(pr.dt1, pr.dt2);
  if (!(bound >= cfg.min_step) && bound < remaining) {
    throw StepUnderflow("predict: step size " + std::to_string(bound) + " below the minimum");
  }
  pr.dt = std::min({bound, remaining, cfg.max_step});
  pr.dt1_binding = pr.dt == pr.dt1;
  pr.predicted = evaluate_bundle(pr.bundle, pr.dt);
  return pr;
}

EndpointRefinement refine_endpoint(const Homotopy& h, const ComplexVector& z, const TrackerConfig&) {
  constexpr Complex t_one(1.0, 0.0);
  EndpointRefinement out;
  out.point = z;
  for (int i = 0; i < kRefineIterations; ++i) {
    ComplexVector dz;
    try {
      dz = algebra::lu_solve(polysys::jacobian(h, out.point, t_one),
                             ComplexVector(-polysys::evaluate(h, out.point, t_one)));
    } catch (const std::exception&) {
      break;
    }
    if (!dz.allFinite()) break;
    out.point += dz;
    if (dz.norm() <= 4.0 * std::numeric_limits<double>::epsilon() * (1.0 + out.point.norm())) break;
  }
  try {
    out.residual = polysys::relative_residual(h, out.point, t_one);
    out.condition = condition_estimate(h, out.point, t_one);
  } catch (const std::exception&) {
    out.residual = kInf;
    out.condition = kInf;
  }
  const bool ok = out.residual <= kSuccessResidual && out.condition < kSingularCondition;
  out.status = ok ? PathStatus::kSuccess : PathStatus::kSingularEndpoint;
  return out;
}

namespace {

bool ill_conditioned(const Homotopy& h, const ComplexVector& z, double t) {
  try {
    return condition_estimate(h, z, t) >= kSingularCondition;
  } catch (const std::exception&) {
    return false;
  }
}

double safe_residual(const Homotopy& h, const ComplexVector& z, double t) {
  try {
    return polysys::relative_residual(h, z, t);
  } catch (const std::exception&) {
    return kInf;
  }
}

}  // namespace

PathResult track_path(const Homotopy& h, const ComplexVector& z0, const TrackerConfig& cfg) {
  cfg.validate();
  PathResult result;
  result.min_step = kInf;
  bool failed = false;
  ComplexVector z = z0;
  double t = 0.0;

  const CorrectorReport polish = newton::correct(h, z0, 0.0, cfg.corrector_tol, cfg.corrector_max_iters);
  if (polish.converged) z = polish.point;

  while (t < cfg.t_end_game) {
    if (result.steps >= cfg.max_steps_per_path) {
      result.status = PathStatus::kStepBudgetExhausted;
      failed = true;
      break;
    }
    Prediction pr;
    try {
      pr = predict(h, z, t, cfg);
    } catch (const StepUnderflow&) {
      result.status = PathStatus::kStepUnderflow;
      failed = true;
      break;
    } catch (const std::exception&) {
      result.status = PathStatus::kCorrectorFailure;
      failed = true;
      break;
    }

    double dt = pr.dt;
    bool landing = dt >= cfg.t_end_game - t;
    ComplexVector guess = pr.predicted;
    bool accepted = false;
    int halvings = 0;
    for (;;) {
      const double t_new = landing ? cfg.t_end_game : t + dt;
      CorrectorReport cr;
      try {
        cr = newton::correct(h, guess, t_new, cfg.corrector_tol, cfg.corrector_max_iters);
      } catch (const std::exception&) {
        cr.converged = false;
      }
      if (cr.converged) {
        z = cr.point;
        t = t_new;
        accepted = true;
        break;
      }
      // An ill-conditioned landing point is the endpoint refinement's business.
      if (landing && ill_conditioned(h, guess, t_new)) {
        z = guess;
        t = t_new;
        accepted = true;
        break;
      }
      if (halvings == kMaxHalvings) {
        result.status = PathStatus::kCorrectorFailure;
        break;
      }
      ++halvings;
      dt *= 0.5;
      landing = false;
      if (dt < cfg.min_step) {
        result.status = PathStatus::kStepUnderflow;
        break;
      }
      try {
        guess = evaluate_bundle(pr.bundle, dt);
      } catch (const std::exception&) {
        guess = z;
      }
    }
    if (!accepted) {
      failed = true;
      break;
    }
    ++result.steps;
    result.min_step = std::min(result.min_step, dt);
    result.max_step = std::max(result.max_step, dt);
    if (pr.dt1_binding && halvings == 0) ++result.dt1_binding_steps;
  }

  if (result.steps == 0) result.min_step = 0.0;
  if (failed) {
    result.endpoint = z;
    result.residual = safe_residual(h, z, 1.0);
    return result;
  }
  const EndpointRefinement refined = refine_endpoint(h, z, cfg);
  result.endpoint = refined.point;
  result.status = refined.status;
  result.residual = refined.residual;
  return result;
}

std::vector<PathResult> track_all(const Homotopy& h, const std::vector<ComplexVector>& starts,
                                  const TrackerConfig& cfg, int worker_count) {
  cfg.validate();
  std::vector<PathResult> results(starts.size());
  if (starts.empty()) return results;

  auto run_block = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      try {
        results[i] = track_path(h, starts[i], cfg);
      } catch (const std::exception&) {
        results[i].endpoint = starts[i];
        results[i].status = PathStatus::kCorrectorFailure;
        results[i].residual = kInf;
      }
    }
  };

  const std::size_t workers =
      std::clamp<std::size_t>(static_cast<std::size_t>(std::max(worker_count, 1)), 1, starts.size());
  if (workers == 1) {
    run_block(0, starts.size());
    return results;
  }
  // Static block assignment: worker w owns [w * chunk, (w + 1) * chunk).
  const std::size_t chunk = (starts.size() + workers - 1) / workers;
  std::vector<std::jthread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(starts.size(), begin + chunk);
    if (begin >= end) break;
    pool.emplace_back(run_block, begin, end);
  }
  pool.clear();
  return results;
}

double residual(const Homotopy& f, const ComplexVector& z) { return polysys::relative_residual(f, z, 0.0); }

Complex random_gamma(std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return std::polar(1.0, 2.0 * std::numbers::pi * u(gen));
}

SolveSet total_degree_homotopy(const Homotopy& f, std::uint64_t seed) {
  return total_degree_homotopy(f, random_gamma(seed));
}

SolveSet total_degree_homotopy(const Homotopy& f, Complex gamma) {
  if (f.max_t_degree() != 0) throw InvalidArgument("total_degree_homotopy: target must not depend on t");
  const int n = f.n();
  const std::vector<int> degrees = f.degrees();
  for (int i = 0; i < n; ++i) {
    if (f.polys()[static_cast<std::size_t>(i)].terms.empty()) {
      throw InvalidArgument("total_degree_homotopy: polynomial " + std::to_string(i) + " is zero");
    }
    if (degrees[static_cast<std::size_t>(i)] < 1) {
      throw InvalidArgument("total_degree_homotopy: polynomial " + std::to_string(i) + " is constant");
    }
  }

  const std::vector<Complex> one_minus_t{1.0, -1.0};
  const std::vector<Complex> gamma_t{0.0, gamma};
  std::vector<HomotopyPoly> polys;
  for (int i = 0; i < n; ++i) {
    HomotopyPoly g;
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] = degrees[static_cast<std::size_t>(i)];
    g.terms.push_back({1.0, e, 0});
    g.terms.push_back({-1.0, std::vector<int>(static_cast<std::size_t>(n), 0), 0});
    polys.push_back(polysys::sum(polysys::multiply_by_t_polynomial(g, one_minus_t),
                                 polysys::multiply_by_t_polynomial(f.polys()[static_cast<std::size_t>(i)], gamma_t)));
  }

  SolveSet set{Homotopy(n, std::move(polys), f.toric()), {}, gamma};
  std::vector<int> digit(static_cast<std::size_t>(n), 0);
  for (;;) {
    ComplexVector s(n);
    for (int j = 0; j < n; ++j) {
      const auto uj = static_cast<std::size_t>(j);
      s(j) = std::polar(1.0, 2.0 * std::numbers::pi * digit[uj] / degrees[uj]);
    }
    set.starts.push_back(std::move(s));
    int j = n - 1;
    while (j >= 0 && ++digit[static_cast<std::size_t>(j)] == degrees[static_cast<std::size_t>(j)]) {
      digit[static_cast<std::size_t>(j)] = 0;
      --j;
    }
    if (j < 0) break;
  }
  return set;
}

bool same_solution(const ComplexVector& a, const ComplexVector& b, double tol) {
  if (a.size() != b.size()) return false;
  const double scale = 1.0 + a.cwiseAbs().maxCoeff();
  return (a - b).cwiseAbs().maxCoeff() < tol * scale;
}

int count_distinct(const std::vector<ComplexVector>& points, double tol) {
  std::vector<const ComplexVector*> reps;
  for (const auto& p : points) {
    const bool seen = std::any_of(reps.begin(), reps.end(), [&](const ComplexVector* r) { return same_solution(*r, p, tol); });
    if (!seen) reps.push_back(&p);
  }
  return static_cast<int>(reps.size());
}

}  // namespace tracker
}  // namespace padetrack
