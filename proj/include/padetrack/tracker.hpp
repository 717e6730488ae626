#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "padetrack/newton.hpp"
#include "padetrack/pade.hpp"
#include "padetrack/polysys.hpp"

namespace padetrack {

struct TrackerConfig {
  int L = 5;
  int M = 1;
  double beta1 = 0.005;
  double beta2 = 0.5;
  double t_end_game = 1.0;
  double max_step = 0.5;
  double min_step = 1e-20;
  double corrector_tol = 1e-12;
  int corrector_max_iters = 4;
  int max_steps_per_path = 10000;
  /// Below this error-coefficient norm the curvature step is set to one.
  double eta_floor = 1e-30;

  /// Throws InvalidArgument when a field is out of range.
  void validate() const;
};

enum class PathStatus { kSuccess, kCorrectorFailure, kStepUnderflow, kStepBudgetExhausted, kSingularEndpoint };

std::string to_string(PathStatus status);
PathStatus path_status_from_string(const std::string& name);

struct PathResult {
  ComplexVector endpoint;
  PathStatus status = PathStatus::kSuccess;
  int steps = 0;
  double residual = 0.0;
  double min_step = 0.0;
  double max_step = 0.0;
  /// Accepted steps whose size was set by the curvature criterion.
  int dt1_binding_steps = 0;

  double dt1_binding_fraction() const { return steps > 0 ? static_cast<double>(dt1_binding_steps) / steps : 0.0; }
};

struct Prediction {
  ComplexVector predicted;
  double dt = 0.0;
  double dt1 = 0.0;
  double dt2 = 0.0;
  double eta = 0.0;
  double error_norm = 0.0;
  bool dt1_binding = false;
  PadeBundle bundle;
};

struct SolveSet {
  Homotopy homotopy;
  std::vector<ComplexVector> starts;
  Complex gamma;
};

struct EndpointRefinement {
  ComplexVector point;
  PathStatus status = PathStatus::kSuccess;
  double residual = 0.0;
  double condition = 0.0;
};

namespace tracker {

inline constexpr double kSuccessResidual = 1e-9;
inline constexpr double kSingularCondition = 1e12;
inline constexpr int kMaxHalvings = 5;
inline constexpr int kRefineIterations = 6;

/// Estimated distance from z to the nearest other solution of H(., t):
/// 2 sigma_min(J) / sqrt(sum_i sigma_max(Hessian_i)^2). +inf when every
/// Hessian vanishes.
double eta(const Homotopy& h, const ComplexVector& z, Complex t);

/// Scale-free conditioning of a solution: the larger of sigma_max(J) /
/// sigma_min(J) and (1 + |z|) sqrt(sum_i sigma_max(Hessian_i)^2) / sigma_min(J).
double condition_estimate(const Homotopy& h, const ComplexVector& z, Complex t);

/// Evaluates every approximant of the bundle at dt.
ComplexVector evaluate_bundle(const PadeBundle& bundle, double dt);

/// A priori step: series of order L + M + 2 at t_star, per-coordinate Pade
/// approximants, then dt = min(dt1, dt2, t_end_game - t_star, max_step) with
/// dt1 = (beta1 eta / |e0|)^(1/(L+M+1)) and dt2 = beta2 * (nearest pole).
/// Throws StepUnderflow when the curvature or pole bound is below min_step.
Prediction predict(const Homotopy& h, const ComplexVector& z, double t_star, const TrackerConfig& cfg);

/// Up to kRefineIterations Newton steps at t = 1. Success requires the
/// relative residual at most kSuccessResidual and condition_estimate below
/// kSingularCondition.
EndpointRefinement refine_endpoint(const Homotopy& h, const ComplexVector& z, const TrackerConfig& cfg);

/// Tracks one path from t = 0 to t_end_game and refines at t = 1. Never throws
/// for numerical trouble on the path; the status says what happened.
PathResult track_path(const Homotopy& h, const ComplexVector& z0, const TrackerConfig& cfg);

/// Tracks every start with a static block assignment over worker_count
/// threads. Results line up with starts and do not depend on worker_count.
std::vector<PathResult> track_all(const Homotopy& h, const std::vector<ComplexVector>& starts,
                                  const TrackerConfig& cfg, int worker_count = 1);

/// Relative backward error of z for the t-free system f.
double residual(const Homotopy& f, const ComplexVector& z);

/// gamma = exp(2 pi i u) with u uniform on [0, 1) from a generator seeded with seed.
Complex random_gamma(std::uint64_t seed);

/// H(x, t) = (1 - t) G(x) + gamma t F(x), G_i = x_i^{d_i} - 1, with all
/// prod d_i root-of-unity start solutions. Throws InvalidArgument when f
/// depends on t or has a polynomial of degree zero.
SolveSet total_degree_homotopy(const Homotopy& f, std::uint64_t seed);
SolveSet total_degree_homotopy(const Homotopy& f, Complex gamma);

/// Two points are the same solution when max_j |a_j - b_j| < tol (1 + max_j |a_j|).
bool same_solution(const ComplexVector& a, const ComplexVector& b, double tol = 1e-6);
/// Number of distinct points under same_solution (greedy clustering in input order).
int count_distinct(const std::vector<ComplexVector>& points, double tol = 1e-6);

}  // namespace tracker
}  // namespace padetrack
