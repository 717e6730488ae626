#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "padetrack/io.hpp"
#include "padetrack/tracker.hpp"

namespace padetrack::experiments {

// Test problems.

/// x^2 - (t - 1/2)^2 - p^2, whose two paths +-sqrt((t - 1/2)^2 + p^2) pass
/// within 2p of each other at t = 1/2.
Homotopy hyperbola(double p);
std::vector<ComplexVector> hyperbola_starts(double p);
/// prod_{i=1..d} (x - i), expanded.
Homotopy wilkinson(int d);
/// n dense equations of degree d in n variables; real and imaginary parts of
/// every coefficient are standard normal draws from a generator seeded with seed.
Homotopy generic_system(int n, int d, std::uint64_t seed);
/// Katsura-n in the n + 1 unknowns x_0 .. x_n; 2^n isolated solutions.
Homotopy katsura(int n);
/// Monic polynomial with the given roots, lowest degree first.
std::vector<Complex> poly_from_roots(const std::vector<Complex>& roots);
/// Univariate polynomial sum_k c_k x^k as a one-equation system.
HomotopyPoly univariate(const std::vector<Complex>& coefficients);

struct ClusterProblem {
  SolveSet solve_set;
  /// The random target F (degree n_c * CS) in one variable.
  Homotopy target;
  std::vector<Complex> cluster_roots;
  Complex gamma1;
  Complex gamma2;
};

/// (1 - t)(1/2 - t) G + gamma1 t (1 - t) E + gamma2 t (1/2 - t) F with
/// G = x^d - 1, E = prod (x - z_ij), z_ij = c_i + alpha u^(1/CS) e^(2 pi i (j-1)/CS),
/// c_i = e^(2 pi i (i-1)/n_c), u = 2^-52 and F random of degree d = n_c CS.
ClusterProblem cluster_problem(int n_c, int cluster_size, double alpha, std::uint64_t seed);

// Harness runs.

struct HyperbolaCase {
  int k = 0;
  double p = 0.0;
  bool jumped = false;
  double max_error = 0.0;
  double min_step = 0.0;
  int max_steps = 0;
  std::vector<PathResult> paths;
};
std::vector<HyperbolaCase> run_hyperbola(const std::vector<int>& ks, const TrackerConfig& cfg);

struct SolveCase {
  std::string label;
  int paths = 0;
  int distinct_success = 0;
  int failures = 0;
  int min_steps = 0;
  int max_steps = 0;
  double mean_steps = 0.0;
  double max_residual = 0.0;
  double seconds = 0.0;
  std::vector<PathResult> results;
};
/// Tracks the total-degree homotopy to f and summarizes it.
SolveCase solve_summary(const std::string& label, const Homotopy& f, std::uint64_t seed, const TrackerConfig& cfg,
                        int workers);

/// Roots of W_d near d = 19 have condition numbers around 1e13, so even the
/// exact roots of the double-rounded coefficients sit ~1e-5 from the integers.
inline constexpr double kWilkinsonRootTol = 1e-3;

struct WilkinsonCase {
  int d = 0;
  SolveCase solve;
  /// Every root 1..d matched by some successful endpoint within kWilkinsonRootTol.
  bool all_roots = false;
};
std::vector<WilkinsonCase> run_wilkinson(const std::vector<int>& ds, std::uint64_t seed, const TrackerConfig& cfg,
                                         int workers);

struct GenericCase {
  int n = 0;
  int d = 0;
  std::uint64_t seed = 0;
  SolveCase solve;
};
GenericCase run_generic(int n, int d, std::uint64_t seed, const TrackerConfig& cfg, int workers);

struct ClusterCase {
  int n_c = 0;
  int cluster_size = 0;
  double alpha = 0.0;
  std::vector<double> success_rates;
  double average_success_rate = 0.0;
};
/// Trial i uses seed + i. The roots of F come from a separate reference run
/// with max_step 0.1; a root counts when a successful endpoint lies within
/// match_tol (relative) of it.
ClusterCase run_cluster(int n_c, int cluster_size, double alpha, int trials, std::uint64_t seed,
                        const TrackerConfig& cfg, int workers, double match_tol = 1e-6);

io::json to_json(const std::vector<HyperbolaCase>& cases);
io::json to_json(const std::vector<WilkinsonCase>& cases);
io::json to_json(const std::vector<GenericCase>& cases);
io::json to_json(const std::vector<ClusterCase>& cases);

std::string format_table(const std::vector<HyperbolaCase>& cases);
std::string format_table(const std::vector<WilkinsonCase>& cases);
std::string format_table(const std::vector<GenericCase>& cases);
std::string format_table(const std::vector<ClusterCase>& cases);

}  // namespace padetrack::experiments
