#include "padetrack/experiments.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>

#include "padetrack/errors.hpp"

namespace padetrack::experiments {

namespace {

std::string printf_line(const char* fmt, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, fmt, args...);
  return buf;
}

Complex standard_normal_complex(std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  const double re = normal(rng);
  const double im = normal(rng);
  return {re, im};
}

Complex unit_complex(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  return std::polar(1.0, 2.0 * std::numbers::pi * uniform(rng));
}

// All exponent vectors of total degree <= d in n variables, graded.
void enumerate_monomials(int n, int d, std::vector<int>& current, int var, int budget,
                         std::vector<std::vector<int>>& out) {
  if (var == n) {
    out.push_back(current);
    return;
  }
  for (int e = 0; e <= budget; ++e) {
    current[static_cast<std::size_t>(var)] = e;
    enumerate_monomials(n, d, current, var + 1, budget - e, out);
  }
  current[static_cast<std::size_t>(var)] = 0;
}

bool matches(const std::vector<PathResult>& results, const ComplexVector& root, double tol) {
  for (const auto& r : results) {
    if (r.status == PathStatus::kSuccess && tracker::same_solution(root, r.endpoint, tol)) return true;
  }
  return false;
}

io::json path_summary(const SolveCase& s) {
  return {{"label", s.label},         {"paths", s.paths},
          {"distinct_success", s.distinct_success}, {"failures", s.failures},
          {"min_steps", s.min_steps}, {"max_steps", s.max_steps},
          {"mean_steps", s.mean_steps}, {"max_residual", s.max_residual},
          {"seconds", s.seconds}};
}

}  // namespace

HomotopyPoly univariate(const std::vector<Complex>& coefficients) {
  HomotopyPoly p;
  for (std::size_t k = 0; k < coefficients.size(); ++k) {
    if (coefficients[k] != Complex(0.0, 0.0)) p.terms.push_back({coefficients[k], {static_cast<int>(k)}, 0});
  }
  return p;
}

std::vector<Complex> poly_from_roots(const std::vector<Complex>& roots) {
  std::vector<Complex> c{1.0};
  for (const auto& r : roots) {
    std::vector<Complex> next(c.size() + 1, Complex(0.0, 0.0));
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k + 1] += c[k];
      next[k] -= r * c[k];
    }
    c = std::move(next);
  }
  return c;
}

Homotopy hyperbola(double p) {
  // x^2 - t^2 + t - 1/4 - p^2
  HomotopyPoly h;
  h.terms = {{1.0, {2}, 0}, {-1.0, {0}, 2}, {1.0, {0}, 1}, {-(0.25 + p * p), {0}, 0}};
  return Homotopy(1, {h});
}

std::vector<ComplexVector> hyperbola_starts(double p) {
  const double r = std::sqrt(0.25 + p * p);
  ComplexVector plus(1), minus(1);
  plus(0) = r;
  minus(0) = -r;
  return {plus, minus};
}

Homotopy wilkinson(int d) {
  if (d < 1) throw InvalidArgument("wilkinson: degree must be positive");
  std::vector<Complex> roots;
  for (int i = 1; i <= d; ++i) roots.emplace_back(i, 0.0);
  return Homotopy(1, {univariate(poly_from_roots(roots))});
}

Homotopy generic_system(int n, int d, std::uint64_t seed) {
  if (n < 1 || d < 1) throw InvalidArgument("generic_system: n and d must be positive");
  std::vector<std::vector<int>> support;
  std::vector<int> current(static_cast<std::size_t>(n), 0);
  enumerate_monomials(n, d, current, 0, d, support);
  std::mt19937_64 rng(seed);
  std::vector<HomotopyPoly> polys;
  for (int i = 0; i < n; ++i) {
    HomotopyPoly p;
    for (const auto& e : support) p.terms.push_back({standard_normal_complex(rng), e, 0});
    polys.push_back(std::move(p));
  }
  return Homotopy(n, std::move(polys));
}

Homotopy katsura(int n) {
  if (n < 1) throw InvalidArgument("katsura: n must be positive");
  const int vars = n + 1;
  auto monomial = [vars](Complex c, int a, int b) {
    std::vector<int> e(static_cast<std::size_t>(vars), 0);
    if (a >= 0) ++e[static_cast<std::size_t>(a)];
    if (b >= 0) ++e[static_cast<std::size_t>(b)];
    return Monomial{c, e, 0};
  };
  std::vector<HomotopyPoly> polys;
  HomotopyPoly linear;
  linear.terms.push_back(monomial(1.0, 0, -1));
  for (int i = 1; i <= n; ++i) linear.terms.push_back(monomial(2.0, i, -1));
  linear.terms.push_back(monomial(-1.0, -1, -1));
  polys.push_back(std::move(linear));
  for (int m = 0; m < n; ++m) {
    HomotopyPoly q;
    for (int l = -n; l <= n; ++l) {
      const int a = std::abs(l);
      const int b = std::abs(m - l);
      if (a <= n && b <= n) q.terms.push_back(monomial(1.0, a, b));
    }
    q.terms.push_back(monomial(-1.0, m, -1));
    polys.push_back(std::move(q));
  }
  return Homotopy(vars, std::move(polys));
}

ClusterProblem cluster_problem(int n_c, int cluster_size, double alpha, std::uint64_t seed) {
  if (n_c < 1 || cluster_size < 1 || !(alpha > 0.0)) throw InvalidArgument("cluster: invalid parameters");
  const int d = n_c * cluster_size;
  const double u = std::ldexp(1.0, -52);
  const double radius = alpha * std::pow(u, 1.0 / cluster_size);

  std::vector<Complex> cluster_roots;
  for (int i = 0; i < n_c; ++i) {
    const Complex c = std::polar(1.0, 2.0 * std::numbers::pi * i / n_c);
    for (int j = 0; j < cluster_size; ++j) {
      cluster_roots.push_back(c + std::polar(radius, 2.0 * std::numbers::pi * j / cluster_size));
    }
  }

  std::mt19937_64 rng(seed);
  std::vector<Complex> f(static_cast<std::size_t>(d) + 1);
  for (auto& c : f) c = standard_normal_complex(rng);
  const Complex gamma1 = unit_complex(rng);
  const Complex gamma2 = unit_complex(rng);

  std::vector<Complex> g(static_cast<std::size_t>(d) + 1, Complex(0.0, 0.0));
  g.front() = -1.0;
  g.back() = 1.0;
  const HomotopyPoly gp = univariate(g);
  const HomotopyPoly ep = univariate(poly_from_roots(cluster_roots));
  const HomotopyPoly fp = univariate(f);

  // (1 - t)(1/2 - t) = 1/2 - 3t/2 + t^2, t(1 - t) = t - t^2, t(1/2 - t) = t/2 - t^2.
  const std::vector<Complex> wg{0.5, -1.5, 1.0};
  const std::vector<Complex> we{0.0, gamma1, -gamma1};
  const std::vector<Complex> wf{0.0, 0.5 * gamma2, -gamma2};
  HomotopyPoly h = polysys::sum(polysys::multiply_by_t_polynomial(gp, wg),
                                polysys::sum(polysys::multiply_by_t_polynomial(ep, we),
                                             polysys::multiply_by_t_polynomial(fp, wf)));

  std::vector<ComplexVector> starts;
  for (int k = 0; k < d; ++k) {
    ComplexVector s(1);
    s(0) = std::polar(1.0, 2.0 * std::numbers::pi * k / d);
    starts.push_back(std::move(s));
  }
  return ClusterProblem{SolveSet{Homotopy(1, {h}), std::move(starts), gamma2}, Homotopy(1, {fp}),
                        std::move(cluster_roots), gamma1, gamma2};
}

std::vector<HyperbolaCase> run_hyperbola(const std::vector<int>& ks, const TrackerConfig& cfg) {
  std::vector<HyperbolaCase> cases;
  for (int k : ks) {
    if (k < 0) throw InvalidArgument("hyperbola: k must be nonnegative");
    HyperbolaCase c;
    c.k = k;
    c.p = std::pow(10.0, -k);
    const Homotopy h = hyperbola(c.p);
    const auto starts = hyperbola_starts(c.p);
    c.min_step = std::numeric_limits<double>::infinity();
    for (const auto& s : starts) {
      PathResult r = tracker::track_path(h, s, cfg);
      const double expected = s(0).real();
      const double err = r.status == PathStatus::kSuccess ? std::abs(r.endpoint(0) - expected)
                                                          : std::numeric_limits<double>::infinity();
      c.max_error = std::max(c.max_error, err);
      if (!(r.endpoint(0).real() * expected > 0.0)) c.jumped = true;
      c.min_step = std::min(c.min_step, r.min_step);
      c.max_steps = std::max(c.max_steps, r.steps);
      c.paths.push_back(std::move(r));
    }
    cases.push_back(std::move(c));
  }
  return cases;
}

SolveCase solve_summary(const std::string& label, const Homotopy& f, std::uint64_t seed, const TrackerConfig& cfg,
                        int workers) {
  const auto start = std::chrono::steady_clock::now();
  const SolveSet set = tracker::total_degree_homotopy(f, seed);
  SolveCase s;
  s.label = label;
  s.results = tracker::track_all(set.homotopy, set.starts, cfg, workers);
  s.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  s.paths = static_cast<int>(s.results.size());
  std::vector<ComplexVector> found;
  long total_steps = 0;
  s.min_steps = std::numeric_limits<int>::max();
  for (const auto& r : s.results) {
    total_steps += r.steps;
    s.min_steps = std::min(s.min_steps, r.steps);
    s.max_steps = std::max(s.max_steps, r.steps);
    if (r.status == PathStatus::kSuccess) {
      found.push_back(r.endpoint);
      s.max_residual = std::max(s.max_residual, r.residual);
    }
  }
  if (s.results.empty()) s.min_steps = 0;
  s.distinct_success = tracker::count_distinct(found);
  s.failures = s.paths - s.distinct_success;
  s.mean_steps = s.paths > 0 ? static_cast<double>(total_steps) / s.paths : 0.0;
  return s;
}

std::vector<WilkinsonCase> run_wilkinson(const std::vector<int>& ds, std::uint64_t seed, const TrackerConfig& cfg,
                                         int workers) {
  std::vector<WilkinsonCase> cases;
  for (int d : ds) {
    WilkinsonCase c;
    c.d = d;
    c.solve = solve_summary("W" + std::to_string(d), wilkinson(d), seed, cfg, workers);
    c.all_roots = true;
    for (int i = 1; i <= d; ++i) {
      ComplexVector root(1);
      root(0) = static_cast<double>(i);
      if (!matches(c.solve.results, root, kWilkinsonRootTol)) c.all_roots = false;
    }
    cases.push_back(std::move(c));
  }
  return cases;
}

GenericCase run_generic(int n, int d, std::uint64_t seed, const TrackerConfig& cfg, int workers) {
  GenericCase c;
  c.n = n;
  c.d = d;
  c.seed = seed;
  c.solve = solve_summary("generic(" + std::to_string(n) + "," + std::to_string(d) + ")",
                          generic_system(n, d, seed), seed, cfg, workers);
  return c;
}

ClusterCase run_cluster(int n_c, int cluster_size, double alpha, int trials, std::uint64_t seed,
                        const TrackerConfig& cfg, int workers, double match_tol) {
  if (trials < 1) throw InvalidArgument("cluster: trials must be positive");
  ClusterCase c;
  c.n_c = n_c;
  c.cluster_size = cluster_size;
  c.alpha = alpha;
  TrackerConfig reference_cfg;
  reference_cfg.max_step = 0.1;
  for (int trial = 0; trial < trials; ++trial) {
    const std::uint64_t trial_seed = seed + static_cast<std::uint64_t>(trial);
    const ClusterProblem problem = cluster_problem(n_c, cluster_size, alpha, trial_seed);
    const SolveSet reference = tracker::total_degree_homotopy(problem.target, trial_seed);
    const auto reference_paths = tracker::track_all(reference.homotopy, reference.starts, reference_cfg, workers);
    std::vector<ComplexVector> roots;
    for (const auto& r : reference_paths) {
      if (r.status != PathStatus::kSuccess) continue;
      bool seen = false;
      for (const auto& q : roots) seen = seen || tracker::same_solution(q, r.endpoint, match_tol);
      if (!seen) roots.push_back(r.endpoint);
    }
    const auto results =
        tracker::track_all(problem.solve_set.homotopy, problem.solve_set.starts, cfg, workers);
    int hit = 0;
    for (const auto& root : roots) hit += matches(results, root, match_tol) ? 1 : 0;
    c.success_rates.push_back(static_cast<double>(hit) / static_cast<double>(n_c * cluster_size));
  }
  double sum = 0.0;
  for (double r : c.success_rates) sum += r;
  c.average_success_rate = sum / static_cast<double>(c.success_rates.size());
  return c;
}

io::json to_json(const std::vector<HyperbolaCase>& cases) {
  io::json rows = io::json::array();
  for (const auto& c : cases) {
    rows.push_back({{"k", c.k},
                    {"p", c.p},
                    {"jumped", c.jumped},
                    {"max_error", c.max_error},
                    {"min_dt", c.min_step},
                    {"max_steps", c.max_steps}});
  }
  return {{"experiment", "hyperbola"}, {"rows", rows}};
}

io::json to_json(const std::vector<WilkinsonCase>& cases) {
  io::json rows = io::json::array();
  for (const auto& c : cases) {
    io::json row = path_summary(c.solve);
    row["d"] = c.d;
    row["all_roots"] = c.all_roots;
    rows.push_back(std::move(row));
  }
  return {{"experiment", "wilkinson"}, {"rows", rows}};
}

io::json to_json(const std::vector<GenericCase>& cases) {
  io::json rows = io::json::array();
  for (const auto& c : cases) {
    io::json row = path_summary(c.solve);
    row["n"] = c.n;
    row["d"] = c.d;
    row["seed"] = c.seed;
    rows.push_back(std::move(row));
  }
  return {{"experiment", "generic"}, {"rows", rows}};
}

io::json to_json(const std::vector<ClusterCase>& cases) {
  io::json rows = io::json::array();
  for (const auto& c : cases) {
    rows.push_back({{"n_c", c.n_c},
                    {"cluster_size", c.cluster_size},
                    {"alpha", c.alpha},
                    {"success_rates", c.success_rates},
                    {"average_success_rate", c.average_success_rate}});
  }
  return {{"experiment", "cluster"}, {"rows", rows}};
}

std::string format_table(const std::vector<HyperbolaCase>& cases) {
  std::string out = "   k          p  jump     max error     min dt  steps\n";
  for (const auto& c : cases) {
    out += printf_line("%4d %10.1e  %4s %13.3e %10.3e %6d\n", c.k, c.p, c.jumped ? "yes" : "no", c.max_error,
                       c.min_step, c.max_steps);
  }
  return out;
}

std::string format_table(const std::vector<WilkinsonCase>& cases) {
  std::string out = "   d  paths  found  e  roots  steps(min/mean/max)   max residual   seconds\n";
  for (const auto& c : cases) {
    const auto& s = c.solve;
    out += printf_line("%4d %6d %6d %2d  %5s  %4d / %6.1f / %4d  %13.3e %9.3f\n", c.d, s.paths, s.distinct_success,
                       s.failures, c.all_roots ? "all" : "miss", s.min_steps, s.mean_steps, s.max_steps,
                       s.max_residual, s.seconds);
  }
  return out;
}

std::string format_table(const std::vector<GenericCase>& cases) {
  std::string out = "   n    d   seed  paths  found  e  steps(mean/max)  seconds\n";
  for (const auto& c : cases) {
    const auto& s = c.solve;
    out += printf_line("%4d %4d %6llu %6d %6d %2d  %6.1f / %4d  %8.3f\n", c.n, c.d,
                       static_cast<unsigned long long>(c.seed), s.paths, s.distinct_success, s.failures,
                       s.mean_steps, s.max_steps, s.seconds);
  }
  return out;
}

std::string format_table(const std::vector<ClusterCase>& cases) {
  std::string out = " n_c  CS   alpha  trials  average SR\n";
  for (const auto& c : cases) {
    out += printf_line("%4d %3d %7.1f %7zu %11.3f\n", c.n_c, c.cluster_size, c.alpha, c.success_rates.size(),
                       c.average_success_rate);
  }
  return out;
}

}  // namespace padetrack::experiments
