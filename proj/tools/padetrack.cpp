// padetrack command-line front end: `solve` tracks a system or homotopy
// document, `experiment` runs the desk-scale benchmark tables.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numeric>

#include "CLI11.hpp"
#include "padetrack/errors.hpp"
#include "padetrack/experiments.hpp"
#include "padetrack/io.hpp"

namespace {

using namespace padetrack;

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitPathFailed = 3;
constexpr int kExitNumeric = 4;
constexpr std::size_t kProgressChunk = 100;

struct Options {
  TrackerConfig cfg;
  std::uint64_t seed = 1;
  std::string out;
  int workers = 1;
};

void add_tracker_flags(CLI::App* app, Options& o) {
  app->add_option("--L", o.cfg.L, "Pade numerator degree")->capture_default_str();
  app->add_option("--M", o.cfg.M, "Pade denominator degree")->capture_default_str();
  app->add_option("--beta1", o.cfg.beta1, "curvature step factor")->capture_default_str();
  app->add_option("--beta2", o.cfg.beta2, "pole distance step factor")->capture_default_str();
  app->add_option("--max-step", o.cfg.max_step, "largest step in t")->capture_default_str();
  app->add_option("--min-step", o.cfg.min_step, "smallest step before giving up")->capture_default_str();
  app->add_option("--tol", o.cfg.corrector_tol, "corrector residual tolerance")->capture_default_str();
  app->add_option("--max-steps", o.cfg.max_steps_per_path, "step budget per path")->capture_default_str();
  app->add_option("--seed", o.seed, "seed for gamma and random problems")->capture_default_str();
  app->add_option("--out", o.out, "write the JSON document here instead of stdout");
  app->add_option("--workers", o.workers, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();
}

void write_document(const io::json& doc, const std::string& out) {
  const std::string text = io::dump(doc) + "\n";
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw std::runtime_error("cannot write '" + out + "'");
  f << text;
}

int run_solve(const std::string& path, const Options& o) {
  const io::SystemDocument doc = io::load_system(path);
  const auto start = std::chrono::steady_clock::now();
  io::SolutionDocument sol = io::solve(doc, o.cfg, o.seed, o.workers, [](std::size_t done, std::size_t total) {
    if (total > kProgressChunk) std::cerr << "tracked " << done << " / " << total << " paths\n";
  });
  sol.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  write_document(io::emit_solution(sol), o.out);
  const bool all_ok = std::all_of(sol.paths.begin(), sol.paths.end(),
                                  [](const PathResult& r) { return r.status == PathStatus::kSuccess; });
  return all_ok ? kExitOk : kExitPathFailed;
}

std::vector<int> range(int lo, int hi) {
  std::vector<int> v(static_cast<std::size_t>(std::max(0, hi - lo + 1)));
  std::iota(v.begin(), v.end(), lo);
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pade path tracker for polynomial homotopy continuation"};
  app.require_subcommand(1);

  Options opts;

  auto* solve = app.add_subcommand("solve", "track all paths of a system or homotopy document");
  std::string system_path;
  solve->add_option("system", system_path, "system document (JSON)")->required();
  add_tracker_flags(solve, opts);

  auto* experiment = app.add_subcommand("experiment", "run a benchmark table");
  experiment->require_subcommand(1);
  add_tracker_flags(experiment, opts);

  std::vector<int> ks = range(1, 7);
  auto* hyperbola = experiment->add_subcommand("hyperbola", "hyperbola family, p = 10^-k");
  hyperbola->add_option("--k", ks, "exponents k")->capture_default_str();

  std::vector<int> ds = range(10, 19);
  auto* wilkinson = experiment->add_subcommand("wilkinson", "Wilkinson polynomials");
  wilkinson->add_option("--d", ds, "degrees")->capture_default_str();

  int gen_n = 2, gen_d = 10, trials = 3;
  auto* generic = experiment->add_subcommand("generic", "dense random systems");
  generic->add_option("--n", gen_n, "variables")->check(CLI::PositiveNumber)->capture_default_str();
  generic->add_option("--d", gen_d, "degree")->check(CLI::PositiveNumber)->capture_default_str();
  generic->add_option("--trials", trials, "seeds seed .. seed + trials - 1")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  int n_c = 5, cluster_size = 3, cluster_trials = 10;
  double alpha = 10.0, match_tol = 1e-6;
  auto* cluster = experiment->add_subcommand("cluster", "clustered-solution homotopies");
  cluster->add_option("--nc", n_c, "number of clusters")->check(CLI::PositiveNumber)->capture_default_str();
  cluster->add_option("--cs", cluster_size, "cluster size")->check(CLI::PositiveNumber)->capture_default_str();
  cluster->add_option("--alpha", alpha, "cluster spread")->check(CLI::PositiveNumber)->capture_default_str();
  cluster->add_option("--trials", cluster_trials, "trials")->check(CLI::PositiveNumber)->capture_default_str();
  cluster->add_option("--match-tol", match_tol, "relative tolerance for matching roots")->capture_default_str();

  for (auto* leaf : {hyperbola, wilkinson, generic, cluster}) leaf->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    opts.cfg.validate();
    if (*solve) return run_solve(system_path, opts);

    io::json doc;
    std::string table;
    if (*hyperbola) {
      const auto cases = experiments::run_hyperbola(ks, opts.cfg);
      doc = experiments::to_json(cases);
      table = experiments::format_table(cases);
    } else if (*wilkinson) {
      const auto cases = experiments::run_wilkinson(ds, opts.seed, opts.cfg, opts.workers);
      doc = experiments::to_json(cases);
      table = experiments::format_table(cases);
    } else if (*generic) {
      std::vector<experiments::GenericCase> cases;
      for (int i = 0; i < trials; ++i) {
        cases.push_back(experiments::run_generic(gen_n, gen_d, opts.seed + static_cast<std::uint64_t>(i), opts.cfg,
                                                 opts.workers));
        std::cerr << "seed " << cases.back().seed << " done\n";
      }
      doc = experiments::to_json(cases);
      table = experiments::format_table(cases);
    } else if (*cluster) {
      const std::vector<experiments::ClusterCase> cases{experiments::run_cluster(
          n_c, cluster_size, alpha, cluster_trials, opts.seed, opts.cfg, opts.workers, match_tol)};
      doc = experiments::to_json(cases);
      table = experiments::format_table(cases);
    }
    doc["seed"] = opts.seed;
    doc["config"] = io::config_to_json(opts.cfg);
    std::cerr << table;
    write_document(doc, opts.out);
    return kExitOk;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  }
}
