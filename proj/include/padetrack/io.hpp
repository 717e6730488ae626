#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"

#include "padetrack/tracker.hpp"

namespace padetrack::io {

using nlohmann::json;

struct TermDocument {
  double coeff_re = 0.0;
  double coeff_im = 0.0;
  std::vector<int> exponents;
  int t_degree = 0;

  bool operator==(const TermDocument&) const = default;
};

/// Input system. With any positive t_degree the document describes a
/// homotopy and must carry its own start points; otherwise it is a target
/// system solved from the total-degree start system.
struct SystemDocument {
  std::vector<std::string> variables;
  std::vector<std::vector<TermDocument>> polynomials;
  bool toric = false;
  std::vector<ComplexVector> starts;

  bool is_homotopy() const;
  Homotopy to_homotopy() const;

  bool operator==(const SystemDocument& other) const;
};

/// Parses and validates a system document. Duplicate (exponents, t_degree)
/// terms within a polynomial are merged by adding coefficients. Throws
/// ParseError naming the offending line or polynomial/term.
SystemDocument parse_system(const std::string& text);
SystemDocument load_system(const std::string& path);
json emit_system(const SystemDocument& doc);

struct SolutionDocument {
  std::vector<PathResult> paths;
  Complex gamma{1.0, 0.0};
  TrackerConfig config;
  std::uint64_t seed = 0;
  double wall_time = 0.0;
};

json config_to_json(const TrackerConfig& cfg);
json path_to_json(const PathResult& path);
json emit_solution(const SolutionDocument& doc);
/// Reads back a document produced by emit_solution.
SolutionDocument parse_solution(const json& j);

/// Shortest round-trip text for one JSON value.
std::string dump(const json& j, int indent = 2);

/// Called after each chunk of paths with (done, total).
using Progress = std::function<void(std::size_t, std::size_t)>;

/// Tracks every path of a document: a target system goes through the
/// total-degree homotopy with the seeded gamma, a homotopy document uses its
/// own starts. Fills everything but wall_time.
SolutionDocument solve(const SystemDocument& doc, const TrackerConfig& cfg, std::uint64_t seed, int workers,
                       const Progress& progress = {});

}  // namespace padetrack::io
