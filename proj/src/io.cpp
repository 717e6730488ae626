#include "padetrack/io.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <optional>
#include <fstream>
#include <limits>
#include <sstream>

#include "padetrack/errors.hpp"

namespace padetrack::io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError("system document: " + where + ": " + what);
}

std::string term_where(std::size_t poly, std::size_t term) {
  return "polynomial " + std::to_string(poly) + ", term " + std::to_string(term);
}

int read_int(const json& v, const std::string& where, const char* field) {
  if (!v.is_number_integer()) fail(where, std::string("'") + field + "' must be an integer");
  return v.get<int>();
}

double read_number(const json& v, const std::string& where, const char* field) {
  if (!v.is_number()) fail(where, std::string("'") + field + "' must be a number");
  return v.get<double>();
}

Complex read_pair(const json& v, const std::string& where) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
    fail(where, "expected a [re, im] pair");
  }
  return {v[0].get<double>(), v[1].get<double>()};
}

json pair(Complex z) {
  auto num = [](double x) { return std::isfinite(x) ? json(x) : json(nullptr); };
  return json::array({num(z.real()), num(z.imag())});
}

double number_or_inf(const json& v) {
  return v.is_null() ? std::numeric_limits<double>::infinity() : v.get<double>();
}

json finite_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

}  // namespace

bool SystemDocument::is_homotopy() const {
  for (const auto& p : polynomials) {
    for (const auto& t : p) {
      if (t.t_degree > 0) return true;
    }
  }
  return false;
}

bool SystemDocument::operator==(const SystemDocument& other) const {
  if (variables != other.variables || polynomials != other.polynomials || toric != other.toric) return false;
  if (starts.size() != other.starts.size()) return false;
  for (std::size_t i = 0; i < starts.size(); ++i) {
    if (starts[i].size() != other.starts[i].size() || starts[i] != other.starts[i]) return false;
  }
  return true;
}

Homotopy SystemDocument::to_homotopy() const {
  std::vector<HomotopyPoly> polys;
  for (const auto& p : polynomials) {
    HomotopyPoly hp;
    for (const auto& t : p) hp.terms.push_back({Complex(t.coeff_re, t.coeff_im), t.exponents, t.t_degree});
    polys.push_back(std::move(hp));
  }
  return Homotopy(static_cast<int>(variables.size()), std::move(polys), toric);
}

SystemDocument parse_system(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("system document: malformed JSON: ") + e.what());
  }
  if (!root.is_object()) fail("document", "top level must be an object");

  SystemDocument doc;
  if (!root.contains("variables") || !root["variables"].is_array() || root["variables"].empty()) {
    fail("document", "'variables' must be a non-empty array of names");
  }
  for (const auto& v : root["variables"]) {
    if (!v.is_string()) fail("variables", "names must be strings");
    doc.variables.push_back(v.get<std::string>());
  }
  const std::size_t n = doc.variables.size();

  if (root.contains("toric")) {
    if (!root["toric"].is_boolean()) fail("document", "'toric' must be a boolean");
    doc.toric = root["toric"].get<bool>();
  }

  if (!root.contains("polynomials") || !root["polynomials"].is_array()) {
    fail("document", "'polynomials' must be an array");
  }
  const auto& polys = root["polynomials"];
  if (polys.size() != n) {
    fail("document", "system is not square: " + std::to_string(polys.size()) + " polynomials in " +
                         std::to_string(n) + " variables");
  }
  for (std::size_t i = 0; i < polys.size(); ++i) {
    if (!polys[i].is_array()) fail("polynomial " + std::to_string(i), "must be an array of terms");
    std::vector<TermDocument> terms;
    for (std::size_t k = 0; k < polys[i].size(); ++k) {
      const auto& jt = polys[i][k];
      const std::string where = term_where(i, k);
      if (!jt.is_object()) fail(where, "term must be an object");
      TermDocument t;
      if (!jt.contains("coeff_re")) fail(where, "missing 'coeff_re'");
      t.coeff_re = read_number(jt["coeff_re"], where, "coeff_re");
      if (jt.contains("coeff_im")) t.coeff_im = read_number(jt["coeff_im"], where, "coeff_im");
      if (!jt.contains("exponents") || !jt["exponents"].is_array()) fail(where, "missing 'exponents' array");
      if (jt["exponents"].size() != n) {
        fail(where, "exponent vector has length " + std::to_string(jt["exponents"].size()) + " but " +
                        std::to_string(n) + " variables are declared");
      }
      for (const auto& e : jt["exponents"]) {
        const int v = read_int(e, where, "exponents");
        if (v < 0 && !doc.toric) fail(where, "negative exponent in a non-toric system");
        t.exponents.push_back(v);
      }
      if (jt.contains("t_degree")) {
        t.t_degree = read_int(jt["t_degree"], where, "t_degree");
        if (t.t_degree < 0) fail(where, "'t_degree' must be nonnegative");
      }
      auto same = std::find_if(terms.begin(), terms.end(), [&](const TermDocument& o) {
        return o.exponents == t.exponents && o.t_degree == t.t_degree;
      });
      if (same != terms.end()) {
        same->coeff_re += t.coeff_re;
        same->coeff_im += t.coeff_im;
      } else {
        terms.push_back(std::move(t));
      }
    }
    doc.polynomials.push_back(std::move(terms));
  }

  if (root.contains("starts")) {
    const auto& starts = root["starts"];
    if (!starts.is_array()) fail("starts", "must be an array of points");
    for (std::size_t s = 0; s < starts.size(); ++s) {
      const std::string where = "start " + std::to_string(s);
      if (!starts[s].is_array() || starts[s].size() != n) fail(where, "point must have one pair per variable");
      ComplexVector z(static_cast<Eigen::Index>(n));
      for (std::size_t j = 0; j < n; ++j) z(static_cast<Eigen::Index>(j)) = read_pair(starts[s][j], where);
      doc.starts.push_back(std::move(z));
    }
  }
  return doc;
}

SystemDocument load_system(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open system document '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_system(buf.str());
}

json emit_system(const SystemDocument& doc) {
  json root;
  root["variables"] = doc.variables;
  root["toric"] = doc.toric;
  json polys = json::array();
  for (const auto& p : doc.polynomials) {
    json terms = json::array();
    for (const auto& t : p) {
      terms.push_back({{"coeff_re", t.coeff_re}, {"coeff_im", t.coeff_im}, {"exponents", t.exponents},
                       {"t_degree", t.t_degree}});
    }
    polys.push_back(std::move(terms));
  }
  root["polynomials"] = std::move(polys);
  if (!doc.starts.empty()) {
    json starts = json::array();
    for (const auto& z : doc.starts) {
      json point = json::array();
      for (Eigen::Index j = 0; j < z.size(); ++j) point.push_back(pair(z(j)));
      starts.push_back(std::move(point));
    }
    root["starts"] = std::move(starts);
  }
  return root;
}

json config_to_json(const TrackerConfig& cfg) {
  return {{"L", cfg.L},
          {"M", cfg.M},
          {"beta1", cfg.beta1},
          {"beta2", cfg.beta2},
          {"t_end_game", cfg.t_end_game},
          {"max_step", cfg.max_step},
          {"min_step", cfg.min_step},
          {"corrector_tol", cfg.corrector_tol},
          {"corrector_max_iters", cfg.corrector_max_iters},
          {"max_steps_per_path", cfg.max_steps_per_path},
          {"eta_floor", cfg.eta_floor}};
}

json path_to_json(const PathResult& path) {
  json endpoint = json::array();
  for (Eigen::Index j = 0; j < path.endpoint.size(); ++j) endpoint.push_back(pair(path.endpoint(j)));
  return {{"status", to_string(path.status)},
          {"endpoint", std::move(endpoint)},
          {"residual", finite_or_null(path.residual)},
          {"steps", path.steps},
          {"min_dt", path.min_step},
          {"max_dt", path.max_step},
          {"dt1_binding_fraction", path.dt1_binding_fraction()}};
}

json emit_solution(const SolutionDocument& doc) {
  json paths = json::array();
  int successes = 0;
  for (const auto& p : doc.paths) {
    paths.push_back(path_to_json(p));
    if (p.status == PathStatus::kSuccess) ++successes;
  }
  return {{"format", "padetrack-solution"},
          {"version", 1},
          {"gamma", pair(doc.gamma)},
          {"seed", doc.seed},
          {"config", config_to_json(doc.config)},
          {"wall_time", doc.wall_time},
          {"summary", {{"paths", doc.paths.size()}, {"success", successes}}},
          {"paths", std::move(paths)}};
}

SolutionDocument parse_solution(const json& j) {
  SolutionDocument doc;
  try {
    doc.gamma = {j.at("gamma").at(0).get<double>(), j.at("gamma").at(1).get<double>()};
    doc.seed = j.at("seed").get<std::uint64_t>();
    doc.wall_time = j.at("wall_time").get<double>();
    const auto& c = j.at("config");
    doc.config.L = c.at("L").get<int>();
    doc.config.M = c.at("M").get<int>();
    doc.config.beta1 = c.at("beta1").get<double>();
    doc.config.beta2 = c.at("beta2").get<double>();
    doc.config.t_end_game = c.at("t_end_game").get<double>();
    doc.config.max_step = c.at("max_step").get<double>();
    doc.config.min_step = c.at("min_step").get<double>();
    doc.config.corrector_tol = c.at("corrector_tol").get<double>();
    doc.config.corrector_max_iters = c.at("corrector_max_iters").get<int>();
    doc.config.max_steps_per_path = c.at("max_steps_per_path").get<int>();
    doc.config.eta_floor = c.at("eta_floor").get<double>();
    for (const auto& p : j.at("paths")) {
      PathResult r;
      r.status = path_status_from_string(p.at("status").get<std::string>());
      const auto& e = p.at("endpoint");
      r.endpoint.resize(static_cast<Eigen::Index>(e.size()));
      for (std::size_t k = 0; k < e.size(); ++k) {
        r.endpoint(static_cast<Eigen::Index>(k)) = {number_or_inf(e[k].at(0)), number_or_inf(e[k].at(1))};
      }
      r.residual = number_or_inf(p.at("residual"));
      r.steps = p.at("steps").get<int>();
      r.min_step = p.at("min_dt").get<double>();
      r.max_step = p.at("max_dt").get<double>();
      r.dt1_binding_steps = static_cast<int>(std::lround(p.at("dt1_binding_fraction").get<double>() * r.steps));
      doc.paths.push_back(std::move(r));
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("solution document: ") + e.what());
  }
  return doc;
}

std::string dump(const json& j, int indent) { return j.dump(indent); }

SolutionDocument solve(const SystemDocument& doc, const TrackerConfig& cfg, std::uint64_t seed, int workers,
                       const Progress& progress) {
  constexpr std::size_t kChunk = 100;
  SolutionDocument sol;
  sol.config = cfg;
  sol.seed = seed;
  std::optional<SolveSet> set;
  if (doc.is_homotopy()) {
    if (doc.starts.empty()) throw ParseError("system document: homotopy document needs 'starts'");
    set.emplace(SolveSet{doc.to_homotopy(), doc.starts, Complex(1.0, 0.0)});
  } else {
    set.emplace(tracker::total_degree_homotopy(doc.to_homotopy(), seed));
  }
  sol.gamma = set->gamma;
  const auto& starts = set->starts;
  sol.paths.reserve(starts.size());
  for (std::size_t begin = 0; begin < starts.size(); begin += kChunk) {
    const std::size_t end = std::min(starts.size(), begin + kChunk);
    const std::vector<ComplexVector> chunk(starts.begin() + static_cast<std::ptrdiff_t>(begin),
                                           starts.begin() + static_cast<std::ptrdiff_t>(end));
    auto part = tracker::track_all(set->homotopy, chunk, cfg, workers);
    std::move(part.begin(), part.end(), std::back_inserter(sol.paths));
    if (progress) progress(end, starts.size());
  }
  return sol;
}

}  // namespace padetrack::io
