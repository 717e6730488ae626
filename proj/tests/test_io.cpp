#include "doctest.h"
#include "padetrack/errors.hpp"
#include "padetrack/experiments.hpp"
#include "padetrack/io.hpp"
#include "support.hpp"

using namespace padetrack;
using namespace testing_support;

namespace {

const char* kSquareMinusOne = R"({
  "variables": ["x"],
  "polynomials": [[{"coeff_re": 1, "exponents": [2]}, {"coeff_re": -1, "coeff_im": 0, "exponents": [0]}]]
})";

const char* kHyperbola = R"({
  "variables": ["x"],
  "polynomials": [[
    {"coeff_re": 1, "exponents": [2]},
    {"coeff_re": -1, "exponents": [0], "t_degree": 2},
    {"coeff_re": 1, "exponents": [0], "t_degree": 1},
    {"coeff_re": -0.26, "exponents": [0]}
  ]],
  "starts": [[[0.5099019513592785, 0]], [[-0.5099019513592785, 0]]]
})";

std::string error_of(const std::string& text) {
  try {
    io::parse_system(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("parse examples") {
  const auto doc = io::parse_system(kSquareMinusOne);
  CHECK(doc.polynomials.size() == 1);
  CHECK(doc.polynomials[0].size() == 2);
  CHECK_FALSE(doc.is_homotopy());

  const auto hyp = io::parse_system(kHyperbola);
  CHECK(hyp.is_homotopy());
  CHECK(hyp.starts.size() == 2);
  const Homotopy h = hyp.to_homotopy();
  CHECK(polysys::evaluate(h, hyp.starts[0], 0.0).norm() < 1e-15);
}

TEST_CASE("parse errors carry context") {
  const std::string bad_length = R"({"variables": ["x", "y"],
    "polynomials": [[{"coeff_re": 1, "exponents": [1, 0, 0]}], [{"coeff_re": 1, "exponents": [0, 1]}]]})";
  const std::string msg = error_of(bad_length);
  CHECK(msg.find("polynomial 0") != std::string::npos);
  CHECK(msg.find("exponent") != std::string::npos);

  CHECK(error_of("{not json").find("malformed JSON") != std::string::npos);
  CHECK(error_of(R"({"variables": ["x", "y"], "polynomials": [[{"coeff_re": 1, "exponents": [1, 0]}]]})")
            .find("square") != std::string::npos);
  CHECK_FALSE(error_of(R"({"variables": ["x"], "polynomials": [[{"coeff_re": 1, "exponents": [-1]}]]})").empty());
  CHECK(error_of(R"({"variables": ["x"], "toric": true, "polynomials": [[{"coeff_re": 1, "exponents": [-1]}]]})")
            .empty());
  CHECK_FALSE(
      error_of(R"({"variables": ["x"], "polynomials": [[{"coeff_re": 1, "exponents": [1], "t_degree": -1}]]})").empty());
  CHECK_FALSE(error_of(R"({"variables": ["x"], "polynomials": [[{"coeff_re": "a", "exponents": [1]}]]})").empty());
  CHECK_THROWS_AS(io::load_system("/nonexistent/system.json"), ParseError);
}

TEST_CASE("duplicate terms are merged") {
  const auto doc = io::parse_system(R"({"variables": ["x"], "polynomials": [[
    {"coeff_re": 1, "exponents": [1]}, {"coeff_re": 2, "coeff_im": 1, "exponents": [1]}]]})");
  REQUIRE(doc.polynomials[0].size() == 1);
  CHECK(doc.polynomials[0][0].coeff_re == 3.0);
  CHECK(doc.polynomials[0][0].coeff_im == 1.0);
}

TEST_CASE("system round trip") {
  std::mt19937_64 rng(51);
  for (const char* text : {kSquareMinusOne, kHyperbola}) {
    const auto doc = io::parse_system(text);
    CHECK(io::parse_system(io::dump(io::emit_system(doc))) == doc);
  }
  for (int trial = 0; trial < 10; ++trial) {
    io::SystemDocument doc;
    const int n = 1 + trial % 3;
    for (int i = 0; i < n; ++i) doc.variables.push_back("x" + std::to_string(i));
    const Homotopy merged(n, random_system(rng, n, 3, 1));
    for (const auto& p : merged.polys()) {
      std::vector<io::TermDocument> terms;
      for (const auto& m : p.terms) terms.push_back({m.coefficient.real(), m.coefficient.imag(), m.exponents, m.t_degree});
      doc.polynomials.push_back(terms);
    }
    doc.starts.push_back(random_vector(rng, n));
    const auto back = io::parse_system(io::dump(io::emit_system(doc)));
    CHECK(back == doc);
  }
}

TEST_CASE("solution document") {
  const TrackerConfig cfg;
  io::SolutionDocument doc;
  doc.config = cfg;
  doc.seed = 42;
  doc.gamma = tracker::random_gamma(42);
  doc.paths = tracker::track_all(experiments::hyperbola(0.1), experiments::hyperbola_starts(0.1), cfg);
  doc.wall_time = 0.25;
  const auto j = io::emit_solution(doc);
  CHECK(j["format"] == "padetrack-solution");
  CHECK(j["version"] == 1);
  CHECK(j["summary"]["paths"] == 2);
  CHECK(j["summary"]["success"] == 2);
  for (const char* key : {"gamma", "seed", "config", "wall_time", "paths"}) CHECK(j.contains(key));
  for (const auto& p : j["paths"]) {
    for (const char* key : {"status", "endpoint", "residual", "steps", "min_dt", "max_dt", "dt1_binding_fraction"}) {
      CHECK(p.contains(key));
    }
    CHECK(p["status"] == "success");
  }
  for (const char* key : {"L", "M", "beta1", "beta2", "max_step", "min_step"}) CHECK(j["config"].contains(key));

  const auto back = io::parse_solution(io::json::parse(io::dump(j)));
  CHECK(back.seed == 42);
  CHECK(back.gamma == doc.gamma);
  REQUIRE(back.paths.size() == 2);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(back.paths[i].status == doc.paths[i].status);
    CHECK((back.paths[i].endpoint.array() == doc.paths[i].endpoint.array()).all());
    CHECK(back.paths[i].steps == doc.paths[i].steps);
  }
  CHECK(io::dump(io::emit_solution(back)) == io::dump(j));
}
