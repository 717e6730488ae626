#include "doctest.h"
#include "padetrack/experiments.hpp"
#include "support.hpp"

using namespace padetrack;
using namespace testing_support;

TEST_CASE("problem builders") {
  const auto w = experiments::wilkinson(4);
  CHECK(w.n() == 1);
  ComplexVector z(1);
  for (int r = 1; r <= 4; ++r) {
    z(0) = r;
    CHECK(std::abs(polysys::evaluate(w, z, 0.0)(0)) < 1e-12);
  }
  const auto coeffs = experiments::poly_from_roots({1.0, 2.0});
  REQUIRE(coeffs.size() == 3);
  CHECK(coeffs[0] == Complex(2.0));
  CHECK(coeffs[1] == Complex(-3.0));
  CHECK(coeffs[2] == Complex(1.0));

  const auto g = experiments::generic_system(2, 3, 7);
  CHECK(g.degrees() == std::vector<int>{3, 3});
  CHECK(experiments::generic_system(2, 3, 7).polys() == g.polys());
  CHECK_FALSE(experiments::generic_system(2, 3, 8).polys() == g.polys());

  const auto k = experiments::katsura(3);
  CHECK(k.n() == 4);
  CHECK(k.degrees() == std::vector<int>{1, 2, 2, 2});

  for (const auto& s : experiments::hyperbola_starts(0.1)) {
    CHECK(std::abs(polysys::evaluate(experiments::hyperbola(0.1), s, 0.0)(0)) < 1e-15);
  }
}

TEST_CASE("cluster problem structure") {
  const auto cp = experiments::cluster_problem(5, 3, 10.0, 11);
  CHECK(cp.cluster_roots.size() == 15);
  CHECK(cp.solve_set.starts.size() == 15);
  CHECK(std::abs(std::abs(cp.gamma1) - 1.0) < 1e-15);
  CHECK(std::abs(std::abs(cp.gamma2) - 1.0) < 1e-15);
  for (const auto& s : cp.solve_set.starts) CHECK(polysys::evaluate(cp.solve_set.homotopy, s, 0.0).norm() < 1e-8);
}

TEST_CASE("experiment runners and reports") {
  const TrackerConfig cfg;
  const auto hyp = experiments::run_hyperbola({1, 3}, cfg);
  REQUIRE(hyp.size() == 2);
  for (const auto& c : hyp) {
    CHECK_FALSE(c.jumped);
    CHECK(c.max_error < 1e-8);
  }
  const auto wil = experiments::run_wilkinson({5}, 1, cfg, 1);
  REQUIRE(wil.size() == 1);
  CHECK(wil[0].all_roots);
  CHECK(wil[0].solve.failures == 0);
  const auto gen = experiments::run_generic(1, 10, 1, cfg, 1);
  CHECK(gen.solve.distinct_success == 10);
  const auto clu = experiments::run_cluster(5, 3, 10.0, 2, 1, cfg, 1);
  CHECK(clu.success_rates.size() == 2);
  CHECK(clu.average_success_rate >= 0.0);
  CHECK(clu.average_success_rate <= 1.0);

  CHECK(experiments::to_json(hyp)["rows"].size() == 2);
  CHECK(experiments::to_json(wil)["rows"][0].contains("d"));
  CHECK_FALSE(experiments::format_table(hyp).empty());
  CHECK_FALSE(experiments::format_table(wil).empty());
  CHECK_FALSE(experiments::format_table(std::vector<experiments::GenericCase>{gen}).empty());
  CHECK_FALSE(experiments::format_table(std::vector<experiments::ClusterCase>{clu}).empty());
}
