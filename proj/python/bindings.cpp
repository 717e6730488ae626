// Python bindings. Documents cross the boundary as JSON text; numeric helpers
// take and return NumPy arrays and Python complex numbers.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "padetrack/errors.hpp"
#include "padetrack/experiments.hpp"
#include "padetrack/io.hpp"
#include "padetrack/newton.hpp"

namespace py = pybind11;
using namespace padetrack;

namespace {

std::string solve_text(const std::string& system, const TrackerConfig& cfg, std::uint64_t seed, int workers) {
  const io::SystemDocument doc = io::parse_system(system);
  io::SolutionDocument sol;
  {
    py::gil_scoped_release release;
    sol = io::solve(doc, cfg, seed, workers);
  }
  return io::dump(io::emit_solution(sol));
}

Homotopy homotopy_of(const std::string& system) { return io::parse_system(system).to_homotopy(); }

py::dict pade_fit(const std::vector<Complex>& c, int L, int M) {
  const PadeApproximant p = pade::fit(c, L, M);
  py::dict out;
  out["numerator"] = p.numerator;
  out["denominator"] = p.denominator;
  out["effective_M"] = p.effective_M;
  out["poles"] = pade::poles(p);
  if (c.size() > static_cast<std::size_t>(L + M + 1)) out["error_coefficient"] = pade::error_coefficient(c, p);
  return out;
}

ComplexMatrix taylor_series(const std::string& system, Complex t_star, std::size_t w, const ComplexVector& z0) {
  return newton::compute_series(homotopy_of(system), t_star, w, z0).series.coefficients();
}

template <class Cases>
std::string report(const Cases& cases) {
  return io::dump(experiments::to_json(cases));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Pade path tracker for polynomial homotopy continuation";

  static py::exception<ParseError> parse_error(m, "ParseError", PyExc_ValueError);
  static py::exception<InvalidStart> invalid_start(m, "InvalidStart", PyExc_ValueError);
  static py::exception<SingularJacobian> singular_jacobian(m, "SingularJacobian", PyExc_ArithmeticError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      parse_error(e.what());
    } catch (const InvalidStart& e) {
      invalid_start(e.what());
    } catch (const SingularJacobian& e) {
      singular_jacobian(e.what());
    } catch (const InvalidArgument& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const SingularMatrix& e) {
      PyErr_SetString(PyExc_ArithmeticError, e.what());
    } catch (const DomainError& e) {
      PyErr_SetString(PyExc_ArithmeticError, e.what());
    }
  });

  py::class_<TrackerConfig>(m, "Config")
      .def(py::init<>())
      .def_readwrite("L", &TrackerConfig::L)
      .def_readwrite("M", &TrackerConfig::M)
      .def_readwrite("beta1", &TrackerConfig::beta1)
      .def_readwrite("beta2", &TrackerConfig::beta2)
      .def_readwrite("t_end_game", &TrackerConfig::t_end_game)
      .def_readwrite("max_step", &TrackerConfig::max_step)
      .def_readwrite("min_step", &TrackerConfig::min_step)
      .def_readwrite("corrector_tol", &TrackerConfig::corrector_tol)
      .def_readwrite("corrector_max_iters", &TrackerConfig::corrector_max_iters)
      .def_readwrite("max_steps_per_path", &TrackerConfig::max_steps_per_path)
      .def_readwrite("eta_floor", &TrackerConfig::eta_floor)
      .def("validate", &TrackerConfig::validate)
      .def("to_json", [](const TrackerConfig& c) { return io::dump(io::config_to_json(c)); });

  m.def("solve_json", &solve_text, py::arg("system"), py::arg("config") = TrackerConfig{}, py::arg("seed") = 1,
        py::arg("workers") = 1, "Track all paths of a system document (JSON text); returns the solution document.");

  m.def(
      "residual", [](const std::string& system, const ComplexVector& z) { return tracker::residual(homotopy_of(system), z); },
      py::arg("system"), py::arg("z"), "Relative backward error of z for a target system document.");
  m.def(
      "eta",
      [](const std::string& system, const ComplexVector& z, Complex t) { return tracker::eta(homotopy_of(system), z, t); },
      py::arg("system"), py::arg("z"), py::arg("t"), "Curvature estimate of the distance to the nearest other path.");
  m.def("taylor_series", &taylor_series, py::arg("system"), py::arg("t_star"), py::arg("w"), py::arg("z0"),
        "Power series of the path through z0 at t_star, one row per variable, w coefficients.");
  m.def("pade_fit", &pade_fit, py::arg("coefficients"), py::arg("L"), py::arg("M"),
        "Pade approximant of type (L, M) from Taylor coefficients.");
  m.def("singular_values", &algebra::singular_values, py::arg("matrix"), "Singular values, descending.");
  m.def(
      "poly_roots", [](const std::vector<Complex>& c) { return algebra::poly_roots(c); }, py::arg("coefficients"),
        "Roots of 1 + c1 t + ... + cd t^d (c0 must be 1); trailing zeros are stripped.");
  m.def("random_gamma", &tracker::random_gamma, py::arg("seed"));

  m.def(
      "experiment_hyperbola", [](const std::vector<int>& ks, const TrackerConfig& cfg) {
        return report(experiments::run_hyperbola(ks, cfg));
      },
      py::arg("ks"), py::arg("config") = TrackerConfig{});
  m.def(
      "experiment_wilkinson",
      [](const std::vector<int>& ds, std::uint64_t seed, const TrackerConfig& cfg, int workers) {
        return report(experiments::run_wilkinson(ds, seed, cfg, workers));
      },
      py::arg("ds"), py::arg("seed") = 1, py::arg("config") = TrackerConfig{}, py::arg("workers") = 1);
  m.def(
      "experiment_generic",
      [](int n, int d, std::uint64_t seed, int trials, const TrackerConfig& cfg, int workers) {
        std::vector<experiments::GenericCase> cases;
        for (int i = 0; i < trials; ++i) cases.push_back(experiments::run_generic(n, d, seed + i, cfg, workers));
        return report(cases);
      },
      py::arg("n"), py::arg("d"), py::arg("seed") = 1, py::arg("trials") = 1, py::arg("config") = TrackerConfig{},
      py::arg("workers") = 1);
  m.def(
      "experiment_cluster",
      [](int n_c, int cluster_size, double alpha, int trials, std::uint64_t seed, const TrackerConfig& cfg, int workers,
         double match_tol) {
        return report(std::vector<experiments::ClusterCase>{
            experiments::run_cluster(n_c, cluster_size, alpha, trials, seed, cfg, workers, match_tol)});
      },
      py::arg("n_c"), py::arg("cluster_size"), py::arg("alpha"), py::arg("trials") = 10, py::arg("seed") = 1,
      py::arg("config") = TrackerConfig{}, py::arg("workers") = 1, py::arg("match_tol") = 1e-6);
}
