#pragma once

// Seeded property checks shared by the property suite and the acceptance run.

#include <cstdio>
#include <string>

#include "padetrack/experiments.hpp"
#include "padetrack/newton.hpp"
#include "padetrack/pade.hpp"
#include "padetrack/tracker.hpp"
#include "support.hpp"

namespace testing_support {

struct CheckTally {
  int checked = 0;
  int passed = 0;
  std::string first_failure;

  void record(bool ok, const std::string& what) {
    ++checked;
    if (ok) {
      ++passed;
    } else if (first_failure.empty()) {
      first_failure = what;
    }
  }
  bool all_passed() const { return checked > 0 && passed == checked; }
};

/// First index whose coefficient exceeds tol * (1 + |reference|), or w if none.
inline std::size_t numerical_order(const std::vector<Complex>& e, const std::vector<Complex>& reference, double tol) {
  for (std::size_t l = 0; l < e.size(); ++l) {
    if (std::abs(e[l]) > tol * (1.0 + std::abs(reference[l]))) return l;
  }
  return e.size();
}

/// One series Newton step from an iterate whose error has order r must give
/// an error of order >= min(2r, w). Hyperbola branches at random real t*.
inline CheckTally order_doubling_trials(std::uint64_t seed, int trials) {
  using namespace padetrack;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  CheckTally tally;
  constexpr std::size_t kMaxW = 8;
  for (int trial = 0; trial < trials; ++trial) {
    const double p = 0.1 + 0.4 * unit(rng);
    const double t_star = unit(rng);
    const Homotopy h = experiments::hyperbola(p);
    const double sign = trial % 2 == 0 ? 1.0 : -1.0;
    const auto exact = hyperbola_taylor(p, t_star, kMaxW, sign);
    for (std::size_t r = 1; r <= 3; ++r) {
      for (std::size_t w = r + 1; w <= kMaxW; ++w) {
        SeriesVector xk(1, w);
        for (std::size_t l = 0; l < w; ++l) {
          Complex c = exact[l];
          if (l >= r) c += 0.1 * (1.0 + std::abs(exact[l])) * random_complex(rng);
          xk.coefficients()(0, static_cast<Eigen::Index>(l)) = c;
        }
        const SeriesVector next = newton::series_newton_step(h, t_star, xk, w);
        std::vector<Complex> before(w), after(w), ref(exact.begin(), exact.begin() + static_cast<long>(w));
        for (std::size_t l = 0; l < w; ++l) {
          before[l] = xk.coefficients()(0, static_cast<Eigen::Index>(l)) - exact[l];
          after[l] = next.coefficients()(0, static_cast<Eigen::Index>(l)) - exact[l];
        }
        const std::size_t ord_before = numerical_order(before, ref, 1e-9);
        const std::size_t ord_after = numerical_order(after, ref, 1e-9);
        char buf[160];
        std::snprintf(buf, sizeof buf, "p=%.3g t*=%.3g r=%zu w=%zu: ord %zu -> %zu", p, t_star, r, w, ord_before,
                      ord_after);
        tally.record(ord_before == r && ord_after >= std::min(2 * ord_before, w), buf);
      }
    }
  }
  return tally;
}

struct PadeTallies {
  CheckTally defect;
  CheckTally pole;
};

/// Defect order >= L+M+1 with coefficient bound 1e-10, and for M = 1 the pole
/// equals c_L / c_{L+1} to 1e-12 relative when |c_{L+1}| / |c_L| > 1e-8.
inline PadeTallies pade_defect_trials(std::uint64_t seed, int count) {
  using namespace padetrack;
  std::mt19937_64 rng(seed);
  PadeTallies out;
  for (int trial = 0; trial < count; ++trial) {
    const int L = 1 + trial % 6;
    const int M = 1 + (trial / 6) % 2;
    const auto c = random_analytic_series(rng, static_cast<std::size_t>(L + M + 2));
    const PadeApproximant pa = pade::fit(c, L, M);
    double worst = 0.0;
    for (int k = 0; k <= L + M; ++k) {
      Complex d = -(k <= L ? pa.numerator[static_cast<std::size_t>(k)] : Complex(0.0, 0.0));
      for (int j = 0; j <= std::min(k, M); ++j) d += pa.denominator[static_cast<std::size_t>(j)] * c[static_cast<std::size_t>(k - j)];
      worst = std::max(worst, std::abs(d));
    }
    char buf[160];
    std::snprintf(buf, sizeof buf, "trial %d (L,M)=(%d,%d): max low-order defect %.3g, effective M %d", trial, L, M,
                  worst, pa.effective_M);
    out.defect.record(worst <= 1e-10 && pa.effective_M == M, buf);

    if (M == 1) {
      const Complex cl = c[static_cast<std::size_t>(L)];
      const Complex cl1 = c[static_cast<std::size_t>(L + 1)];
      if (std::abs(cl1) / std::abs(cl) > 1e-8) {
        const Complex pole = -1.0 / pa.denominator[1];
        const Complex expected = cl / cl1;
        const double rel = std::abs(pole - expected) / std::abs(expected);
        std::snprintf(buf, sizeof buf, "trial %d L=%d: pole relative error %.3g", trial, L, rel);
        out.pole.record(rel <= 1e-12, buf);
      }
    }
  }
  return out;
}

/// eta = 2|x| at sampled points of both hyperbola branches.
inline CheckTally eta_exactness(const std::vector<double>& ps, int samples) {
  using namespace padetrack;
  CheckTally tally;
  for (double p : ps) {
    const Homotopy h = experiments::hyperbola(p);
    for (int k = 0; k < samples; ++k) {
      const double t = static_cast<double>(k) / (samples - 1);
      for (double sign : {1.0, -1.0}) {
        ComplexVector z(1);
        z(0) = sign * std::sqrt((t - 0.5) * (t - 0.5) + p * p);
        const double e = tracker::eta(h, z, t);
        const double err = std::abs(e - 2.0 * std::abs(z(0)));
        char buf[120];
        std::snprintf(buf, sizeof buf, "p=%.0e t=%.3f: |eta - 2|z|| = %.3g", p, t, err);
        tally.record(err <= 1e-10, buf);
      }
    }
  }
  return tally;
}

/// Singular values against the A^H A oracle and polynomial roots against the
/// grid + Newton oracle on fixed seeded instances.
inline CheckTally linear_algebra_oracles(std::uint64_t seed) {
  using namespace padetrack;
  std::mt19937_64 rng(seed);
  CheckTally tally;
  for (int n = 1; n <= 8; ++n) {
    for (int rep = 0; rep < 5; ++rep) {
      const ComplexMatrix a = random_matrix(rng, n, n);
      const RealVector sv = algebra::singular_values(a);
      const auto oracle = oracle_singular_values(a);
      double err = 0.0;
      for (int i = 0; i < n; ++i) err = std::max(err, std::abs(sv(i) - oracle[static_cast<std::size_t>(i)]));
      char buf[120];
      std::snprintf(buf, sizeof buf, "svd n=%d: max deviation %.3g (sigma_1 %.3g)", n, err, sv(0));
      tally.record(err <= 1e-10 * sv(0), buf);
    }
  }
  for (int deg = 1; deg <= 8; ++deg) {
    for (int rep = 0; rep < 3; ++rep) {
      std::vector<Complex> q{1.0};
      for (int i = 0; i < deg; ++i) q.push_back(random_complex(rng));
      const auto roots = algebra::poly_roots(q);
      const auto oracle = grid_newton_roots(q);
      bool ok = roots.size() == static_cast<std::size_t>(deg) && oracle.size() == roots.size();
      double worst = 0.0;
      for (const auto& o : oracle) {
        double nearest = std::numeric_limits<double>::infinity();
        for (const auto& r : roots) nearest = std::min(nearest, std::abs(o - r) / (1.0 + std::abs(o)));
        worst = std::max(worst, nearest);
      }
      ok = ok && worst <= 1e-8;
      char buf[120];
      std::snprintf(buf, sizeof buf, "roots degree %d: %zu roots, max deviation %.3g", deg, roots.size(), worst);
      tally.record(ok, buf);
    }
  }
  return tally;
}

}  // namespace testing_support
