#pragma once

// Independent oracles and random generators shared by the test suites. None of
// these call into the code under test except to build inputs.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "padetrack/polysys.hpp"

namespace testing_support {

using padetrack::Complex;
using padetrack::ComplexMatrix;
using padetrack::ComplexVector;
using padetrack::HomotopyPoly;
using padetrack::Monomial;

inline Complex random_complex(std::mt19937_64& rng, double scale = 1.0) {
  std::normal_distribution<double> normal(0.0, scale);
  const double re = normal(rng);
  const double im = normal(rng);
  return {re, im};
}

inline ComplexMatrix random_matrix(std::mt19937_64& rng, int rows, int cols) {
  ComplexMatrix a(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) a(i, j) = random_complex(rng);
  }
  return a;
}

inline ComplexVector random_vector(std::mt19937_64& rng, int n) {
  ComplexVector v(n);
  for (int i = 0; i < n; ++i) v(i) = random_complex(rng);
  return v;
}

/// Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations, ascending.
inline std::vector<double> jacobi_symmetric_eigenvalues(std::vector<std::vector<double>> a) {
  const std::size_t n = a.size();
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
    }
    if (off < 1e-30) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k][p];
          const double akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p][k];
          const double aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = a[i][i];
  std::sort(ev.begin(), ev.end());
  return ev;
}

/// Singular values (descending) from the eigenvalues of A^H A. The Hermitian
/// matrix B = A^H A is embedded as the real symmetric [[Re B, -Im B], [Im B, Re B]],
/// whose spectrum is that of B with every eigenvalue doubled.
inline std::vector<double> oracle_singular_values(const ComplexMatrix& a) {
  const auto n = static_cast<std::size_t>(a.cols());
  std::vector<std::vector<Complex>> b(n, std::vector<Complex>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Complex acc(0.0, 0.0);
      for (Eigen::Index k = 0; k < a.rows(); ++k) {
        acc += std::conj(a(k, static_cast<Eigen::Index>(i))) * a(k, static_cast<Eigen::Index>(j));
      }
      b[i][j] = acc;
    }
  }
  std::vector<std::vector<double>> r(2 * n, std::vector<double>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      r[i][j] = b[i][j].real();
      r[i][j + n] = -b[i][j].imag();
      r[i + n][j] = b[i][j].imag();
      r[i + n][j + n] = b[i][j].real();
    }
  }
  const auto ev = jacobi_symmetric_eigenvalues(r);
  std::vector<double> sv;
  for (std::size_t i = 0; i < n; ++i) sv.push_back(std::sqrt(std::max(0.0, ev[2 * n - 1 - 2 * i])));
  return sv;
}

inline Complex horner(const std::vector<Complex>& q, Complex t) {
  Complex acc(0.0, 0.0);
  for (auto it = q.rbegin(); it != q.rend(); ++it) acc = acc * t + *it;
  return acc;
}

/// Roots of q_0 + q_1 t + ... by scanning |q| on a grid over the Cauchy disc,
/// polishing every local minimum with Newton and dropping duplicates.
inline std::vector<Complex> grid_newton_roots(const std::vector<Complex>& q) {
  const std::size_t d = q.size() - 1;
  double bound = 0.0;
  for (std::size_t i = 0; i < d; ++i) bound = std::max(bound, std::abs(q[i] / q[d]));
  bound += 1.0;
  std::vector<Complex> dq;
  for (std::size_t i = 1; i <= d; ++i) dq.push_back(static_cast<double>(i) * q[i]);

  constexpr int kGrid = 400;
  const double h = 2.0 * bound / kGrid;
  std::vector<double> mag((kGrid + 1) * (kGrid + 1));
  auto at = [&](int i, int j) { return Complex(-bound + i * h, -bound + j * h); };
  for (int i = 0; i <= kGrid; ++i) {
    for (int j = 0; j <= kGrid; ++j) mag[static_cast<std::size_t>(i * (kGrid + 1) + j)] = std::abs(horner(q, at(i, j)));
  }
  std::vector<Complex> roots;
  for (int i = 1; i < kGrid; ++i) {
    for (int j = 1; j < kGrid; ++j) {
      const double m = mag[static_cast<std::size_t>(i * (kGrid + 1) + j)];
      bool local_min = true;
      for (int di = -1; di <= 1 && local_min; ++di) {
        for (int dj = -1; dj <= 1; ++dj) {
          if ((di || dj) && mag[static_cast<std::size_t>((i + di) * (kGrid + 1) + j + dj)] < m) {
            local_min = false;
            break;
          }
        }
      }
      if (!local_min) continue;
      Complex z = at(i, j);
      for (int it = 0; it < 50; ++it) {
        const Complex step = horner(q, z) / horner(dq, z);
        z -= step;
        if (std::abs(step) < 1e-15 * (1.0 + std::abs(z))) break;
      }
      if (std::abs(horner(q, z)) > 1e-9) continue;
      bool seen = false;
      for (const auto& r : roots) seen = seen || std::abs(r - z) < 1e-7 * (1.0 + std::abs(z));
      if (!seen) roots.push_back(z);
    }
  }
  return roots;
}

/// Taylor coefficients at s = 0 of sqrt(a + b s + s^2) (principal branch at
/// s = 0 chosen by sign), from f^2 = g: f_k = (g_k - sum_{j=1}^{k-1} f_j f_{k-j}) / (2 f_0).
inline std::vector<Complex> sqrt_quadratic_taylor(Complex a, Complex b, std::size_t w, double sign = 1.0) {
  std::vector<Complex> g(w, Complex(0.0, 0.0));
  g[0] = a;
  if (w > 1) g[1] = b;
  if (w > 2) g[2] = 1.0;
  std::vector<Complex> f(w, Complex(0.0, 0.0));
  f[0] = sign * std::sqrt(a);
  for (std::size_t k = 1; k < w; ++k) {
    Complex acc = g[k];
    for (std::size_t j = 1; j < k; ++j) acc -= f[j] * f[k - j];
    f[k] = acc / (2.0 * f[0]);
  }
  return f;
}

/// Branch x(t*+s) of x^2 = (t - 1/2)^2 + p^2 through sign * sqrt(...) at t*.
inline std::vector<Complex> hyperbola_taylor(double p, Complex t_star, std::size_t w, double sign = 1.0) {
  const Complex u = t_star - 0.5;
  return sqrt_quadratic_taylor(u * u + p * p, 2.0 * u, w, sign);
}

/// Binomial series coefficients of (1 + t)^alpha.
inline std::vector<double> binomial_series(double alpha, std::size_t w) {
  std::vector<double> c(w);
  c[0] = 1.0;
  for (std::size_t k = 1; k < w; ++k) c[k] = c[k - 1] * (alpha - static_cast<double>(k - 1)) / static_cast<double>(k);
  return c;
}

/// Direct term-by-term evaluation with std::pow, independent of the compiled evaluator.
inline Complex naive_eval(const HomotopyPoly& p, const ComplexVector& x, Complex t) {
  Complex acc(0.0, 0.0);
  for (const auto& m : p.terms) {
    Complex term = m.coefficient * std::pow(t, m.t_degree);
    for (std::size_t j = 0; j < m.exponents.size(); ++j) {
      term *= std::pow(x(static_cast<Eigen::Index>(j)), m.exponents[j]);
    }
    acc += term;
  }
  return acc;
}

/// Dense random polynomial with total degree <= d, optional t-dependence up to t_degree.
inline HomotopyPoly random_poly(std::mt19937_64& rng, int n, int d, int t_degree = 0) {
  HomotopyPoly p;
  std::uniform_int_distribution<int> tdeg(0, t_degree);
  const int terms = 2 + static_cast<int>(rng() % 6);
  for (int k = 0; k < terms; ++k) {
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    int budget = d;
    for (int j = 0; j < n; ++j) {
      std::uniform_int_distribution<int> pick(0, budget);
      e[static_cast<std::size_t>(j)] = pick(rng);
      budget -= e[static_cast<std::size_t>(j)];
    }
    p.terms.push_back({random_complex(rng), e, tdeg(rng)});
  }
  return p;
}

inline std::vector<HomotopyPoly> random_system(std::mt19937_64& rng, int n, int d, int t_degree = 0) {
  std::vector<HomotopyPoly> polys;
  for (int i = 0; i < n; ++i) polys.push_back(random_poly(rng, n, d, t_degree));
  return polys;
}

/// Taylor coefficients of a random function analytic on |t| < 1.2: a sum of
/// simple poles at modulus in [1.2, 3] plus a scaled exponential.
inline std::vector<Complex> random_analytic_series(std::mt19937_64& rng, std::size_t w) {
  std::uniform_real_distribution<double> modulus(1.2, 3.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::vector<Complex> c(w, Complex(0.0, 0.0));
  const int poles = 1 + static_cast<int>(rng() % 3);
  for (int j = 0; j < poles; ++j) {
    const Complex a = random_complex(rng);
    const Complex inv = 1.0 / std::polar(modulus(rng), angle(rng));
    Complex power(1.0, 0.0);
    for (std::size_t l = 0; l < w; ++l) {
      c[l] += a * power;
      power *= inv;
    }
  }
  const Complex a = random_complex(rng, 0.5);
  const Complex b = random_complex(rng);
  Complex term = a;
  for (std::size_t l = 0; l < w; ++l) {
    c[l] += term;
    term *= b / static_cast<double>(l + 1);
  }
  return c;
}

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace testing_support
