#include "padetrack/pade.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "padetrack/errors.hpp"
#include "padetrack/series.hpp"

namespace padetrack::pade {

namespace {

Complex coeff(std::span<const Complex> c, int i) {
  return i < 0 ? Complex(0.0, 0.0) : c[static_cast<std::size_t>(i)];
}

// Denominator coefficients b_1..b_m, or nothing when the system is degenerate.
std::optional<std::vector<Complex>> solve_denominator(std::span<const Complex> c, int L, int m) {
  const double tau = series::order_threshold(c);
  if (m == 1) {
    const Complex lead = c[static_cast<std::size_t>(L)];
    if (std::abs(lead) <= tau) return std::nullopt;
    return std::vector<Complex>{-c[static_cast<std::size_t>(L + 1)] / lead};
  }
  ComplexMatrix toeplitz(m, m);
  ComplexVector rhs(m);
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= m; ++j) toeplitz(i - 1, j - 1) = coeff(c, L + i - j);
    rhs(i - 1) = -coeff(c, L + i);
  }
  Eigen::JacobiSVD<ComplexMatrix> svd(toeplitz, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  if (s(0) <= tau || s(m - 1) < kRankCutoff * s(0)) return std::nullopt;
  const ComplexVector b = svd.solve(rhs);
  return std::vector<Complex>(b.data(), b.data() + b.size());
}

Complex horner(const std::vector<Complex>& c, Complex t) {
  Complex acc(0.0, 0.0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
  return acc;
}

}  // namespace

PadeApproximant fit(std::span<const Complex> c, int L, int M) {
  if (L < 0 || M < 0) throw InvalidArgument("pade: negative degree");
  if (c.size() < static_cast<std::size_t>(L + M + 1)) {
    throw InvalidArgument("pade: need at least L + M + 1 coefficients");
  }
  const auto used = c.first(static_cast<std::size_t>(L + M + 1));

  PadeApproximant p;
  p.L = L;
  p.M = M;
  p.denominator.assign(static_cast<std::size_t>(M) + 1, Complex(0.0, 0.0));
  p.denominator[0] = 1.0;

  for (int m = M; m > 0; --m) {
    if (auto b = solve_denominator(used, L, m)) {
      std::copy(b->begin(), b->end(), p.denominator.begin() + 1);
      p.effective_M = m;
      break;
    }
  }

  p.numerator.assign(static_cast<std::size_t>(L) + 1, Complex(0.0, 0.0));
  for (int l = 0; l <= L; ++l) {
    Complex a(0.0, 0.0);
    for (int j = 0; j <= std::min(l, M); ++j) a += p.denominator[static_cast<std::size_t>(j)] * coeff(used, l - j);
    p.numerator[static_cast<std::size_t>(l)] = a;
  }
  return p;
}

Complex error_coefficient(std::span<const Complex> c, const PadeApproximant& p) {
  const int k = p.L + p.M + 1;
  if (c.size() <= static_cast<std::size_t>(k)) throw InvalidArgument("pade: need L + M + 2 coefficients");
  Complex defect = c[static_cast<std::size_t>(k)];
  for (int j = 1; j <= p.M; ++j) defect += p.denominator[static_cast<std::size_t>(j)] * coeff(c, k - j);
  const Complex a_k = k <= p.L ? p.numerator[static_cast<std::size_t>(k)] : Complex(0.0, 0.0);
  return a_k - defect;
}

std::vector<Complex> poles(const PadeApproximant& p) {
  std::vector<Complex> out;
  for (const auto& r : algebra::poly_roots(p.denominator)) {
    if (std::abs(r) <= kPoleCutoff) out.push_back(r);
  }
  return out;
}

double pole_distance(std::span<const PadeApproximant> approximants) {
  double d = std::numeric_limits<double>::infinity();
  for (const auto& p : approximants) {
    for (const auto& r : poles(p)) d = std::min(d, std::abs(r));
  }
  return d;
}

Complex evaluate(const PadeApproximant& p, Complex dt) {
  const Complex q = horner(p.denominator, dt);
  if (std::abs(q) < 1e-300) throw PoleEvaluation("pade: evaluation at a pole");
  return horner(p.numerator, dt) / q;
}

}  // namespace padetrack::pade
