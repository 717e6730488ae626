#include "padetrack/polysys.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "padetrack/errors.hpp"

namespace padetrack {

namespace {

using Key = std::pair<std::vector<int>, int>;

HomotopyPoly normalize(const HomotopyPoly& p) {
  std::map<Key, Complex> merged;
  for (const auto& m : p.terms) merged[{m.exponents, m.t_degree}] += m.coefficient;
  HomotopyPoly out;
  for (const auto& [key, c] : merged) {
    if (c != Complex(0.0, 0.0)) out.terms.push_back({c, key.first, key.second});
  }
  return out;
}

Homotopy::Compiled compile(const HomotopyPoly& p) {
  std::map<std::vector<int>, std::vector<Complex>> groups;
  for (const auto& m : p.terms) {
    auto& tc = groups[m.exponents];
    if (tc.size() <= static_cast<std::size_t>(m.t_degree)) tc.resize(static_cast<std::size_t>(m.t_degree) + 1);
    tc[static_cast<std::size_t>(m.t_degree)] += m.coefficient;
  }
  Homotopy::Compiled out;
  for (auto& [exps, tc] : groups) {
    out.exponents.push_back(exps);
    out.t_coefficients.push_back(std::move(tc));
  }
  return out;
}

Complex horner(const std::vector<Complex>& c, Complex t) {
  Complex acc(0.0, 0.0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
  return acc;
}

void check_point(const Homotopy& h, const ComplexVector& x) {
  if (x.size() != h.n()) throw InvalidArgument("polysys: point has wrong dimension");
  if (h.toric()) {
    for (Eigen::Index j = 0; j < x.size(); ++j) {
      if (x(j) == Complex(0.0, 0.0)) throw DomainError("polysys: toric system evaluated at a zero coordinate");
    }
  }
}

// x_j^e for e in [min_j, max_j], stored with offset min_j.
class PointPowers {
 public:
  PointPowers(const Homotopy& h, const ComplexVector& x) : min_(h.min_exponents()) {
    const auto n = static_cast<std::size_t>(h.n());
    table_.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
      const int lo = h.min_exponents()[j];
      const int hi = h.max_exponents()[j];
      auto& row = table_[j];
      row.assign(static_cast<std::size_t>(hi - lo + 1), Complex(1.0, 0.0));
      const Complex xj = x(static_cast<Eigen::Index>(j));
      const std::size_t zero = static_cast<std::size_t>(-lo);
      for (std::size_t e = zero + 1; e < row.size(); ++e) row[e] = row[e - 1] * xj;
      if (lo < 0) {
        const Complex inv = 1.0 / xj;
        for (std::size_t e = zero; e-- > 0;) row[e] = row[e + 1] * inv;
      }
    }
  }

  Complex monomial(const std::vector<int>& q) const {
    Complex v(1.0, 0.0);
    for (std::size_t j = 0; j < q.size(); ++j) {
      if (q[j] != 0) v *= table_[j][static_cast<std::size_t>(q[j] - min_[j])];
    }
    return v;
  }

 private:
  const std::vector<int>& min_;
  std::vector<std::vector<Complex>> table_;
};

Complex eval_compiled(const Homotopy::Compiled& c, const PointPowers& pw, Complex t) {
  Complex acc(0.0, 0.0);
  for (std::size_t g = 0; g < c.exponents.size(); ++g) {
    acc += horner(c.t_coefficients[g], t) * pw.monomial(c.exponents[g]);
  }
  return acc;
}

// Truncated series powers xs_j^e for e in [min_j, max_j].
class SeriesPowers {
 public:
  SeriesPowers(const Homotopy& h, const SeriesVector& xs, std::size_t w)
      : min_(h.min_exponents()), w_(w) {
    const auto n = static_cast<std::size_t>(h.n());
    table_.resize(n);
    std::vector<Complex> base(w);
    for (std::size_t j = 0; j < n; ++j) {
      const int lo = h.min_exponents()[j];
      const int hi = h.max_exponents()[j];
      const auto count = static_cast<std::size_t>(hi - lo + 1);
      auto& row = table_[j];
      row.assign(count * w, Complex(0.0, 0.0));
      for (std::size_t l = 0; l < w; ++l) {
        base[l] = xs.coefficients()(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(l));
      }
      const std::size_t zero = static_cast<std::size_t>(-lo);
      row[zero * w] = 1.0;
      for (std::size_t e = zero + 1; e < count; ++e) {
        series::mul_into(slot(j, e - 1), base, slot(j, e));
      }
      if (lo < 0) {
        if (base[0] == Complex(0.0, 0.0)) {
          throw DomainError("polysys: negative exponent applied to a series with zero constant term");
        }
        std::vector<Complex> inv(w);
        inv[0] = 1.0 / base[0];
        for (std::size_t k = 1; k < w; ++k) {
          Complex acc(0.0, 0.0);
          for (std::size_t i = 1; i <= k; ++i) acc += base[i] * inv[k - i];
          inv[k] = -acc * inv[0];
        }
        for (std::size_t e = zero; e-- > 0;) series::mul_into(slot(j, e + 1), inv, slot(j, e));
      }
    }
  }

  std::span<const Complex> power(std::size_t j, int e) const {
    const auto idx = static_cast<std::size_t>(e - min_[j]);
    return {table_[j].data() + idx * w_, w_};
  }

 private:
  std::span<Complex> slot(std::size_t j, std::size_t idx) { return {table_[j].data() + idx * w_, w_}; }

  const std::vector<int>& min_;
  std::size_t w_;
  std::vector<std::vector<Complex>> table_;
};

// Truncated series (t_offset + s)^k for k = 0..max_t_degree.
class ShiftedTPowers {
 public:
  ShiftedTPowers(int max_degree, Complex t_offset, std::size_t w)
      : w_(w), table_(static_cast<std::size_t>(max_degree + 1) * w, Complex(0.0, 0.0)) {
    table_[0] = 1.0;
    for (std::size_t k = 1; k <= static_cast<std::size_t>(max_degree); ++k) {
      for (std::size_t m = 0; m < w; ++m) {
        Complex v = t_offset * table_[(k - 1) * w + m];
        if (m > 0) v += table_[(k - 1) * w + m - 1];
        table_[k * w + m] = v;
      }
    }
  }

  // out = sum_k c_k (t_offset + s)^k
  void combine(const std::vector<Complex>& c, std::span<Complex> out) const {
    std::fill(out.begin(), out.end(), Complex(0.0, 0.0));
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (c[k] == Complex(0.0, 0.0)) continue;
      const Complex* row = table_.data() + k * w_;
      for (std::size_t m = 0; m < w_; ++m) out[m] += c[k] * row[m];
    }
  }

 private:
  std::size_t w_;
  std::vector<Complex> table_;
};

void eval_compiled_series(const Homotopy::Compiled& c, const SeriesPowers& pw, const ShiftedTPowers& tp,
                          std::span<Complex> out, std::vector<Complex>& prod, std::vector<Complex>& tmp,
                          std::vector<Complex>& tser) {
  const std::size_t w = out.size();
  std::fill(out.begin(), out.end(), Complex(0.0, 0.0));
  for (std::size_t g = 0; g < c.exponents.size(); ++g) {
    const auto& q = c.exponents[g];
    tp.combine(c.t_coefficients[g], tser);
    bool have = false;
    for (std::size_t j = 0; j < q.size(); ++j) {
      if (q[j] == 0) continue;
      const auto pj = pw.power(j, q[j]);
      if (!have) {
        std::copy(pj.begin(), pj.end(), prod.begin());
        have = true;
      } else {
        series::mul_into(prod, pj, tmp);
        std::swap(prod, tmp);
      }
    }
    if (!have) {
      for (std::size_t l = 0; l < w; ++l) out[l] += tser[l];
    } else {
      series::mul_accumulate(prod, tser, Complex(1.0, 0.0), out);
    }
  }
}

}  // namespace

namespace polysys {

HomotopyPoly differentiate(const HomotopyPoly& p, int var) {
  HomotopyPoly out;
  for (const auto& m : p.terms) {
    const int e = m.exponents[static_cast<std::size_t>(var)];
    if (e == 0) continue;
    Monomial d = m;
    d.coefficient *= static_cast<double>(e);
    d.exponents[static_cast<std::size_t>(var)] -= 1;
    out.terms.push_back(std::move(d));
  }
  return out;
}

HomotopyPoly multiply_by_t_polynomial(const HomotopyPoly& p, std::span<const Complex> t_coefficients) {
  HomotopyPoly out;
  for (const auto& m : p.terms) {
    for (std::size_t k = 0; k < t_coefficients.size(); ++k) {
      if (t_coefficients[k] == Complex(0.0, 0.0)) continue;
      out.terms.push_back({m.coefficient * t_coefficients[k], m.exponents, m.t_degree + static_cast<int>(k)});
    }
  }
  return out;
}

HomotopyPoly sum(const HomotopyPoly& a, const HomotopyPoly& b) {
  HomotopyPoly out = a;
  out.terms.insert(out.terms.end(), b.terms.begin(), b.terms.end());
  return out;
}

HomotopyPoly scale(const HomotopyPoly& p, Complex factor) {
  HomotopyPoly out = p;
  for (auto& m : out.terms) m.coefficient *= factor;
  return out;
}

}  // namespace polysys

Homotopy::Homotopy(int n, std::vector<HomotopyPoly> polys, bool toric) : n_(n), toric_(toric) {
  if (n < 1) throw InvalidArgument("homotopy: need at least one variable");
  if (polys.size() != static_cast<std::size_t>(n)) {
    throw InvalidArgument("homotopy: system is not square (" + std::to_string(polys.size()) +
                          " polynomials, " + std::to_string(n) + " variables)");
  }
  const auto un = static_cast<std::size_t>(n);
  min_exp_.assign(un, 0);
  max_exp_.assign(un, 0);
  for (std::size_t i = 0; i < un; ++i) {
    for (const auto& m : polys[i].terms) {
      if (m.exponents.size() != un) {
        throw InvalidArgument("homotopy: polynomial " + std::to_string(i) + " has an exponent vector of length " +
                              std::to_string(m.exponents.size()));
      }
      if (!std::isfinite(m.coefficient.real()) || !std::isfinite(m.coefficient.imag())) {
        throw InvalidArgument("homotopy: non-finite coefficient in polynomial " + std::to_string(i));
      }
      if (m.t_degree < 0) throw InvalidArgument("homotopy: negative t-degree");
      for (int e : m.exponents) {
        if (e < 0 && !toric) throw InvalidArgument("homotopy: negative exponent in a non-toric system");
      }
    }
    polys_.push_back(normalize(polys[i]));
  }

  for (std::size_t i = 0; i < un; ++i) {
    for (int j = 0; j < n; ++j) grad_polys_.push_back(normalize(polysys::differentiate(polys_[i], j)));
  }
  for (std::size_t i = 0; i < un; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = j; k < n; ++k) {
        hess_polys_.push_back(normalize(polysys::differentiate(grad_polys_[i * un + static_cast<std::size_t>(j)], k)));
      }
    }
  }

  auto track_range = [&](const HomotopyPoly& p) {
    for (const auto& m : p.terms) {
      max_t_degree_ = std::max(max_t_degree_, m.t_degree);
      for (std::size_t j = 0; j < un; ++j) {
        min_exp_[j] = std::min(min_exp_[j], m.exponents[j]);
        max_exp_[j] = std::max(max_exp_[j], m.exponents[j]);
      }
    }
  };
  for (const auto& p : polys_) {
    track_range(p);
    eqs_.push_back(compile(p));
  }
  for (const auto& p : grad_polys_) {
    track_range(p);
    grads_.push_back(compile(p));
  }
  for (const auto& p : hess_polys_) {
    track_range(p);
    hess_.push_back(compile(p));
  }
}

std::vector<int> Homotopy::degrees() const {
  std::vector<int> out;
  for (const auto& p : polys_) {
    int d = 0;
    for (const auto& m : p.terms) {
      int total = 0;
      for (int e : m.exponents) total += e;
      d = std::max(d, total);
    }
    out.push_back(d);
  }
  return out;
}

std::size_t Homotopy::hessian_index(int i, int j, int k) const {
  if (j > k) std::swap(j, k);
  // Row j of the upper triangle starts after sum_{r<j} (n - r) entries.
  const int per_eq = n_ * (n_ + 1) / 2;
  const int offset = j * n_ - j * (j - 1) / 2;
  return static_cast<std::size_t>(i * per_eq + offset + (k - j));
}

const HomotopyPoly& Homotopy::gradient_polynomial(int i, int j) const {
  return grad_polys_[static_cast<std::size_t>(i * n_ + j)];
}

const HomotopyPoly& Homotopy::hessian_polynomial(int i, int j, int k) const {
  return hess_polys_[hessian_index(i, j, k)];
}

const Homotopy::Compiled& Homotopy::compiled_gradient(int i, int j) const {
  return grads_[static_cast<std::size_t>(i * n_ + j)];
}

const Homotopy::Compiled& Homotopy::compiled_hessian(int i, int j, int k) const {
  return hess_[hessian_index(i, j, k)];
}

namespace polysys {

ComplexVector evaluate(const Homotopy& h, const ComplexVector& x, Complex t) {
  check_point(h, x);
  const PointPowers pw(h, x);
  ComplexVector out(h.n());
  for (int i = 0; i < h.n(); ++i) out(i) = eval_compiled(h.compiled_equation(i), pw, t);
  return out;
}

ComplexMatrix jacobian(const Homotopy& h, const ComplexVector& x, Complex t) {
  check_point(h, x);
  const PointPowers pw(h, x);
  ComplexMatrix out(h.n(), h.n());
  for (int i = 0; i < h.n(); ++i) {
    for (int j = 0; j < h.n(); ++j) out(i, j) = eval_compiled(h.compiled_gradient(i, j), pw, t);
  }
  return out;
}

std::vector<ComplexMatrix> hessians(const Homotopy& h, const ComplexVector& x, Complex t) {
  check_point(h, x);
  const PointPowers pw(h, x);
  std::vector<ComplexMatrix> out;
  out.reserve(static_cast<std::size_t>(h.n()));
  for (int i = 0; i < h.n(); ++i) {
    ComplexMatrix m(h.n(), h.n());
    for (int j = 0; j < h.n(); ++j) {
      for (int k = j; k < h.n(); ++k) {
        m(j, k) = eval_compiled(h.compiled_hessian(i, j, k), pw, t);
        m(k, j) = m(j, k);
      }
    }
    out.push_back(std::move(m));
  }
  return out;
}

Homotopy shift(const Homotopy& h, Complex t_star) {
  std::vector<HomotopyPoly> polys;
  for (const auto& p : h.polys()) {
    HomotopyPoly q;
    for (const auto& m : p.terms) {
      // t^k -> (t + t_star)^k = sum_m C(k, m) t_star^(k-m) t^m
      double binom = 1.0;
      for (int deg = 0; deg <= m.t_degree; ++deg) {
        if (deg > 0) binom = binom * (m.t_degree - deg + 1) / deg;
        const Complex factor = binom * std::pow(t_star, m.t_degree - deg);
        q.terms.push_back({m.coefficient * factor, m.exponents, deg});
      }
    }
    polys.push_back(std::move(q));
  }
  return Homotopy(h.n(), std::move(polys), h.toric());
}

namespace {
void check_series(const Homotopy& h, const SeriesVector& xs, std::size_t w) {
  if (xs.size() != h.n()) throw InvalidArgument("polysys: series vector has wrong dimension");
  if (w == 0 || xs.order_bound() < w) throw InvalidArgument("polysys: series truncated below the requested order");
}
}  // namespace

SeriesVector evaluate_series(const Homotopy& h, const SeriesVector& xs, std::size_t w, Complex t_offset) {
  check_series(h, xs, w);
  const SeriesPowers pw(h, xs, w);
  const ShiftedTPowers tp(h.max_t_degree(), t_offset, w);
  SeriesVector out(h.n(), w);
  std::vector<Complex> buf(w), prod(w), tmp(w), tser(w);
  for (int i = 0; i < h.n(); ++i) {
    eval_compiled_series(h.compiled_equation(i), pw, tp, buf, prod, tmp, tser);
    for (std::size_t l = 0; l < w; ++l) out.coefficients()(i, static_cast<Eigen::Index>(l)) = buf[l];
  }
  return out;
}

SeriesMatrix jacobian_series(const Homotopy& h, const SeriesVector& xs, std::size_t w, Complex t_offset) {
  check_series(h, xs, w);
  const SeriesPowers pw(h, xs, w);
  const ShiftedTPowers tp(h.max_t_degree(), t_offset, w);
  SeriesMatrix out(h.n(), h.n(), w);
  std::vector<Complex> buf(w), prod(w), tmp(w), tser(w);
  for (int i = 0; i < h.n(); ++i) {
    for (int j = 0; j < h.n(); ++j) {
      eval_compiled_series(h.compiled_gradient(i, j), pw, tp, buf, prod, tmp, tser);
      for (std::size_t l = 0; l < w; ++l) out.coefficient(l)(i, j) = buf[l];
    }
  }
  return out;
}

double relative_residual(const Homotopy& h, const ComplexVector& x, Complex t) {
  check_point(h, x);
  const PointPowers pw(h, x);
  const ComplexVector xabs = x.cwiseAbs().cast<Complex>();
  const PointPowers pw_abs(h, xabs);
  double total = 0.0;
  for (int i = 0; i < h.n(); ++i) {
    const auto& c = h.compiled_equation(i);
    Complex value(0.0, 0.0);
    double scale = 0.0;
    for (std::size_t g = 0; g < c.exponents.size(); ++g) {
      const Complex coeff = horner(c.t_coefficients[g], t);
      value += coeff * pw.monomial(c.exponents[g]);
      scale += std::abs(coeff) * pw_abs.monomial(c.exponents[g]).real();
    }
    total += std::abs(value) / (scale + 1.0);
  }
  return total / h.n();
}

}  // namespace polysys
}  // namespace padetrack
