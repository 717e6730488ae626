#pragma once

#include <map>
#include <span>
#include <vector>

#include "padetrack/algebra.hpp"
#include "padetrack/series.hpp"

namespace padetrack {

/// One term c * x^q * t^k of a homotopy polynomial.
struct Monomial {
  Complex coefficient;
  std::vector<int> exponents;
  int t_degree = 0;

  bool operator==(const Monomial&) const = default;
};

struct HomotopyPoly {
  std::vector<Monomial> terms;

  bool operator==(const HomotopyPoly&) const = default;
};

namespace polysys {

/// Symbolic partial derivative with respect to x_var.
HomotopyPoly differentiate(const HomotopyPoly& p, int var);

/// Multiplies every term by the polynomial t_coefficients[0] + t_coefficients[1] t + ...
HomotopyPoly multiply_by_t_polynomial(const HomotopyPoly& p, std::span<const Complex> t_coefficients);

/// Concatenates the terms; duplicates are merged when a Homotopy is built.
HomotopyPoly sum(const HomotopyPoly& a, const HomotopyPoly& b);

/// Polynomial with the same support whose coefficients are scaled by factor.
HomotopyPoly scale(const HomotopyPoly& p, Complex factor);

}  // namespace polysys

/// Square system H(x, t) of n polynomials in n variables whose coefficients
/// are polynomials in t. Immutable once built; the first and second symbolic
/// derivatives are prepared at construction.
class Homotopy {
 public:
  /// Merges duplicate (exponents, t_degree) keys and drops zero terms.
  /// Throws InvalidArgument when the system is not square, an exponent vector
  /// has the wrong length, a coefficient is not finite, or a negative exponent
  /// appears in a non-toric system.
  Homotopy(int n, std::vector<HomotopyPoly> polys, bool toric = false);

  int n() const { return n_; }
  bool toric() const { return toric_; }
  const std::vector<HomotopyPoly>& polys() const { return polys_; }
  int max_t_degree() const { return max_t_degree_; }
  /// Largest total x-degree of each polynomial.
  std::vector<int> degrees() const;

  /// d h_i / d x_j, as stored.
  const HomotopyPoly& gradient_polynomial(int i, int j) const;
  /// d^2 h_i / d x_j d x_k, as stored (the same object for (j,k) and (k,j)).
  const HomotopyPoly& hessian_polynomial(int i, int j, int k) const;

  // Grouped form used by the evaluators: x-exponents mapped to the
  // coefficient polynomial in t.
  struct Compiled {
    std::vector<std::vector<int>> exponents;
    std::vector<std::vector<Complex>> t_coefficients;
  };
  const Compiled& compiled_equation(int i) const { return eqs_[static_cast<std::size_t>(i)]; }
  const Compiled& compiled_gradient(int i, int j) const;
  const Compiled& compiled_hessian(int i, int j, int k) const;
  const std::vector<int>& min_exponents() const { return min_exp_; }
  const std::vector<int>& max_exponents() const { return max_exp_; }

 private:
  std::size_t hessian_index(int i, int j, int k) const;

  int n_;
  bool toric_;
  int max_t_degree_ = 0;
  std::vector<HomotopyPoly> polys_;
  std::vector<HomotopyPoly> grad_polys_;
  std::vector<HomotopyPoly> hess_polys_;
  std::vector<Compiled> eqs_;
  std::vector<Compiled> grads_;
  std::vector<Compiled> hess_;
  std::vector<int> min_exp_;
  std::vector<int> max_exp_;
};

namespace polysys {

ComplexVector evaluate(const Homotopy& h, const ComplexVector& x, Complex t);
ComplexMatrix jacobian(const Homotopy& h, const ComplexVector& x, Complex t);
/// The n Hessians of the individual equations with respect to x. Each is
/// complex symmetric: the upper triangle is computed and mirrored.
std::vector<ComplexMatrix> hessians(const Homotopy& h, const ComplexVector& x, Complex t);

/// G(x, t) = H(x, t + t_star), re-expanded binomially.
Homotopy shift(const Homotopy& h, Complex t_star);

/// H(xs(s), t_offset + s) truncated at order w. With t_offset = 0 this is the
/// plain substitution; a nonzero offset is the same as substituting into
/// shift(h, t_offset) without building the shifted system.
SeriesVector evaluate_series(const Homotopy& h, const SeriesVector& xs, std::size_t w,
                             Complex t_offset = Complex(0.0, 0.0));
SeriesMatrix jacobian_series(const Homotopy& h, const SeriesVector& xs, std::size_t w,
                             Complex t_offset = Complex(0.0, 0.0));

/// Relative backward error of x as a solution of H(., t):
/// mean over i of |h_i(x)| / (h_i,abs(|x|) + 1), where h_i,abs takes the
/// moduli of the coefficients of h_i(., t).
double relative_residual(const Homotopy& h, const ComplexVector& x, Complex t);

}  // namespace polysys
}  // namespace padetrack
