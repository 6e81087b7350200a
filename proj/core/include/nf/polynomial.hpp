#pragma once

#include <complex>
#include <vector>

namespace nf {

/// Real-coefficient polynomial, coefficients in ascending degree order.
class RealPolynomial {
public:
  RealPolynomial() = default;
  explicit RealPolynomial(std::vector<double> coeffs) : c_(std::move(coeffs)) {}

  const std::vector<double>& coeffs() const { return c_; }
  int degree() const;  // after trimming trailing ~zero coefficients

  double operator()(double x) const;
  std::complex<double> operator()(std::complex<double> x) const;

  RealPolynomial derivative() const;

  /// Largest |c_i x^i| at x; the scale used for normalized residuals.
  double monomial_scale(std::complex<double> x) const;

  /// Residual |p(x)| / max_i |c_i x^i| (scale-free).
  double normalized_residual(std::complex<double> x) const;

  /// All complex roots: companion-matrix eigenvalues plus one Newton polish
  /// per root. Trailing zero coefficients are trimmed; leading zero roots
  /// (x=0) are returned explicitly. Throws NumericError on an empty or
  /// all-zero coefficient list.
  std::vector<std::complex<double>> roots() const;

  /// Real roots with |Im| below tol relative to the root magnitude.
  std::vector<double> real_roots(double imag_tol = 1e-8) const;

private:
  std::vector<double> c_;
};

RealPolynomial multiply(const RealPolynomial& a, const RealPolynomial& b);

}  // namespace nf
