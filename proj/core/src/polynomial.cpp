#include "nf/polynomial.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "nf/errors.hpp"

namespace nf {
namespace {

// Trim trailing coefficients that are zero relative to the largest one.
std::vector<double> trimmed(const std::vector<double>& c) {
  double big = 0.0;
  for (double x : c) big = std::max(big, std::abs(x));
  if (big == 0.0) return {};
  size_t n = c.size();
  while (n > 0 && std::abs(c[n - 1]) < 1e-14 * big) --n;
  std::vector<double> out(c.begin(), c.begin() + n);
  return out;
}

}  // namespace

int RealPolynomial::degree() const {
  auto t = trimmed(c_);
  return t.empty() ? -1 : static_cast<int>(t.size()) - 1;
}

double RealPolynomial::operator()(double x) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::complex<double> RealPolynomial::operator()(std::complex<double> x) const {
  std::complex<double> acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RealPolynomial RealPolynomial::derivative() const {
  std::vector<double> d;
  for (size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<double>(i));
  return RealPolynomial(std::move(d));
}

double RealPolynomial::monomial_scale(std::complex<double> x) const {
  double scale = 0.0, ax = std::abs(x), p = 1.0;
  for (double ci : c_) {
    scale = std::max(scale, std::abs(ci) * p);
    p *= ax;
  }
  return scale;
}

double RealPolynomial::normalized_residual(std::complex<double> x) const {
  const double s = monomial_scale(x);
  if (s == 0.0) return 0.0;
  return std::abs((*this)(x)) / s;
}

std::vector<std::complex<double>> RealPolynomial::roots() const {
  std::vector<double> c = trimmed(c_);
  if (c.size() < 2) {
    if (c.empty()) throw NumericError("roots of zero polynomial");
    return {};  // nonzero constant
  }
  // Explicit zero roots for vanishing low-order coefficients.
  double big = 0.0;
  for (double x : c) big = std::max(big, std::abs(x));
  size_t nzero = 0;
  while (nzero + 1 < c.size() && std::abs(c[nzero]) < 1e-300 * big) ++nzero;
  std::vector<std::complex<double>> out(nzero, std::complex<double>(0.0, 0.0));

  const size_t n = c.size() - 1 - nzero;  // degree of the reduced polynomial
  if (n >= 1) {
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
    const double lead = c.back();
    for (size_t i = 0; i < n; ++i) companion(i, n - 1) = -c[nzero + i] / lead;
    for (size_t i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
    Eigen::EigenSolver<Eigen::MatrixXd> es(companion, /*computeEigenvectors=*/false);
    if (es.info() != Eigen::Success)
      throw NumericError("companion eigenvalue iteration did not converge");
    RealPolynomial p(c), d = p.derivative();
    for (size_t i = 0; i < n; ++i) {
      std::complex<double> z = es.eigenvalues()(i);
      // One Newton step; keep it only if it reduces the residual.
      const std::complex<double> dz = d(z);
      if (std::abs(dz) > 0.0) {
        const std::complex<double> z2 = z - p(z) / dz;
        if (std::abs(p(z2)) <= std::abs(p(z))) z = z2;
      }
      out.push_back(z);
    }
  }
  return out;
}

std::vector<double> RealPolynomial::real_roots(double imag_tol) const {
  std::vector<double> out;
  for (const auto& z : roots()) {
    if (std::abs(z.imag()) <= imag_tol * std::max(1.0, std::abs(z))) {
      out.push_back(z.real());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

RealPolynomial multiply(const RealPolynomial& a, const RealPolynomial& b) {
  const auto& ca = a.coeffs();
  const auto& cb = b.coeffs();
  if (ca.empty() || cb.empty()) return RealPolynomial{};
  std::vector<double> out(ca.size() + cb.size() - 1, 0.0);
  for (size_t i = 0; i < ca.size(); ++i)
    for (size_t j = 0; j < cb.size(); ++j) out[i + j] += ca[i] * cb[j];
  return RealPolynomial(std::move(out));
}

}  // namespace nf
