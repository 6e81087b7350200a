#include "nf/model.hpp"

#include <algorithm>
#include <cmath>

#include "nf/errors.hpp"
#include "nf/quadrature.hpp"

namespace nf {
namespace {

constexpr double kExpClamp = 700.0;
constexpr double kMomentTol = 1e-10;

double clamped_exp(double x) {
  return std::exp(std::clamp(x, -kExpClamp, kExpClamp));
}

// Truncation radius so the dropped tail of |J(z)| z^n is < 1e-12.
double truncation_radius(const SpatialKernel& k, int n) {
  if (k.variant == KernelVariant::Gaussian) {
    const double s = std::max(k.sigma_e(), k.sigma_i());
    return s * (10.0 + 2.0 * n);
  }
  const double rho = std::min(1.0, k.r);
  return (60.0 + 10.0 * n) / rho;
}

double quadrature_moment(const SpatialKernel& k, int n) {
  const double Z = truncation_radius(k, n);
  auto f = [&](double z) { return kernel_eval(k, z) * std::pow(z, n); };
  // even integrand: integrate the half line and double
  return 2.0 * quad::integrate_or_throw(f, 0.0, Z, 0.5 * kMomentTol);
}

// Antiderivative of the MexicanHatExp half-line profile
// f(z) = (a_e/2)e^{-z} - (a_i r/2)e^{-rz} on z >= 0.
double mexhat_half_integral(const SpatialKernel& k, double z) {
  return 0.5 * k.a_e * (1.0 - std::exp(-z)) - 0.5 * k.a_i * (1.0 - std::exp(-k.r * z));
}

}  // namespace

std::string to_string(KernelVariant v) {
  return v == KernelVariant::MexicanHatExp ? "mexican_hat_exp" : "gaussian";
}

void ModelParams::validate() const {
  auto positive = [](double x, const char* name) {
    if (!(x > 0.0)) throw ConfigError(std::string(name) + " must be positive");
  };
  positive(alpha, "alpha");
  positive(tau, "tau");
  positive(nu, "nu");
  positive(c, "c");
  positive(r, "r");
  positive(gain, "gain");
  if (a_e < 0.0) throw ConfigError("a_e must be non-negative");
  if (a_i < 0.0) throw ConfigError("a_i must be non-negative");
  if (a_e == 0.0 && a_i == 0.0)
    throw ConfigError("a_e and a_i must not both be zero");
  if (!std::isfinite(E) || !std::isfinite(I0))
    throw ConfigError("E and I0 must be finite");
}

double SpatialKernel::sigma_e() const { return std::sqrt(2.0); }
double SpatialKernel::sigma_i() const { return std::sqrt(2.0) / r; }

double equilibrium(const ModelParams& p) { return p.tau * p.E; }

double transfer(double v, const ModelParams& p) {
  return 1.0 / (1.0 + clamped_exp(-p.gain * (v - p.theta)));
}

double transfer_derivative(double v, const ModelParams& p) {
  const double f = transfer(v, p);
  return p.gain * f * (1.0 - f);
}

double kernel_eval(const SpatialKernel& k, double z) {
  const double az = std::abs(z);
  if (k.variant == KernelVariant::MexicanHatExp) {
    return 0.5 * k.a_e * std::exp(-az) - 0.5 * k.a_i * k.r * std::exp(-k.r * az);
  }
  const double se = k.sigma_e(), si = k.sigma_i();
  const double inv_sqrt2pi = 0.3989422804014326779;
  return k.a_e * inv_sqrt2pi / se * std::exp(-0.5 * az * az / (se * se)) -
         k.a_i * inv_sqrt2pi / si * std::exp(-0.5 * az * az / (si * si));
}

double kernel_moment(const SpatialKernel& k, int n) {
  if (n < 0) throw ConfigError("kernel moment order must be non-negative");
  if (k.variant == KernelVariant::MexicanHatExp && n <= 2) {
    const double r = k.r;
    switch (n) {
      case 0: return k.a_e - k.a_i;
      case 1: return (r * k.a_e - k.a_i) / r;
      default: return 2.0 * (r * r * k.a_e - k.a_i) / (r * r);
    }
  }
  return quadrature_moment(k, n);
}

double kernel_abs_integral(const SpatialKernel& k) {
  if (k.variant == KernelVariant::MexicanHatExp) {
    const double ae = k.a_e, ai = k.a_i, r = k.r;
    const double total = mexhat_half_integral(k, 1e300);  // = (ae-ai)/2
    // Half-line sign change of (ae/2)e^{-z} = (ai r/2)e^{-rz}:
    //   z* = ln(ae/(ai r))/(1-r), valid when it lands strictly inside (0,inf).
    double zstar = -1.0;
    if (ae > 0.0 && ai > 0.0 && r != 1.0) {
      const double z = std::log(ae / (ai * r)) / (1.0 - r);
      if (z > 0.0 && std::isfinite(z)) zstar = z;
    }
    if (zstar < 0.0) return 2.0 * std::abs(total);  // single-signed half line
    const double head = mexhat_half_integral(k, zstar);
    return 2.0 * (std::abs(head) + std::abs(total - head));
  }
  // Gaussian: sign change in closed form, erf-free pieces via quadrature.
  const double se = k.sigma_e(), si = k.sigma_i();
  double zstar = -1.0;
  if (k.a_e > 0.0 && k.a_i > 0.0 && se != si) {
    const double num = 2.0 * std::log((k.a_e * si) / (k.a_i * se));
    const double den = 1.0 / (si * si) - 1.0 / (se * se);
    const double z2 = num / den;
    if (z2 > 0.0 && std::isfinite(z2)) zstar = std::sqrt(z2);
  }
  const double Z = truncation_radius(k, 0);
  auto f = [&](double z) { return kernel_eval(k, z); };
  if (zstar <= 0.0 || zstar >= Z) {
    return 2.0 * std::abs(quad::integrate_or_throw(f, 0.0, Z, 0.5 * kMomentTol));
  }
  const double head = quad::integrate_or_throw(f, 0.0, zstar, 0.5 * kMomentTol);
  const double tail = quad::integrate_or_throw(f, zstar, Z, 0.5 * kMomentTol);
  return 2.0 * (std::abs(head) + std::abs(tail));
}

DerivedQuantities derived(const ModelParams& p) {
  p.validate();
  DerivedQuantities d;
  d.v0 = equilibrium(p);
  d.Fprime_v0 = transfer_derivative(d.v0, p);
  d.beta = p.alpha * p.c * p.tau * d.Fprime_v0;
  const SpatialKernel k = SpatialKernel::from(p);
  d.J0 = kernel_moment(k, 0);
  d.J1 = kernel_moment(k, 1);
  d.J2 = kernel_moment(k, 2);
  d.abs_integral = kernel_abs_integral(k);
  d.D = std::abs(d.beta) * d.abs_integral;
  return d;
}

}  // namespace nf
