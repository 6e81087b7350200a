#pragma once

#include <string>

namespace nf {

enum class KernelVariant { MexicanHatExp, Gaussian };

std::string to_string(KernelVariant v);

/// Full parameter set of the delayed neural field with exponential memory
/// kernel. Time constants are in field time units, nu in space/time.
struct ModelParams {
  double alpha = 1.0;   // memory decay rate of the exponential kernel
  double tau = 0.75;    // synaptic (leak) time constant
  double c = 15.0;      // coupling scale
  double nu = 1.0;      // transmission speed
  double E = 0.275;     // external input current
  double I0 = 0.0;      // internal input current
  double a_e = 10.0;    // excitatory synaptic weight
  double a_i = 2.0;     // inhibitory synaptic weight
  double r = 5.0;       // ratio of excitatory to inhibitory spatial range
  double gain = 1.8;    // transfer steepness
  double theta = 3.0;   // transfer threshold
  KernelVariant kernel = KernelVariant::MexicanHatExp;

  // Throws ConfigError naming the violated invariant.
  void validate() const;
};

/// Spatial connectivity J(z). MexicanHatExp is
///   J(z) = (a_e/2) e^{-|z|} - (a_i r/2) e^{-r|z|};
/// the Gaussian variant matches each component's mass and second moment
/// (sigma_e = sqrt(2), sigma_i = sqrt(2)/r).
struct SpatialKernel {
  KernelVariant variant = KernelVariant::MexicanHatExp;
  double a_e = 10.0;
  double a_i = 2.0;
  double r = 5.0;

  static SpatialKernel from(const ModelParams& p) {
    return SpatialKernel{p.kernel, p.a_e, p.a_i, p.r};
  }
  double sigma_e() const;  // Gaussian widths (second-moment matched)
  double sigma_i() const;
};

/// Scalar quantities derived from a parameter set, all per the linearization
/// around v0.
struct DerivedQuantities {
  double v0 = 0.0;         // equilibrium potential, tau*E
  double Fprime_v0 = 0.0;  // transfer derivative at v0
  double beta = 0.0;       // alpha*c*tau*F'(v0)
  double J0 = 0.0, J1 = 0.0, J2 = 0.0;
  double abs_integral = 0.0;  // integral of |J|
  double D = 0.0;             // |beta| * abs_integral
};

double equilibrium(const ModelParams& p);

// Sigmoid transfer and its derivative; exponent clamped at +-700 so values
// saturate instead of overflowing for |v| up to ~1e3 and far beyond.
double transfer(double v, const ModelParams& p);
double transfer_derivative(double v, const ModelParams& p);

double kernel_eval(const SpatialKernel& k, double z);

// Moments J_n = integral of J(z)|z|^n dz. Closed forms for MexicanHatExp
// n in {0,1,2}; adaptive quadrature (abs tol 1e-10) otherwise.
double kernel_moment(const SpatialKernel& k, int n);

// Integral of |J(z)| dz; piecewise-analytic where the sign change is in
// closed form, quadrature otherwise.
double kernel_abs_integral(const SpatialKernel& k);

DerivedQuantities derived(const ModelParams& p);

}  // namespace nf
