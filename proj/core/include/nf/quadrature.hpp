#pragma once

#include <functional>

namespace nf::quad {

struct Result {
  double value = 0.0;
  double error_estimate = 0.0;  // achieved absolute error bound
  bool converged = false;
  int subdivisions = 0;
};

// Adaptive Gauss-Kronrod 7/15 on [a, b] to an absolute tolerance.
// Splits the worst interval first; caps at max_subdiv intervals.
Result integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol, int max_subdiv = 2000);

// As integrate(), but throws NumericError carrying the achieved tolerance
// when the target is not met.
double integrate_or_throw(const std::function<double(double)>& f, double a,
                          double b, double abs_tol);

}  // namespace nf::quad
