#pragma once
// Quadrature drivers shared by the real-field integrals.

#include "lfq/gamma.hpp"

#include <cstddef>
#include <functional>
#include <string>

namespace lfq {

struct QuadratureResult {
  cplx value = 0.0;
  double abs_error = 0;
  std::size_t evaluations = 0;
  std::string method;
  std::string domain;  // interval or contour description

  double real() const { return value.real(); }
};

// Neumaier-compensated complex accumulator.
class CompensatedSum {
 public:
  void add(cplx v);
  cplx value() const { return {re_ + cre_, im_ + cim_}; }

 private:
  double re_ = 0, im_ = 0, cre_ = 0, cim_ = 0;
};

// Integrand on a finite interval: f(x, d) with d the signed distance to the nearest
// endpoint (d = a - x <= 0 on the left half, d = b - x >= 0 on the right half).
using EndpointIntegrand = std::function<double(double, double)>;

// Double-exponential rule on [a, b].
QuadratureResult tanh_sinh(const EndpointIntegrand& f, double a, double b, double tol = 1e-13);

// Trapezoid rule for f on [lo, hi] with step h and again with h/2; value from the finer
// grid, error = |T(h) - T(h/2)| + |f(lo)| + |f(hi)| (truncation proxy for decaying tails).
QuadratureResult trapezoid(const std::function<cplx(double)>& f, double lo, double hi, double h);

}  // namespace lfq
