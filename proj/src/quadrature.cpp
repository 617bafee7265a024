#include "lfq/quadrature.hpp"

#include "lfq/error.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <sstream>

namespace lfq {

namespace {

void two_sum(double& s, double& c, double v) {
  const double t = s + v;
  c += std::abs(s) >= std::abs(v) ? (s - t) + v : (v - t) + s;
  s = t;
}

std::string interval(double a, double b) {
  std::ostringstream os;
  os.precision(17);
  os << "[" << a << ", " << b << "]";
  return os.str();
}

}  // namespace

void CompensatedSum::add(cplx v) {
  two_sum(re_, cre_, v.real());
  two_sum(im_, cim_, v.imag());
}

QuadratureResult tanh_sinh(const EndpointIntegrand& f, double a, double b, double tol) {
  if (!(a < b)) throw Error("tanh_sinh: empty interval " + interval(a, b));
  thread_local boost::math::quadrature::tanh_sinh<double> rule;
  QuadratureResult out;
  std::size_t count = 0;
  double err = 0, l1 = 0;
  auto counted = [&](double x, double d) {
    ++count;
    const double v = f(x, d);
    if (!std::isfinite(v)) throw ComputeError("tanh_sinh: non-finite integrand at x = " + std::to_string(x));
    return v;
  };
  out.value = rule.integrate(counted, a, b, tol, &err, &l1);
  out.abs_error = err;
  out.evaluations = count;
  out.method = "tanh-sinh";
  out.domain = interval(a, b);
  return out;
}

QuadratureResult trapezoid(const std::function<cplx(double)>& f, double lo, double hi, double h) {
  if (!(lo < hi) || !(h > 0)) throw Error("trapezoid: bad interval or step");
  const auto n = static_cast<std::size_t>(std::ceil((hi - lo) / h));
  const double step = (hi - lo) / static_cast<double>(n);
  CompensatedSum coarse, fine;
  const cplx f_lo = f(lo), f_hi = f(hi);
  coarse.add(0.5 * (f_lo + f_hi));
  for (std::size_t k = 1; k < n; ++k) coarse.add(f(lo + step * static_cast<double>(k)));
  fine.add(coarse.value());
  for (std::size_t k = 0; k < n; ++k) fine.add(f(lo + step * (static_cast<double>(k) + 0.5)));
  QuadratureResult out;
  const cplx t_coarse = coarse.value() * step, t_fine = fine.value() * (step / 2);
  out.value = t_fine;
  out.abs_error = std::abs(t_fine - t_coarse) + std::abs(f_lo) + std::abs(f_hi);
  out.evaluations = 2 * n + 1;
  out.method = "trapezoid";
  out.domain = interval(lo, hi);
  return out;
}

}  // namespace lfq
