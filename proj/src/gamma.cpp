#include "lfq/gamma.hpp"

#include "lfq/error.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/cos_pi.hpp>
#include <boost/math/special_functions/sin_pi.hpp>

#include <cmath>
#include <sstream>

namespace lfq {

namespace {

constexpr double kPi = boost::math::constants::pi<double>();
constexpr double kShift = 16.0;

// B_{2k} / (2k (2k - 1)), k = 1..10
constexpr double kStirling[] = {1.0 / 12,          -1.0 / 360,         1.0 / 1260,         -1.0 / 1680,
                                1.0 / 1188,        -691.0 / 360360,    1.0 / 156,          -3617.0 / 122400,
                                43867.0 / 244188,  -174611.0 / 125400};

bool is_pole(cplx z) {
  if (z.imag() != 0 || z.real() > 0) return false;
  return z.real() == std::round(z.real());
}

}  // namespace

cplx sin_pi(cplx z) {
  const double x = z.real(), y = z.imag();
  return {boost::math::sin_pi(x) * std::cosh(kPi * y), boost::math::cos_pi(x) * std::sinh(kPi * y)};
}

cplx cos_pi(cplx z) {
  const double x = z.real(), y = z.imag();
  return {boost::math::cos_pi(x) * std::cosh(kPi * y), -boost::math::sin_pi(x) * std::sinh(kPi * y)};
}

cplx log_gamma_right(cplx z) {
  cplx prod = 1.0;
  while (z.real() < kShift) {
    prod *= z;
    z += 1.0;
  }
  const cplx inv = 1.0 / z, inv2 = inv * inv;
  cplx series = 0.0, pw = inv;
  for (double c : kStirling) {
    series += c * pw;
    pw *= inv2;
  }
  return (z - 0.5) * std::log(z) - z + 0.5 * std::log(2 * kPi) + series - std::log(prod);
}

cplx gamma_complex(cplx z) {
  if (is_pole(z)) {
    std::ostringstream os;
    os << "Gamma pole at z = " << z.real();
    throw ComputeError(os.str());
  }
  if (z.real() < 0.5) return kPi / (sin_pi(z) * std::exp(log_gamma_right(1.0 - z)));
  return std::exp(log_gamma_right(z));
}

cplx gamma_n(int n, cplx z) {
  if (n != 0 && n != 1) throw Error("gamma_n index must be 0 or 1");
  return std::sqrt(2 / kPi) * gamma_complex(z) * cos_pi((static_cast<double>(n) - z) / 2.0);
}

cplx beta(cplx a, cplx b) {
  const cplx s = a + b;
  if (a.real() >= 0.5 && b.real() >= 0.5) return std::exp(log_gamma_right(a) + log_gamma_right(b) - log_gamma_right(s));
  if (is_pole(s)) return 0.0;
  return gamma_complex(a) * gamma_complex(b) / gamma_complex(s);
}

}  // namespace lfq
