#include "lfq/realnum.hpp"

#include <cmath>
#include <random>
#include <sstream>

namespace lfq {

namespace {

void record(RealSuite& s, double residual, const std::string& where) {
  ++s.samples;
  if (!(residual <= s.max_residual) || s.samples == 1) {
    s.max_residual = std::isfinite(residual) ? std::max(s.max_residual, residual) : residual;
    s.worst = where;
  }
}

RealSuite make(const std::string& name, double tol) {
  RealSuite s;
  s.name = name;
  s.tolerance = tol;
  return s;
}

}  // namespace

RealSuite gamma_inversion_suite(std::size_t samples, std::uint64_t seed, double tol) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> re(-5, 5), im(-2, 2);
  RealSuite s = make("gamma_n inversion", tol);
  while (s.samples < samples) {
    const cplx z(re(rng), im(rng));
    if (std::abs(z.imag()) < 1e-3 && std::abs(z.real() - std::round(z.real())) < 1e-3) continue;
    for (int n : {0, 1}) {
      if (s.samples == samples) break;
      std::ostringstream os;
      os << "n=" << n << " z=" << z;
      record(s, std::abs(gamma_n(n, z) * gamma_n(n, 1.0 - z) - 1.0), os.str());
    }
  }
  return s;
}

HacSuite h_ac_suite(std::size_t samples, std::uint64_t seed, double tol) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0, 1), ell(-8, 8), ddot(0.2, 3);
  std::bernoulli_distribution bit(0.5);
  HacSuite out{make("h_ac triple-beta", tol), make("h_ac BC form", tol), make("h_ac BC form as printed", tol),
               make("h_ac cyclic symmetry", tol)};
  for (std::size_t k = 0; k < samples; ++k) {
    double a, c;
    do {
      a = 0.05 + 0.9 * unit(rng);
      c = 0.05 + 0.9 * unit(rng);
    } while (1 - a - c < 0.05);
    const double ad = bit(rng) ? ddot(rng) : -ddot(rng), cd = bit(rng) ? ddot(rng) : -ddot(rng);
    const RealAngleTriple t = RealAngleTriple::from(a, c, ad, cd);
    const SignedLog x{bit(rng), ell(rng)}, z{bit(rng), ell(rng)};
    const SignedLog y{(x.eps + z.eps) % 2, -x.ell - z.ell};
    std::ostringstream os;
    os << "a=" << a << " c=" << c << " x=(" << x.eps << "," << x.ell << ") z=(" << z.eps << "," << z.ell << ")";
    const HacForms h = h_ac(x, z, t);
    const double scale = std::max(1.0, std::abs(h.gamma_product));
    record(out.triple_vs_gamma, std::abs(h.triple_beta - h.gamma_product) / scale, os.str());
    record(out.bc_vs_gamma, std::abs(h.bc - h.gamma_product) / scale, os.str());
    record(out.bc_printed_vs_gamma, std::abs(h.bc_printed - h.gamma_product) / scale, os.str());
    const HacForms r = h_ac(y, x, t.rotated());
    record(out.cyclic, std::abs(h.full() - r.full()) / scale, os.str());
  }
  return out;
}

RealSuite fourier_gamma_suite(std::size_t samples, std::uint64_t seed, double tol) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ad(0.3, 3), xd(-1, 1);
  RealSuite s = make("fourier gamma", tol);
  for (std::size_t k = 0; k < samples; ++k) {
    const double a = ad(rng), x = xd(rng);
    std::ostringstream os;
    os << "a=" << a << " x=" << x;
    record(s, fourier_gamma_check(a, x).residual, os.str());
  }
  return s;
}

}  // namespace lfq
