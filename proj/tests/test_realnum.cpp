#include "oracles.hpp"

#include "lfq/edge.hpp"
#include "lfq/error.hpp"
#include "lfq/gamma.hpp"
#include "lfq/kinematics.hpp"
#include "lfq/quadrature.hpp"
#include "lfq/realnum.hpp"
#include "lfq/triangulation.hpp"

#include <doctest.h>

#include <boost/math/constants/constants.hpp>

using namespace lfq;

namespace {

constexpr double kPi = boost::math::constants::pi<double>();

double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

double beta_real(double a, double b) { return std::tgamma(a) * std::tgamma(b) / std::tgamma(a + b); }

std::vector<int> signs_41() {
  const Triangulation t41 = *builtin("4_1");
  std::vector<int> s;
  for (const auto& t : t41.tets) s.push_back(t.sign);
  return s;
}

}  // namespace

TEST_CASE("gamma_complex: reference values") {
  CHECK(rel(gamma_complex(0.5), std::sqrt(kPi)) < 1e-14);
  CHECK(rel(gamma_complex(1.0), 1.0) < 1e-14);
  CHECK(std::abs(std::abs(gamma_complex(cplx(0.5, 1))) - std::sqrt(kPi / std::cosh(kPi))) < 1e-14);
  // Gamma(1 + i), tabulated.
  CHECK(rel(gamma_complex(cplx(1, 1)), cplx(0.49801566811835604, -0.15494982830181069)) < 1e-13);
  // Real axis against the C library, including the reflected half-plane.
  for (double x : {-4.3, -2.5, -0.7, 0.1, 0.9, 3.3, 7.25, 9.9})
    CHECK(std::abs(gamma_complex(x).real() / std::tgamma(x) - 1) < 1e-13);
  // Recurrence on the test strip.
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> re(-9.5, 9.5), im(-50, 50);
  for (int k = 0; k < 200; ++k) {
    const cplx z(re(rng), im(rng));
    CHECK(rel(gamma_complex(z + 1.0), z * gamma_complex(z)) < 1e-12);
  }
  CHECK_THROWS_AS(gamma_complex(0.0), ComputeError);
  CHECK_THROWS_AS(gamma_complex(-3.0), ComputeError);
}

TEST_CASE("gamma_n: normalization and inversion") {
  CHECK(rel(gamma_n(0, 0.5), 1.0) < 1e-14);
  CHECK(rel(gamma_n(1, 0.3) * gamma_n(1, 0.7), 1.0) < 1e-12);
  CHECK(rel(gamma_n(1, 0.5) * gamma_n(1, 0.5), 1.0) < 1e-12);
  const RealSuite s = gamma_inversion_suite(1000, 11);
  CHECK(s.samples == 1000);
  CHECK(s.ok());
}

TEST_CASE("beta and trig helpers") {
  CHECK(rel(beta(2.0, 3.0), 1.0 / 12) < 1e-14);
  CHECK(std::abs(sin_pi(cplx(3, 0))) < 1e-15);
  CHECK(std::abs(cos_pi(cplx(0.5, 0))) < 1e-15);
}

TEST_CASE("signed logarithms") {
  const SignedLog x = SignedLog::from_real(-2.5), y = SignedLog::from_real(0.4);
  CHECK(x.eps == 1);
  CHECK(std::abs(x.to_real() + 2.5) < 1e-14);
  CHECK(std::abs((x * y).to_real() + 1.0) < 1e-14);
  CHECK(std::abs(x.pow(3).to_real() + 15.625) < 1e-12);
  CHECK(std::abs(std::abs(pairing(x, y)) - 1) < 1e-15);
  CHECK(std::abs(pairing(x, SignedLog::from_real(-1)) + 1.0) < 1e-15);
}

TEST_CASE("angle triples") {
  const RealAngleTriple t = RealAngleTriple::from(0.2, 0.3, 2, -4);
  CHECK(std::abs(t.bdot - 0.5) < 1e-15);
  CHECK(std::abs(t.addot * t.bddot * t.cddot + 1) < 1e-15);
  const RealAngleTriple r = t.rotated();
  CHECK(r.adot == t.bdot);
  CHECK(r.cdot == t.adot);
  CHECK_THROWS_AS(RealAngleTriple::from(0.6, 0.5).validate(), Error);
}

TEST_CASE("h_ac: closed forms") {
  const RealAngleTriple t = RealAngleTriple::from(1.0 / 3, 1.0 / 3);
  const HacForms h = h_ac({0, 0}, {0, 0}, t);
  CHECK(rel(h.triple_beta, h.gamma_product) < 1e-12);
  // Independent value: B(1/3,1/3) * 3 at the symmetric point.
  CHECK(rel(h.triple_beta, 3 * beta_real(1.0 / 3, 1.0 / 3)) < 1e-12);
  const HacSuite s = h_ac_suite(1000, 3);
  CHECK(s.triple_vs_gamma.ok());
  CHECK(s.bc_vs_gamma.ok());
  CHECK(s.cyclic.ok());
  // The BC form with b in the second argument is a different function.
  CHECK(s.bc_printed_vs_gamma.max_residual > 1e-3);
  CHECK_THROWS_AS(h_ac({0, 0}, {0, 0}, RealAngleTriple::from(0.7, 0.5)), Error);
}

TEST_CASE("mb_41: integrand and contour") {
  const auto band = contour_band_41(0, 0);
  CHECK(band.first == 0);
  CHECK(band.second == 0.5);
  const cplx v = mb_41_integrand(0.25, 0, 0);
  CHECK(std::abs(v.imag()) < 1e-14);
  CHECK(v.real() > 0);
  CHECK(rel(v, 2 * std::pow(beta_real(0.25, 0.25), 2)) < 1e-13);
  MbOptions bad;
  bad.abscissa = 0.75;
  CHECK_THROWS_AS(mb_41(0, 0, bad), Error);
  CHECK_THROWS(contour_band_41(1.5, 0));
}

TEST_CASE("4_1: Mellin-Barnes, period and alternative period") {
  const double oracle = oracle::period_41_oracle();
  CHECK(std::abs(oracle - oracle::kPrinted41) < 1e-6);
  const QuadratureResult mb = mb_41(0, 0), per = period_41(0, 0), alt = period_41_alt(0, 0);
  CHECK(std::abs(mb.real() - oracle::kPrinted41) < 1e-6);
  CHECK(std::abs(mb.real() - per.real()) < 1e-8);
  CHECK(std::abs(per.real() - oracle) < 1e-10);
  CHECK(std::abs(alt.real() - per.real()) < 1e-6);
  CHECK(mb.abs_error < 1e-8);
  CHECK(mb.evaluations > 0);
  // Abscissa shift inside the band and step halving.
  MbOptions shifted;
  shifted.abscissa = 0.15;
  CHECK(std::abs(mb_41(0, 0, shifted).real() - mb.real()) < 1e-9);
  MbOptions fine;
  fine.step = 0.01;
  CHECK(std::abs(mb_41(0, 0, fine).real() - mb.real()) < 1e-9);
}

TEST_CASE("4_1 away from the origin") {
  CHECK(std::abs(mb_41(0.1, 0).real() - period_41(0.1, 0).real()) < 1e-6);
  CHECK(std::abs(period_41_alt(0.1, 0).real() - period_41(0.1, 0).real()) < 1e-6);
  CHECK(std::abs(mb_41(0.1, 0.05).real() - period_41(0.1, 0.05).real()) < 1e-6);
  CHECK(std::abs(mb_41(-0.1, 0.1).real() - period_41(-0.1, 0.1).real()) < 1e-6);
  // The |R - t| numerator differs once lambda-dot is nonzero.
  CHECK(std::abs(period_41_alt(0.1, 0, AltForm::printed).real() - period_41(0.1, 0).real()) > 1e-2);
  CHECK_THROWS_AS(check_period_convergence_41(0, 0.9), ComputeError);
}

TEST_CASE("4_1 Weierstrass data") {
  const WeierstrassData w = weierstrass_41();
  CHECK(w.substitution_ok);
  CHECK(w.A == rat(-1, 3));
  CHECK(w.B == rat(322, 27));
  CHECK(w.j == rat(-1, 15));
  CHECK(w.normal == UPoly({rat(322, 27), rat(1, 3), 0, -1}));
  CHECK(w.quartic_j == quartic_j_invariant(4, 0, -7, 0, 4));
  CHECK(w.quartic_j == rat(13997521, 225));
  // The quartic of an elliptic curve in Weierstrass form has the same j.
  CHECK(quartic_j_invariant(0, 1, 0, rat(-1, 3), rat(322, 27)) == rat(-1, 15));
}

TEST_CASE("5_2: curve and branch") {
  const auto roots = real_roots(p52_discriminant());
  REQUIRE(roots.size() == 3);
  CHECK(std::abs(roots[0] + 6.44292) < 1e-5);
  CHECK(std::abs(roots[1]) < 1e-12);
  CHECK(std::abs(roots[2] - 1) < 1e-12);
  const Branch52 b = branch_52(0.5);
  CHECK(std::abs(p52_eval(b.z1, b.z2)) < 1e-12);
  CHECK(std::abs(b.z3 - (1 - b.z1 - b.z2 + b.z1 * b.z2) / (b.z1 * b.z2)) < 1e-12);
  CHECK(std::abs(b.w1 - (1 - b.z1)) < 1e-15);
  CHECK(std::abs(b.w3 * b.w3 - b.w1 * b.w2) < 1e-12);
  CHECK_THROWS_AS(branch_52(1.5), Error);
}

TEST_CASE("5_2 constant") {
  const QuadratureResult k = hks_52();
  CHECK(std::abs(k.real() - oracle::kPrintedHks) < 2e-4);
  CHECK(k.abs_error < 1e-8);
}

TEST_CASE("Fourier transform of Gamma") {
  CHECK(fourier_gamma_check(1, 0).residual < 1e-10);
  CHECK(fourier_gamma_check(0.5, 0.3).residual < 1e-8);
  const auto a = fourier_gamma_check(2, 0.3), b = fourier_gamma_check(2, -0.3);
  CHECK(std::abs(a.integral.value - std::conj(b.integral.value)) < 1e-12);
  CHECK(fourier_gamma_suite(20, 4).ok());
  CHECK_THROWS_AS(fourier_gamma_check(-1, 0), Error);
}

TEST_CASE("quadrature drivers") {
  const QuadratureResult q = tanh_sinh([](double x, double) { return 1 / std::sqrt(x); }, 0, 1);
  CHECK(std::abs(q.real() - 2) < 1e-12);
  const QuadratureResult t = trapezoid([](double x) { return cplx(std::exp(-x * x)); }, -10, 10, 0.1);
  CHECK(std::abs(t.real() - std::sqrt(kPi)) < 1e-13);
  CHECK(t.abs_error < 1e-12);
  CompensatedSum s;
  s.add(1e16);
  s.add(1.0);
  s.add(-1e16);
  CHECK(s.value().real() == 1.0);
}

TEST_CASE("edge state-integrand for 4_1") {
  const NZMatrices nz = nz_matrices(*builtin("4_1"));
  const auto signs = signs_41();
  // x_1 = 1 at lambda-dot = mu-dot = 0 reproduces the contour integrand at z = 1/4.
  const EdgeReduction41 r = edge_reduction_41(nz, signs, 0.25, 0, 0, 0);
  CHECK(r.residual < 1e-9);
  CHECK(rel(r.mb_term, mb_41_integrand(0.25, 0, 0)) < 1e-12);
  for (double ell : {-3.0, -0.4, 1.1, 5.0})
    CHECK(edge_reduction_41(nz, signs, 0.2, ell, 0.1, 0.05).residual < 1e-9);
  // Dropped pairings multiply to a phase.
  const auto theta = angles_41(0.25, 0, 0);
  for (int eps : {0, 1}) {
    const EdgeIntegrand e = edge_state_integrand(nz, signs, theta, {{eps, 2.3}, {0, 0}});
    CHECK(std::abs(std::abs(e.dropped_phase) - 1) < 1e-14);
  }
  // A non-positive b-dot is outside the regime.
  std::vector<RealAngleTriple> bad = theta;
  bad[0].bdot = 0;
  bad[0].adot = 1 - bad[0].cdot;
  CHECK_THROWS_AS(edge_state_integrand(nz, signs, bad, {{0, 0}, {0, 0}}), Error);
}
