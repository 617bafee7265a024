#pragma once
// Real-field numerics: signed logarithms, the h_{a,c} closed forms, the 4_1 Mellin-Barnes
// and period integrals, the 5_2 constant, and the Fourier transform of Gamma.

#include "lfq/exact.hpp"
#include "lfq/gamma.hpp"
#include "lfq/quadrature.hpp"
#include "lfq/upoly.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lfq {

// x = (-1)^eps exp(ell / 4 pi).
struct SignedLog {
  int eps = 0;
  double ell = 0;

  static SignedLog from_real(double x);
  double to_real() const;
  SignedLog operator*(const SignedLog& o) const;
  SignedLog pow(int k) const;
};

// <x, y> = (-1)^{eps_x eps_y} exp(i ell_x ell_y / 4 pi).
cplx pairing(const SignedLog& x, const SignedLog& y);

struct RealAngleTriple {
  double adot = 0, bdot = 0, cdot = 0;
  double addot = 1, bddot = -1, cddot = 1;

  // bdot = 1 - adot - cdot, bddot = -1 / (addot cddot).
  static RealAngleTriple from(double adot, double cdot, double addot = 1, double cddot = 1);
  // Throws Error unless all dot parts lie in (0, 1), they sum to 1 and the ddot parts multiply to -1.
  void validate() const;
  // Roles (a, b, c) -> (b, c, a).
  RealAngleTriple rotated() const;
};

struct HacForms {
  cplx triple_beta;    // B(a-il_x, c-il_y) + (-1)^{e_x} B(a-il_x, b+il_xy) + (-1)^{e_y} B(c-il_y, b+il_xy)
  cplx gamma_product;  // sqrt(2 pi) (-1)^{e_x e_y} G_{e_x}(a-il_x) G_{e_y}(c-il_y) G_{e_xy}(b+il_xy)
  cplx bc;             // 2 BC(pi/2 (e_x+il_x-a), pi/2 (e_y+il_y-c)) B(a-il_x, c-il_y)
  cplx bc_printed;     // the same with b in place of c in the second BC argument
  cplx phase;          // <x, c-ddot> / <y, a-ddot>

  cplx full() const { return phase * gamma_product; }
};

HacForms h_ac(const SignedLog& x, const SignedLog& y, const RealAngleTriple& t);

// --- 4_1 -------------------------------------------------------------------

// Pole-free band of abscissas Re z for the Mellin-Barnes contour; throws ComputeError when empty.
std::pair<double, double> contour_band_41(double lambda_dot, double mu_dot);

// B(z, z-l) B(z+m, z+m-l) cos^2(pi l/2) / (cos(pi(z-l/2)) cos(pi(z+m-l/2))).
cplx mb_41_integrand(cplx z, double lambda_dot, double mu_dot);

struct MbOptions {
  std::optional<double> abscissa;  // default: midpoint of the band
  double step = 0;                 // default: min(0.05, band half-width / 5)
  double half_length = 8;          // |Im z| cut-off
};

// (1 / 2 pi i) times the contour integral of mb_41_integrand.
QuadratureResult mb_41(double lambda_dot, double mu_dot, const MbOptions& opt = {});

// Throws ComputeError naming the violated local exponent when the period integral diverges.
void check_period_convergence_41(double lambda_dot, double mu_dot);

QuadratureResult period_41(double lambda_dot, double mu_dot, double tol = 1e-13);

enum class AltForm { derived, printed };
// Integral over t in R of |R - c t|^l / (|t - 1/t|^{2m+l} R), R = sqrt(1 - 7t^2/4 + t^4),
// with c = 1/2 (derived) or c = 1 (printed).
QuadratureResult period_41_alt(double lambda_dot, double mu_dot, AltForm form = AltForm::derived,
                               double tol = 1e-13);

struct WeierstrassData {
  UPoly cubic;    // y^2 = (1-x)(1-x+4x^2)
  UPoly normal;   // Y^2 in X after X = 4x - 5/3, Y = 4y
  bool substitution_ok = false;
  Rat A, B;       // Y^2 = X^3 + A X + B after X -> -X
  Rat j;
  Rat quartic_j;  // j-invariant of y^2 = 4 - 7t^2 + 4t^4
};
WeierstrassData weierstrass_41();

// j-invariant of y^2 = a t^4 + b t^3 + c t^2 + d t + e.
Rat quartic_j_invariant(const Rat& a, const Rat& b, const Rat& c, const Rat& d, const Rat& e);

// --- 5_2 -------------------------------------------------------------------

// Coefficients in z2 of the curve a z2^3 + b z2^2 + c z2 + d = 0, as polynomials in z1.
std::vector<UPoly> p52_coefficients();
double p52_eval(double z1, double z2);
UPoly p52_discriminant();

struct Branch52 {
  double z1, z2, z3, w1, w2, w3;
};
// Real-positive branch over z1 in (0,1); w1 may be passed separately for accuracy near z1 = 1.
Branch52 branch_52(double z1, std::optional<double> w1 = std::nullopt);

QuadratureResult hks_52(double tol = 1e-12);

// --- Fourier transform of Gamma --------------------------------------------

struct FourierGammaCheck {
  QuadratureResult integral;
  cplx gamma;
  double residual = 0;
};
FourierGammaCheck fourier_gamma_check(double a, double x);

// --- seeded identity suites ------------------------------------------------

struct RealSuite {
  std::string name;
  std::size_t samples = 0;
  double tolerance = 0;
  double max_residual = 0;
  std::string worst;  // sample attaining max_residual
  bool ok() const { return samples > 0 && max_residual <= tolerance; }
};

// Gamma_n(z) Gamma_n(1 - z) = 1 for n in {0, 1}, |Re z| <= 5, |Im z| <= 2.
RealSuite gamma_inversion_suite(std::size_t samples, std::uint64_t seed, double tol = 1e-12);

struct HacSuite {
  RealSuite triple_vs_gamma;      // triple-beta sum against the Gamma product
  RealSuite bc_vs_gamma;          // BC-factored form
  RealSuite bc_printed_vs_gamma;  // BC form with b in the second argument
  RealSuite cyclic;               // h_{a,c}(x, z) = h_{b,a}(y, x), xyz = 1, phase included
};
// Residuals are relative to max(1, |Gamma product|).
HacSuite h_ac_suite(std::size_t samples, std::uint64_t seed, double tol = 1e-10);

// a in [0.3, 3], x in [-1, 1].
RealSuite fourier_gamma_suite(std::size_t samples, std::uint64_t seed, double tol = 1e-8);

}  // namespace lfq
