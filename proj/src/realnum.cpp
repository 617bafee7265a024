#include "lfq/realnum.hpp"

#include "lfq/error.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/tools/roots.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace lfq {

namespace {

constexpr double kPi = boost::math::constants::pi<double>();
const cplx kI{0.0, 1.0};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

// Substitutes x = (X + shift) / scale into p.
UPoly compose_affine(const UPoly& p, const Rat& shift, const Rat& scale) {
  const UPoly lin(std::vector<Rat>{shift / scale, Rat(1) / scale});
  UPoly acc;
  for (int k = p.degree(); k >= 0; --k) acc = acc * lin + UPoly(std::vector<Rat>{p[k]});
  return acc;
}

}  // namespace

// --- signed logarithms -----------------------------------------------------

SignedLog SignedLog::from_real(double x) {
  if (x == 0 || !std::isfinite(x)) throw Error("SignedLog: argument must be a finite nonzero real");
  return {x < 0 ? 1 : 0, 4 * kPi * std::log(std::abs(x))};
}

double SignedLog::to_real() const { return (eps ? -1.0 : 1.0) * std::exp(ell / (4 * kPi)); }

SignedLog SignedLog::operator*(const SignedLog& o) const {
  return {eps + o.eps - 2 * eps * o.eps, ell + o.ell};
}

SignedLog SignedLog::pow(int k) const { return {(eps * (k % 2 != 0 ? 1 : 0)), ell * k}; }

cplx pairing(const SignedLog& x, const SignedLog& y) {
  const double sign = (x.eps && y.eps) ? -1.0 : 1.0;
  return sign * std::exp(kI * (x.ell * y.ell / (4 * kPi)));
}

// --- angle triples and h_{a,c} ---------------------------------------------

RealAngleTriple RealAngleTriple::from(double adot, double cdot, double addot, double cddot) {
  if (addot == 0 || cddot == 0) throw Error("angle ddot parts must be nonzero");
  return {adot, 1 - adot - cdot, cdot, addot, -1 / (addot * cddot), cddot};
}

void RealAngleTriple::validate() const {
  for (double v : {adot, bdot, cdot})
    if (!(v > 0 && v < 1)) throw Error("angle out of regime: dot parts must lie in (0, 1), got " + fmt(v));
  if (std::abs(adot + bdot + cdot - 1) > 1e-12) throw Error("angle dot parts must sum to 1");
  if (std::abs(addot * bddot * cddot + 1) > 1e-12) throw Error("angle ddot parts must multiply to -1");
}

RealAngleTriple RealAngleTriple::rotated() const { return {bdot, cdot, adot, bddot, cddot, addot}; }

HacForms h_ac(const SignedLog& x, const SignedLog& y, const RealAngleTriple& t) {
  t.validate();
  const SignedLog xy = x * y;
  const cplx za = t.adot - kI * x.ell, zc = t.cdot - kI * y.ell, zb = t.bdot + kI * xy.ell;
  const double sx = x.eps ? -1.0 : 1.0, sy = y.eps ? -1.0 : 1.0;
  HacForms h;
  const cplx bac = beta(za, zc);
  h.triple_beta = bac + sx * beta(za, zb) + sy * beta(zc, zb);
  h.gamma_product = std::sqrt(2 * kPi) * ((x.eps && y.eps) ? -1.0 : 1.0) * gamma_n(x.eps, za) *
                    gamma_n(y.eps, zc) * gamma_n(xy.eps, zb);
  auto bc = [](cplx u, cplx v) { return cos_pi(u / 2.0) * cos_pi(v / 2.0) / cos_pi((u + v) / 2.0); };
  const cplx ux = static_cast<double>(x.eps) + kI * x.ell - t.adot;
  h.bc = 2.0 * bc(ux, static_cast<double>(y.eps) + kI * y.ell - t.cdot) * bac;
  h.bc_printed = 2.0 * bc(ux, static_cast<double>(y.eps) + kI * y.ell - t.bdot) * bac;
  h.phase = pairing(x, SignedLog::from_real(t.cddot)) / pairing(y, SignedLog::from_real(t.addot));
  return h;
}

// --- 4_1 Mellin-Barnes -----------------------------------------------------

std::pair<double, double> contour_band_41(double l, double m) {
  const double lo = std::max({0.0, l, -m, l - m});
  const double hi = std::min((1 + l) / 2, (1 + l) / 2 - m);
  if (!(lo < hi))
    throw ComputeError("contour pinched: no pole-free abscissa for lambda-dot = " + fmt(l) + ", mu-dot = " + fmt(m));
  return {lo, hi};
}

cplx mb_41_integrand(cplx z, double l, double m) {
  const double c = std::cos(kPi * l / 2);
  return beta(z, z - l) * beta(z + m, z + m - l) * (c * c) / (cos_pi(z - l / 2) * cos_pi(z + m - l / 2));
}

QuadratureResult mb_41(double l, double m, const MbOptions& opt) {
  const auto [lo, hi] = contour_band_41(l, m);
  const double c = opt.abscissa.value_or((lo + hi) / 2);
  if (!(c > lo && c < hi))
    throw Error("contour abscissa " + fmt(c) + " outside the pole-free band (" + fmt(lo) + ", " + fmt(hi) + ")");
  const double gap = std::min(c - lo, hi - c);
  const double h = opt.step > 0 ? opt.step : std::min(0.05, gap / 5);
  auto f = [&](double t) { return mb_41_integrand(cplx(c, t), l, m) / (2 * kPi); };
  QuadratureResult r = trapezoid(f, -opt.half_length, opt.half_length, h);
  r.domain = "Re z = " + fmt(c) + ", |Im z| <= " + fmt(opt.half_length);
  return r;
}

// --- 4_1 periods -----------------------------------------------------------

void check_period_convergence_41(double l, double m) {
  const double k = 2 * m + l;
  auto need = [&](bool ok, const std::string& where, const std::string& what) {
    if (!ok)
      throw ComputeError("period integral diverges at " + where + ": " + what + " (lambda-dot = " + fmt(l) +
                         ", mu-dot = " + fmt(m) + ")");
  };
  need(k > -1, "x = 1", "2 mu-dot + lambda-dot must exceed -1");
  need(k < 1, "x = 0", "2 mu-dot + lambda-dot must be below 1");
  need(l - 2 * m > -1, "x = 0", "lambda-dot - 2 mu-dot must exceed -1");
  need(2 * m - l > -1, "x = -infinity", "2 mu-dot - lambda-dot must exceed -1");
}

QuadratureResult period_41(double l, double m, double tol) {
  check_period_convergence_41(l, m);
  const double k = 2 * m + l, two_l = std::pow(2.0, l);
  // x = 1 - u^2 on u in (0, 1); ax = |x| = (1 - u)(1 + u). Evaluated in logs to survive
  // underflow of |x| near the endpoint u = 1.
  auto inner = [&](double u, double d) {
    const double one_minus_u = d > 0 ? d : 1 - u;
    const double ax = one_minus_u * (1 + u);
    const double s = std::hypot(u, 2 * ax);
    const double lax = std::log(ax), lu = std::log(u), lsu = std::log(s + u);
    const double t1 = l * (lu + std::log(4.0) - lsu) + (2 * l - k) * lax;
    const double t2 = l * (lu + lsu) - k * lax;
    return 2 / s * std::exp(2 * m * lu) * (std::exp(t1) + std::exp(t2)) / two_l;
  };
  // u = 1/v on v in (0, 1); X = -x v^2 = (1 - v)(1 + v).
  auto outer = [&](double v, double d) {
    const double one_minus_v = d > 0 ? d : 1 - v;
    const double ax = one_minus_v * (1 + v);
    const double s = std::hypot(v, 2 * ax);
    const double lax = std::log(ax), lsv = std::log(s + v);
    const double t1 = l * (std::log(4.0) - lsv) + (2 * l - k) * lax;
    const double t2 = l * lsv - k * lax;
    return 2 / s * std::exp((2 * m - l) * std::log(v)) * (std::exp(t1) + std::exp(t2)) / two_l;
  };
  QuadratureResult a = tanh_sinh(inner, 0, 1, tol), b = tanh_sinh(outer, 0, 1, tol);
  QuadratureResult r;
  r.value = a.value + b.value;
  r.abs_error = a.abs_error + b.abs_error;
  r.evaluations = a.evaluations + b.evaluations;
  r.method = "tanh-sinh";
  r.domain = "x in (-inf, 1), x = 1 - u^2, split at u = 1";
  return r;
}

QuadratureResult period_41_alt(double l, double m, AltForm form, double tol) {
  check_period_convergence_41(l, m);
  const double k = 2 * m + l;
  const double cf = form == AltForm::derived ? 0.5 : 1.0;
  // The four pieces t = w, -w, 1/w, -1/w on w in (0, 1) share |t - 1/t| = (1 - w^2)/w.
  auto f = [&](double w, double d) {
    const double one_minus_w = d > 0 ? d : 1 - w;
    const double l1w2 = std::log(one_minus_w * (1 + w)), lw = std::log(w);
    const double r = std::sqrt(1 - 1.75 * w * w + std::pow(w, 4));
    // R - w/2 = (1 - w^2)^2 / (R + w/2) avoids cancellation at w = 1.
    const double lminus = form == AltForm::derived ? 2 * l1w2 - std::log(r + 0.5 * w) : std::log(std::abs(r - w));
    const double lplus = std::log(r + cf * w);
    const double base = k * (lw - l1w2);
    return (std::exp(l * lminus + base) + std::exp(l * lplus + base)) * (1 + std::exp(-2 * l * lw)) / r;
  };
  QuadratureResult q = tanh_sinh(f, 0, 1, tol);
  q.domain = "t in R, folded onto w in (0, 1)";
  return q;
}

Rat quartic_j_invariant(const Rat& a, const Rat& b, const Rat& c, const Rat& d, const Rat& e) {
  const Rat I = 12 * a * e - 3 * b * d + c * c;
  const Rat J = 72 * a * c * e + 9 * b * c * d - 27 * a * d * d - 27 * e * b * b - 2 * c * c * c;
  const Rat den = 4 * I * I * I - J * J;
  if (den == 0) throw ComputeError("singular quartic");
  return 1728 * 4 * I * I * I / den;
}

WeierstrassData weierstrass_41() {
  WeierstrassData w;
  const UPoly one_minus_x(std::vector<Rat>{1, -1});
  w.cubic = one_minus_x * UPoly(std::vector<Rat>{1, -1, 4});
  w.normal = Rat(16) * compose_affine(w.cubic, rat(5, 3), Rat(4));
  w.substitution_ok = w.normal.degree() == 3 && w.normal[3] == -1 && w.normal[2] == 0;
  w.A = -w.normal[1];
  w.B = w.normal[0];
  const Rat a3 = 4 * w.A * w.A * w.A;
  w.j = 1728 * a3 / (a3 + 27 * w.B * w.B);
  w.quartic_j = quartic_j_invariant(4, 0, -7, 0, 4);
  return w;
}

// --- 5_2 -------------------------------------------------------------------

std::vector<UPoly> p52_coefficients() {
  return {UPoly(std::vector<Rat>{0, 0, -1, 1}), UPoly(std::vector<Rat>{-1, 0, 1, -1}),
          UPoly(std::vector<Rat>{2, -2}), UPoly(std::vector<Rat>{-1, 2, -1})};
}

double p52_eval(double z1, double z2) {
  const auto c = p52_coefficients();
  return ((c[0].evaluate(z1) * z2 + c[1].evaluate(z1)) * z2 + c[2].evaluate(z1)) * z2 + c[3].evaluate(z1);
}

UPoly p52_discriminant() {
  const auto c = p52_coefficients();
  return cubic_discriminant(c[0], c[1], c[2], c[3]);
}

Branch52 branch_52(double z1, std::optional<double> w1_in) {
  const double w1 = w1_in.value_or(1 - z1);
  if (!(z1 > 0 && w1 > 0 && z1 <= 1))
    throw Error("branch solving: z1 = " + fmt(z1) + " outside (0, 1)");
  // With r = w3 = sqrt(w1 w2), the curve reduces to z1 - w2 - z1 r z2 = 0. The unknown is
  // w2 for z1 < 1/2 and z2 otherwise, so the small one is never formed by cancellation.
  const bool solve_w2 = z1 < 0.5;
  auto g = [&](double u) {
    const double w2 = solve_w2 ? u : 1 - u, z2 = solve_w2 ? 1 - u : u;
    const double r = std::sqrt(w1 * w2);
    return solve_w2 ? z1 - w2 - z1 * r * z2 : z2 * (1 - z1 * r) - w1;
  };
  const double g0 = solve_w2 ? z1 : -w1, g1 = solve_w2 ? -w1 : z1;
  std::uintmax_t iters = 400;
  const auto [lo_u, hi_u] =
      boost::math::tools::toms748_solve(g, 0.0, 1.0, g0, g1, boost::math::tools::eps_tolerance<double>(52), iters);
  const double u = (lo_u + hi_u) / 2;
  if (!(u > 0 && u < 1)) throw ComputeError("branch solving failed at z1 = " + fmt(z1));
  Branch52 b;
  b.z1 = z1;
  b.w1 = w1;
  b.w2 = solve_w2 ? u : 1 - u;
  b.z2 = solve_w2 ? 1 - u : u;
  b.w3 = std::sqrt(w1 * b.w2);
  b.z3 = 1 - b.w3;
  return b;
}

QuadratureResult hks_52(double tol) {
  auto f = [](double z1, double d) {
    const Branch52 b = branch_52(z1, d > 0 ? std::optional<double>(d) : std::nullopt);
    const double log_det = std::log(2 * b.z3 / b.w3 + b.z2) - std::log(b.w2);
    const double lz = std::log(b.z1) + std::log(b.z2) + std::log(b.z3);
    const double lw = std::log(b.w1) + std::log(b.w2) + std::log(b.w3);
    return std::exp(0.5 * lz - 2.0 / 3 * lw - log_det - std::log(b.z1));
  };
  QuadratureResult r = tanh_sinh(f, 0, 1, tol);
  r.domain = "z1 in (0, 1), real-positive branch";
  return r;
}

// --- Fourier transform of Gamma --------------------------------------------

FourierGammaCheck fourier_gamma_check(double a, double x) {
  if (!(a > 0)) throw Error("fourier_gamma_check: a must be positive");
  auto f = [&](double s) { return std::exp(cplx(a * s - std::exp(s), 2 * kPi * x * s)); };
  FourierGammaCheck out;
  out.integral = trapezoid(f, -42 / a, 4 + std::log1p(a), 0.02);
  out.gamma = gamma_complex(cplx(a, 2 * kPi * x));
  out.residual = std::abs(out.integral.value - out.gamma);
  return out;
}

}  // namespace lfq
