#include "lfq/edge.hpp"

#include "lfq/error.hpp"

#include <boost/math/constants/constants.hpp>

#include <cmath>

namespace lfq {

namespace {

constexpr double kPi = boost::math::constants::pi<double>();

SignedLog monomial(const std::vector<SignedLog>& x, const MatI& e, Eigen::Index col, int orient) {
  SignedLog out;
  for (Eigen::Index i = 0; i < e.rows(); ++i) out = out * x[i].pow(static_cast<int>(orient * e(i, col)));
  return out;
}

}  // namespace

cplx edge_factor(double t, const SignedLog& u) {
  const cplx ipow = u.eps ? cplx(0, 1) : cplx(1, 0);
  return ipow * gamma_n(u.eps, cplx(t, -u.ell));
}

EdgeIntegrand edge_state_integrand(const NZMatrices& nz, const std::vector<int>& signs,
                                   const std::vector<RealAngleTriple>& theta, const std::vector<SignedLog>& x) {
  const auto edges = nz.A.rows(), tets = nz.A.cols();
  if (static_cast<Eigen::Index>(theta.size()) != tets || static_cast<Eigen::Index>(signs.size()) != tets)
    throw Error("edge integrand: need one angle triple and one sign per tetrahedron");
  if (static_cast<Eigen::Index>(x.size()) != edges) throw Error("edge integrand: need one variable per edge");
  const MatI bc = nz.B - nz.C, ca = nz.C - nz.A, ab = nz.A - nz.B;
  EdgeIntegrand out{1.0, 1.0};
  for (Eigen::Index j = 0; j < tets; ++j) {
    const RealAngleTriple& t = theta[j];
    t.validate();
    const int o = signs[j];
    out.value *= std::sqrt(2 * kPi) * edge_factor(t.adot, monomial(x, bc, j, o)) *
                 edge_factor(t.bdot, monomial(x, ca, j, o)) * edge_factor(t.cdot, monomial(x, ab, j, o));
    out.dropped_phase *= pairing(SignedLog::from_real(-t.addot), monomial(x, nz.A, j, o)) *
                         pairing(SignedLog::from_real(-t.bddot), monomial(x, nz.B, j, o)) *
                         pairing(SignedLog::from_real(-t.cddot), monomial(x, nz.C, j, o));
  }
  return out;
}

std::vector<RealAngleTriple> angles_41(double a1, double l, double m) {
  const double a0 = a1 + m;
  return {RealAngleTriple::from(a0, 1 + l - 2 * a0), RealAngleTriple::from(a1, 1 + l - 2 * a1)};
}

EdgeReduction41 edge_reduction_41(const NZMatrices& nz, const std::vector<int>& signs, double a1, double ell,
                                  double l, double m) {
  const auto theta = angles_41(a1, l, m);
  EdgeReduction41 r;
  r.averaged = 0.5 * (edge_state_integrand(nz, signs, theta, {SignedLog{0, ell}, SignedLog{}}).value +
                      edge_state_integrand(nz, signs, theta, {SignedLog{1, ell}, SignedLog{}}).value);
  const cplx z(a1, ell);
  r.beta_term = beta(z, z - l) * beta(z + m, z + m - l);
  r.mb_term = mb_41_integrand(z, l, m);
  r.residual = std::abs(r.averaged - r.beta_term - r.mb_term);
  return r;
}

}  // namespace lfq
