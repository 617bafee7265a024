#pragma once
// Edge state-integrand assembled from the shape incidence matrices.

#include "lfq/kinematics.hpp"
#include "lfq/realnum.hpp"

#include <vector>

namespace lfq {

// G_t(u) = i^{eps_u} Gamma_{eps_u}(t - i ell_u).
cplx edge_factor(double t, const SignedLog& u);

struct EdgeIntegrand {
  cplx value;          // product over tetrahedra with the pairing factors removed
  cplx dropped_phase;  // product of the removed pairing factors
};

// Per tetrahedron j: sqrt(2 pi) G_a(x^{(B-C)_j}) G_b(x^{(C-A)_j}) G_c(x^{(A-B)_j}); the exponent
// vectors are negated for negatively oriented tetrahedra.
EdgeIntegrand edge_state_integrand(const NZMatrices& nz, const std::vector<int>& signs,
                                   const std::vector<RealAngleTriple>& theta, const std::vector<SignedLog>& x);

// 4_1 angles at contour abscissa a1: tet 0 = (a1+m, a1+m-l, 1+l-2(a1+m)), tet 1 = (a1, a1-l, 1+l-2 a1).
std::vector<RealAngleTriple> angles_41(double a1, double lambda_dot, double mu_dot);

struct EdgeReduction41 {
  cplx averaged;     // (1/2) sum over eps of the integrand at x_0 = (eps, ell), x_1 = 1
  cplx beta_term;    // B(z, z-l) B(z+m, z+m-l)
  cplx mb_term;      // mb_41_integrand(z)
  double residual;   // |averaged - beta_term - mb_term|
};
EdgeReduction41 edge_reduction_41(const NZMatrices& nz, const std::vector<int>& signs, double a1, double ell,
                                  double lambda_dot, double mu_dot);

}  // namespace lfq
