#pragma once
// Complex Gamma and Beta functions.

#include <complex>

namespace lfq {

using cplx = std::complex<double>;

// Stirling series after an upward shift, reflection for Re z < 1/2.
// Throws ComputeError at the poles z = 0, -1, -2, ...
cplx gamma_complex(cplx z);
// A branch of log Gamma(z) for Re z >= 1/2; only exp() of it is meaningful.
cplx log_gamma_right(cplx z);

// Gamma_n(z) = sqrt(2/pi) Gamma(z) cos(pi (n - z) / 2), n in {0, 1}.
cplx gamma_n(int n, cplx z);

cplx beta(cplx a, cplx b);

// sin(pi z) and cos(pi z) with exact reduction of the real part.
cplx sin_pi(cplx z);
cplx cos_pi(cplx z);

}  // namespace lfq
