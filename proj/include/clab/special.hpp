#ifndef CLAB_SPECIAL_HPP
#define CLAB_SPECIAL_HPP

#include "clab/common.hpp"

namespace clab::special {

// Gamma function for complex arguments (Lanczos approximation, reflection
// formula on Re(s) < 1/2). Throws std::domain_error at non-positive integers.
cplx gamma(cplx s);

// log Gamma, continuous along vertical lines away from the poles. The branch
// is only guaranteed up to 2*pi*i, which is irrelevant once exponentiated;
// use for products/ratios, not for log-values per se.
cplx log_gamma(cplx s);

// 1/Gamma, entire; safe near the poles of Gamma.
cplx recip_gamma(cplx s);

// Gamma_C(s) = 2 (2 pi)^{-s} Gamma(s) and its log.
cplx gamma_c(cplx s);
cplx log_gamma_c(cplx s);

// J-Bessel function of non-negative integer order (abs error <= 1e-12 for
// nu <= 64). Series at small argument, backward recurrence in the mid range,
// Hankel asymptotics for very large argument.
double bessel_j(int nu, double y);

// Riemann zeta by Euler-Maclaurin; pole error at s = 1.
cplx zeta(cplx s);

// zeta^{(N)}(s) = zeta(s) * prod_{p | N} (1 - p^{-s}).
cplx zeta_n(cplx s, int64_t N);

// Chebyshev polynomial of the fourth kind, W_n(cos t) = sin((2n+1)t/2)/sin(t/2).
double chebyshev_w(int n, double x);

// f_n(y) on (0,1): cos(n asin y)/sqrt(1-y^2) for even n, sin(...) for odd n.
// Zero outside (0,1).
double fn_profile(int n, double y);

// Mellin transform of f_n:
//   (-1)^{floor(n/2)} Gamma_C(s) / (2^s Gamma_C((s+n+1)/2) Gamma_C((s-n+1)/2))
// for Re(s) > 0.
cplx fn_mellin(int n, cplx s);

} // namespace clab::special

#endif
