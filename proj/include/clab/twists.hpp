#ifndef CLAB_TWISTS_HPP
#define CLAB_TWISTS_HPP

#include "clab/common.hpp"
#include "clab/forms.hpp"

namespace clab::twists {

// Evaluation point of the completed additive twist: alpha = a/q with
// a abar = 1 (q) and N | q. The split height y0 balances the two halves of
// the integral representation (default 1/q).
struct TwistPoint {
    cplx s;
    int64_t a = 1;
    int64_t abar = 1;
    int64_t q = 1;
    double y0 = 0.0; // 0: use 1/q

    TwistPoint(cplx s_, int64_t a_, int64_t q_, double y0_ = 0.0);
    TwistPoint(cplx s_, int64_t a_, int64_t abar_, int64_t q_, double y0_);
};

struct SeriesResult {
    cplx value;
    double tail_bound; // from the coarse |f_n| <= C sqrt(n) envelope
};

// Lambda(s, alpha) = Gamma_C(s + (k-1)/2) sum f_n e(n alpha) n^{-s} truncated
// at M terms; requires Re(s) > 1. alpha = a/q in lowest terms not required.
SeriesResult lambda_series(const forms::Form& f, cplx s, int64_t a, int64_t q, int64_t M);

// Completed twist by the split integral representation
//   Lambda(s, a/q) = U(s, a/q; y0) + omega chi(abar) q^{1-2s} U(1-s, -abar/q; 1/(q^2 y0)),
// where U(s, alpha; Y) = 2 Int_Y^inf f(alpha + iy) y^{s + (k-1)/2 - 1} dy.
// Entire in s; usable at every s.
cplx lambda_integral(const forms::Form& f, const TwistPoint& point, double tol = 1e-11);

// |Lambda(s, a/q) - omega chi(abar) q^{1-2s} Lambda(1-s, -abar/q)|, both sides
// through lambda_integral with staggered split heights.
double fe_defect(const forms::Form& f, const TwistPoint& point, double tol = 1e-11);

} // namespace clab::twists

#endif
