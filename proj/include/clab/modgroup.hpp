#ifndef CLAB_MODGROUP_HPP
#define CLAB_MODGROUP_HPP

#include "clab/common.hpp"
#include "clab/forms.hpp"
#include "clab/rational.hpp"

#include <vector>

namespace clab::modgroup {

// 2x2 matrix over exact rationals with positive determinant.
struct Mat2 {
    Rational a, b, c, d;

    Rational det() const { return a * d - b * c; }
    Rational trace() const { return a + d; }

    friend Mat2 operator*(const Mat2& x, const Mat2& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
                x.c * y.b + x.d * y.d};
    }
    bool operator==(const Mat2& o) const = default;

    // integer entries, det 1, N | c
    bool in_gamma0(int64_t N) const;

    // Moebius action on the upper half-plane.
    cplx apply(cplx z) const;
};

inline Mat2 identity_mat() { return {1, 0, 0, 1}; }

// Matrix of the twisted inversion attached to (a, abar, q) at scale H:
//   [ aH  (a abar H^2 - 1)/(qH) ]
//   [ qH        abar H         ]
// det = 1 exactly.
Mat2 h_matrix(int64_t a, int64_t abar, int64_t q, const Rational& H);

// (f|M)(z) = det(M)^{l/2} (cz+d)^{-l} f((az+b)/(cz+d)).
cplx slash(const forms::Form& f, const Mat2& M, int ell, cplx z, double tol = 1e-12);

// tr(M_{1,p} M_{2,p}) for M_{i,p} = [[H, (H - 1/H)/q_i], [q_i H, H]] with
// q_1 = pN, q_2 = (p+1)N; exact rational.
Rational trace_product(int64_t p, int64_t N, const Rational& H);

// Closed form (2H)^2 - 2 - (4 - (2H)^2) / (4p(p+1)).
Rational trace_product_closed(int64_t p, const Rational& H);

enum class MatClass { elliptic, parabolic, hyperbolic };

struct Classification {
    MatClass type;
    bool finite_order = false; // meaningful for elliptic only
};

// Classify a det-1 matrix by |trace|; for rational traces the finite-order
// decision is exact: 2cos(pi r) is rational only for values in {0, +-1, +-2}.
Classification classify(const Mat2& M);

// max over the samples of |(f|M) - i^{-l} omega chi(abar) f| with M the
// H = 1 matrix of (a, abar, q).
double modularity_defect(const forms::Form& f, int64_t a, int64_t abar, int64_t q,
                         const std::vector<cplx>& samples, double tol = 1e-12);

} // namespace clab::modgroup

#endif
