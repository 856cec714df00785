#ifndef CLAB_SPECTRAL_HPP
#define CLAB_SPECTRAL_HPP

#include "clab/common.hpp"
#include "clab/forms.hpp"
#include "clab/gspec.hpp"
#include "clab/numth.hpp"

namespace clab::spectral {

struct PeterssonQuery {
    int64_t m = 1;
    int64_t n = 1;
    int k = 12;
    int64_t N = 1;
    numth::DirichletCharacter chi = numth::DirichletCharacter::trivial(1);
    int64_t q_max = 3000;
};

struct PeterssonResult {
    cplx value;        // delta_{m=n} + 2 pi i^{-k} sum_{N|q<=Q} S_chi(m,n;q)/q J_{k-1}(4 pi sqrt(mn)/q)
    double tail_bound; // certified with |S_chi| <= q and the series envelope of J
};

// Geometric side of the trace formula, truncated at q_max. If tolerance >= 0
// and the certified tail bound exceeds it, throws.
PeterssonResult petersson_geometric(const PeterssonQuery& query, double tolerance = -1.0);

// Batched variant sharing the Kloosterman loops over a grid of (m, n) pairs.
std::vector<PeterssonResult> petersson_geometric_grid(
    const PeterssonQuery& base, const std::vector<std::pair<int64_t, int64_t>>& mn);

struct SpectralData {
    forms::FormPtr form;
    int k = 12;
    int64_t N = 1;
    double c0 = 0.0;          // (Gamma(k-1)/(4 pi)^{k-1}) |rho(1)|^2 from the (1,1) instance
    double max_rel_residual = 0.0; // consistency over the fitted grid
    int64_t grid_extent = 0;
};

// Solves the (1,1) instance for the Petersson normalization constant of the
// known one-dimensional spaces (weight 12 level 1; weight 2 level 11) and
// reports consistency residuals over (m, n) in [1, grid]^2.
SpectralData fit_spectral_norm(int k, int64_t N, const numth::DirichletCharacter& chi,
                               int64_t q_max = 3000, int64_t grid = 4);

// Spectral side: zeta^{(N)}(2s) sum_{m<=M} f_m m^{-s} c0 rho(n) rho(m)
// (one-dimensional space, real coefficients). Requires Re(s) > 5/4.
cplx kn_spectral(cplx s, int64_t n, const forms::Form& f, const SpectralData& data, int64_t M);

struct KnGeometricResult {
    cplx value;
    cplx delta_term;     // f_n n^{-s} zeta^{(N)}(2s)
    cplx diagonal_term;  // the n-independent zeta(2s-1) piece
    cplx offdiag_term;   // the m != n sum
};

// Geometric expansion: delta term + i^{-k} omega [ f_n n^{s-1} zeta(2s-1)
// N^{1-2s} prod(1-1/p) F_k(s,1) + sum_{m != n} f_m sigma_{1-2s}(n-m;N) m^{s-1}
// F_k(s, m/n) ], with F_k through the contour module. Valid for
// 1/2 < Re(s) < -sigma1.
KnGeometricResult kn_geometric(cplx s, int64_t n, const forms::Form& f,
                               const gspec::GammaFactorSpec& gamma, double sigma1, int64_t M,
                               double fk_tol = 1e-9);

} // namespace clab::spectral

#endif
