#ifndef CLAB_CONTOUR_HPP
#define CLAB_CONTOUR_HPP

#include "clab/common.hpp"
#include "clab/gspec.hpp"

#include <functional>
#include <vector>

namespace clab::contour {

// Vertical-line quadrature parameters. The trapezoid rule runs on
// [sigma - iT, sigma + iT] with step h; T doubles (and h halves once) until
// two successive estimates agree within tol.
struct ContourSpec {
    double sigma = 0.0;
    double t_max = 40.0;
    double step = 0.05;
    double tol = 1e-10;
    int max_doublings = 6;
};

// Large-|u| behaviour of the integrand: f(u) ~ e^{osc u} u^{-power} (c0 + c1/u + ...)
// on vertical lines. power and osc follow from Stirling's formula for balanced
// gamma-factor ratios; they steer the tail treatment. The tail contours are
// bent into the half-plane where the integrand decays: horizontally on the
// side where e^{osc u} shrinks for balanced ratios, or along ray_angle
// (measured from the positive real axis, upper tail; the lower tail mirrors)
// when the ratio itself grows in one horizontal direction.
struct DecayInfo {
    cplx power{2.0, 0.0};
    double osc = 0.0;
    bool conjugate_symmetric = false;     // f(conj u) = conj f(u)
    double ray_angle = std::nan("");      // NaN: pick horizontally from osc
};

struct LineIntegralResult {
    cplx value{0.0, 0.0};
    double err_estimate = 0.0;
    double t_used = 0.0;
    double step_used = 0.0;
    bool converged = false;
};

// (1/2 pi i) Integral of f over the vertical line Re(u) = spec.sigma.
// Trapezoid core plus analytic tail corrections from a fitted inverse-power
// expansion (direct power tails when osc = 0, integration-by-parts asymptotics
// otherwise). Throws on non-convergence.
LineIntegralResult line_integral(const std::function<cplx(cplx)>& f, const ContourSpec& spec,
                                 const DecayInfo& decay);

// F_k(s, x) = (1/2 pi i) Int  Gc(u + (k-1)/2) gamma(1-s-u) / (Gc(-u + (k+1)/2)
// gamma(s+u)) x^u du  on Re(u) = sigma1 in ((1-k)/2, -Re s). sigma1 = NaN
// picks the midpoint, nudged off any pole line.
cplx fk_integral(cplx s, double x, int k, const gspec::GammaFactorSpec& gamma,
                 ContourSpec spec = {}, double sigma1 = std::nan(""));

// Oscillation exponent of the F_k integrand: log x - 2 log(2 pi Q_eff) - 2 sum
// lambda_j log lambda_j.
double fk_oscillation(double x, const gspec::GammaFactorSpec& gamma);

// Residue value of the weight-ell rigidity integral
//   (1/2 pi i) Int_{Re u = -5/2} Gc((k-1+u)/2) gamma(-u/2) /
//                                (2 Gc((k+1-u)/2) gamma(1+u/2)) du
// for gamma = c H^s Gamma_C(s + (ell-1)/2); the integrand collapses to
// H^{-1-u} times a rational function with finitely many right poles.
double h_rigidity_value(int ell, int k, double H);

// Same integral by direct quadrature of the gamma-function form (independent
// of the residue bookkeeping).
cplx h_rigidity_quadrature(int ell, int k, double H, double tol = 1e-10);

// The normalized rigidity polynomial in H^{-1}: for the supported (ell, k)
// pairs this is the classical obstruction whose positive roots pin H.
double h_rigidity_poly(int ell, int k, double H);

// g-side transform pair attached to gamma and the parity eps.
cplx g_tilde(const gspec::GammaFactorSpec& gamma, int eps, cplx u);

// log of g_tilde (up to 2 pi i); combine with other log factors before
// exponentiating so that balanced huge/tiny factors cancel. Throws
// std::domain_error on a gamma pole.
cplx g_tilde_log(const gspec::GammaFactorSpec& gamma, int eps, cplx u);

struct GTransform {
    gspec::GammaFactorSpec gamma;
    int eps;         // 0 or 1
    double sigma = -2.5;
    double tol = 1e-9;

    // g(y) by numerical Mellin inversion of g_tilde along Re(u) = sigma.
    // g is real for real gamma data; the small imaginary residual is dropped.
    double operator()(double y) const;

    // |g_tilde(sigma + iT)| T^{3/2} sampled at a few heights; throws if the
    // required 3/2-power decay is violated.
    void check_decay() const;
};

// Dense samples of g on (0,1) through y = sin(phi), with quadrature weights;
// one grid feeds the pairings and every orthogonality mode.
struct GSampleGrid {
    int eps = 1;
    std::vector<double> phi;
    std::vector<double> weight;
    std::vector<double> g; // g(sin(phi))
};
GSampleGrid sample_g_grid(const GTransform& g, int panels = 10);

// Int_0^1 f_{k-1}(y) g(y) dy with the arcsine substitution (smooth integrand).
double fn_g_pairing(const GSampleGrid& grid, int k);
double fn_g_pairing(const GTransform& g, int k);

struct OrthogonalityReport {
    double a = 0.0;              // constant mode
    double b = 0.0;              // cos-theta mode (eps = 1 only)
    double higher_residual = 0.0; // max |mode| beyond the allowed ones
    std::vector<double> modes;   // raw fitted modes
};

// eps = 1: Fourier modes of h(t) = g(|sin(t/2)|); everything beyond {1, cos t}
// must vanish for admissible gamma. eps = 0: fourth-kind Chebyshev modes of
// h(v) sqrt((1-v)/(1+v)); everything beyond the constant must vanish.
OrthogonalityReport fourier_orthogonality_check(const GSampleGrid& grid, int max_mode = 8);
OrthogonalityReport fourier_orthogonality_check(const GTransform& g, int max_mode = 8);

// 2 pi J_{k-1}(4 pi y) as a Mellin-Barnes line integral (test/verification
// surface for the Bessel kernel).
cplx mellin_barnes_bessel(int k, double y, double sigma0 = std::nan(""), double tol = 1e-10);

// (1/2 pi i) Int f_tilde_n(1-u) g_tilde(u) du on Re u = -5/2; equals the
// y-side pairing by Mellin unfolding.
cplx mellin_pairing(const GTransform& g, int n, double tol = 1e-9);

} // namespace clab::contour

#endif
