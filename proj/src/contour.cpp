#include "clab/contour.hpp"
#include "clab/quadrature.hpp"
#include "clab/special.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace clab::contour {

namespace {

const double kLog2Pi = std::log(two_pi);

// All integrands handled here are ratios of gamma factors (times a power
// x^u): their singularities sit at bounded height, so above the truncation
// line the integrand is analytic and the tail contour can be bent freely.

struct PassResult {
    cplx value;
    double err;
};

// int_T^{t_far} f(sigma + i dir t) dt on an exponentially stretched grid.
cplx stretched_vertical(const std::function<cplx(cplx)>& f, double sigma, double T,
                        double t_far, int dir, double tol, double* err) {
    double V = std::log(t_far / T);
    auto g = [&](double v) {
        double t = T * std::exp(v);
        return f(cplx(sigma, dir * t)) * t;
    };
    QuadResult r = integrate_gk(g, 0.0, V, tol, 3000);
    if (err) *err += r.err_estimate;
    return r.value;
}

// Remaining du-integral from sigma + i dir T to infinity along the ray with
// direction e^{i phi} (upper tail; the lower tail uses the mirrored e^{-i phi}).
// Marches in blocks until a block contributes less than the tolerance.
cplx bent_ray(const std::function<cplx(cplx)>& f, double sigma, double T, int dir, double phi,
              double osc, double tol, double* err) {
    (void)osc;
    cplx step = dir > 0 ? std::polar(1.0, phi) : std::polar(1.0, -phi);
    cplx u0(sigma, dir * T);
    auto g = [&](double s) { return f(u0 + s * step); };
    // geometric block march: the modulus decays monotonically (exponentially
    // once e^{osc u} engages, at worst by the power law), so stop at the
    // first negligible block
    cplx total = 0.0;
    double s0 = 0.0, block = 30.0;
    double last = 0.0;
    for (int b = 0; b < 22; ++b) {
        QuadResult r = integrate_gk(g, s0, s0 + block, tol, 2000);
        total += r.value;
        if (err) *err += r.err_estimate;
        s0 += block;
        block *= 2.0;
        last = std::abs(r.value);
        if (last < 0.2 * tol && b >= 1) break;
    }
    if (err && last >= 0.2 * tol) *err += last;
    return step * total;
}

// int_T^inf f(sigma + i t) dt (dir = +1) or int_{-inf}^{-T} f dt (dir = -1).
cplx tail_integral(const std::function<cplx(cplx)>& f, double sigma, double T, int dir,
                   const DecayInfo& decay, double tol, double* err) {
    if (decay.osc == 0.0 && std::isnan(decay.ray_angle)) {
        // Pure power decay. Heights are capped where gamma-log cancellation
        // is still harmless; the remainder beyond the cap must be negligible,
        // which needs genuine decay.
        double drop = decay.power.real() - 1.0;
        if (drop < 0.9)
            throw std::runtime_error(
                "line_integral: decay exponent too small for a non-oscillatory tail");
        double t_far = std::min(T * std::exp(46.0 / drop), 1e14);
        cplx val = stretched_vertical(f, sigma, T, t_far, dir, tol, err);
        if (err) *err += std::abs(f(cplx(sigma, dir * t_far))) * t_far / drop;
        return val;
    }
    // Resolve a bounded number of oscillations vertically, then bend the
    // contour into the decaying half-plane.
    cplx total = 0.0;
    double t_mid = T;
    if (decay.osc != 0.0) {
        t_mid = std::max(T, std::min(8.0 / std::abs(decay.osc), 2000.0));
        if (t_mid > T * (1.0 + 1e-12))
            total += stretched_vertical(f, sigma, T, t_mid, dir, tol, err);
    }
    double phi = decay.ray_angle;
    if (std::isnan(phi)) phi = decay.osc > 0 ? pi : 0.0;
    cplx ray = bent_ray(f, sigma, t_mid, dir, phi, decay.osc, tol, err);
    // convert the du-integral to the dt parametrization:
    // up-tail picks (1/i) ray, down-tail -(1/i) ray.
    total += (dir > 0 ? 1.0 : -1.0) * ray / cplx(0.0, 1.0);
    return total;
}

// d/dt and d^3/dt^3 of f along the line at t = dir*T by central differences,
// for the Euler-Maclaurin boundary terms of the truncated trapezoid.
cplx fd_derivative(const std::function<cplx(cplx)>& f, double sigma, double T, int dir,
                   double osc, int order) {
    double step = std::min(0.02, 0.4 / std::max(1.0, std::abs(osc)));
    auto at = [&](double k) { return f(cplx(sigma, dir * T + k * step)); };
    if (order == 1)
        return (8.0 * (at(1) - at(-1)) - (at(2) - at(-2))) / (12.0 * step);
    return (at(2) - 2.0 * at(1) + 2.0 * at(-1) - at(-2)) / (2.0 * step * step * step);
}

PassResult single_pass(const std::function<cplx(cplx)>& f, double sigma, double T, double h,
                       const DecayInfo& decay, double tol) {
    int n = static_cast<int>(std::llround(T / h));
    T = n * h;
    double piece_tol = 0.2 * tol;

    PassResult out{0.0, 0.0};
    if (decay.conjugate_symmetric) {
        KahanSum trap;
        trap.add(f(cplx(sigma, 0.0)));
        for (int j = 1; j < n; ++j) trap.add(2.0 * f(cplx(sigma, j * h)).real());
        trap.add(f(cplx(sigma, n * h)).real());
        cplx core = trap.value() * h / two_pi;

        cplx up = tail_integral(f, sigma, T, +1, decay, piece_tol, &out.err);
        // trap = int + h^2/12 [df] - h^4/720 [d3f] + ... at the boundary
        cplx d1 = fd_derivative(f, sigma, T, +1, decay.osc, 1);
        cplx d3 = fd_derivative(f, sigma, T, +1, decay.osc, 3);
        cplx em = (h * h / 12.0) * 2.0 * d1.real() - (h * h * h * h / 720.0) * 2.0 * d3.real();
        out.value = core - em / two_pi + (up + std::conj(up)) / two_pi;
        out.err /= two_pi;
        out.value = cplx(out.value.real(), 0.0);
        return out;
    }

    KahanSum trap;
    trap.add(f(cplx(sigma, 0.0)));
    trap.add(0.5 * (f(cplx(sigma, n * h)) + f(cplx(sigma, -n * h))));
    for (int j = 1; j < n; ++j) {
        trap.add(f(cplx(sigma, j * h)));
        trap.add(f(cplx(sigma, -j * h)));
    }
    cplx core = trap.value() * h / two_pi;

    cplx up = tail_integral(f, sigma, T, +1, decay, piece_tol, &out.err);
    cplx dn = tail_integral(f, sigma, T, -1, decay, piece_tol, &out.err);
    cplx d1 = fd_derivative(f, sigma, T, +1, decay.osc, 1) -
              fd_derivative(f, sigma, T, -1, decay.osc, 1);
    cplx d3 = fd_derivative(f, sigma, T, +1, decay.osc, 3) -
              fd_derivative(f, sigma, T, -1, decay.osc, 3);
    cplx em = (h * h / 12.0) * d1 - (h * h * h * h / 720.0) * d3;
    out.value = core - em / two_pi + (up + dn) / two_pi;
    out.err /= two_pi;
    return out;
}

} // namespace

LineIntegralResult line_integral(const std::function<cplx(cplx)>& f, const ContourSpec& spec,
                                 const DecayInfo& decay) {
    double T = spec.t_max, h = spec.step;
    auto pass = [&](double TT, double hh) {
        return single_pass(f, spec.sigma, TT, hh, decay, spec.tol);
    };

    PassResult cur = pass(T, h);
    T *= 2.0;
    PassResult vt = pass(T, h);
    double dT = std::abs(vt.value - cur.value);
    h *= 0.5;
    PassResult vh = pass(T, h);
    double dh = std::abs(vh.value - vt.value);
    cur = vh;

    int budget = 2 * spec.max_doublings;
    while ((dT > spec.tol || dh > spec.tol) && budget-- > 0) {
        bool refine_T = dT >= dh;
        if (refine_T)
            T *= 2.0;
        else
            h *= 0.5;
        PassResult next = pass(T, h);
        double d = std::abs(next.value - cur.value);
        if (refine_T)
            dT = d;
        else
            dh = d;
        cur = next;
    }
    if (dT > spec.tol || dh > spec.tol)
        throw std::runtime_error("line_integral: refinement did not converge within budget");
    LineIntegralResult out;
    out.value = cur.value;
    out.err_estimate = dT + dh + cur.err;
    out.t_used = T;
    out.step_used = h;
    out.converged = true;
    return out;
}

// ---------------------------------------------------------------------------
// F_k
// ---------------------------------------------------------------------------

double fk_oscillation(double x, const gspec::GammaFactorSpec& gamma) {
    return std::log(x) - 2.0 * std::log(two_pi * gamma.q_effective()) -
           2.0 * gamma.lambda_log_sum();
}

namespace {

bool spec_is_real(const gspec::GammaFactorSpec& gamma) {
    for (const auto& f : gamma.factors)
        if (!f.mu.is_real()) return false;
    return true;
}

} // namespace

cplx fk_integral(cplx s, double x, int k, const gspec::GammaFactorSpec& gamma, ContourSpec spec,
                 double sigma1) {
    if (k < 4) throw std::domain_error("fk_integral: k must be >= 4");
    if (x <= 0.0) throw std::domain_error("fk_integral: x must be positive");
    double lo = 0.5 * (1.0 - k), hi = -s.real();
    if (!(s.real() > 0.5 && s.real() < 0.5 * (k - 1)))
        throw std::domain_error("fk_integral: Re(s) outside (1/2, (k-1)/2)");
    if (std::isnan(sigma1)) sigma1 = 0.5 * (lo + hi);
    if (!(sigma1 > lo && sigma1 < hi))
        throw std::domain_error("fk_integral: sigma1 outside ((1-k)/2, -Re s)");
    // Poles sit at u <= (1-k)/2 and at u >= 1/2 - Re(s) under the standing
    // hypotheses; reject contours grazing the boundary poles.
    if (std::min(sigma1 - lo, hi - sigma1) < 1e-6)
        throw std::domain_error("fk_integral: contour passes through a pole");

    const double A = 0.5 * (k - 1.0);
    const double logx = std::log(x);
    // Numerator poles are off the contour (checked above); a gamma-pole hit
    // during evaluation can only come from a denominator factor, where the
    // integrand vanishes.
    auto f = [&](cplx u) -> cplx {
        try {
            cplx lg = special::log_gamma_c(u + A) - special::log_gamma_c(0.5 * (k + 1.0) - u) +
                      gamma.log_evaluate(1.0 - s - u) - gamma.log_evaluate(s + u) + u * logx;
            return std::exp(lg);
        } catch (const std::domain_error&) {
            return {0.0, 0.0};
        }
    };
    DecayInfo decay;
    decay.power = 2.0 * s;
    decay.osc = fk_oscillation(x, gamma);
    if (std::abs(decay.osc) < 1e-12) decay.osc = 0.0;
    decay.conjugate_symmetric = s.imag() == 0.0 && spec_is_real(gamma);
    spec.sigma = sigma1;
    return line_integral(f, spec, decay).value;
}

// ---------------------------------------------------------------------------
// H-rigidity
// ---------------------------------------------------------------------------

namespace {

void check_rigidity_args(int ell, int k, double H) {
    if (ell < 1 || ell > 3) throw std::domain_error("h_rigidity: ell must be 1, 2 or 3");
    if (k < 4) throw std::domain_error("h_rigidity: k must be >= 4");
    if ((k - ell) % 2 != 0) throw std::domain_error("h_rigidity: k and ell must have equal parity");
    if (!(H >= 1.0)) throw std::domain_error("h_rigidity: requires H >= 1");
}

} // namespace

double h_rigidity_value(int ell, int k, double H) {
    check_rigidity_args(ell, k, H);
    double total = 0.0;
    for (int j = ell - 1; j <= k - 1; j += 2) {
        double numer = 1.0;
        for (int i = ell + 1; i <= k - 3; i += 2) numer *= 0.5 * (j + i);
        double denom = 1.0;
        for (int jp = ell - 1; jp <= k - 1; jp += 2)
            if (jp != j) denom *= 0.5 * (jp - j);
        total += std::pow(H, -1.0 - j) * two_pi * two_pi * numer / denom;
    }
    return total;
}

double h_rigidity_poly(int ell, int k, double H) {
    double scale = (ell == 1 ? 2.0 : 1.0) * H / (two_pi * two_pi);
    return scale * h_rigidity_value(ell, k, H);
}

cplx h_rigidity_quadrature(int ell, int k, double H, double tol) {
    check_rigidity_args(ell, k, H);
    const double logH = std::log(H);
    auto f = [&](cplx u) -> cplx {
        try {
            cplx lg = special::log_gamma_c(0.5 * (k - 1.0 + u)) -
                      special::log_gamma_c(0.5 * (k + 1.0 - u)) +
                      special::log_gamma_c(0.5 * (ell - 1.0 - u)) -
                      special::log_gamma_c(0.5 * (ell + 1.0 + u)) - std::log(2.0) +
                      (-1.0 - u) * logH;
            return std::exp(lg);
        } catch (const std::domain_error&) {
            return {0.0, 0.0};
        }
    };
    ContourSpec spec;
    spec.sigma = -2.5;
    spec.tol = tol;
    DecayInfo decay;
    decay.power = 2.0;
    decay.osc = -logH;
    if (H == 1.0) decay.osc = 0.0;
    decay.conjugate_symmetric = true;
    return line_integral(f, spec, decay).value;
}

// ---------------------------------------------------------------------------
// g transform
// ---------------------------------------------------------------------------

cplx g_tilde_log(const gspec::GammaFactorSpec& gamma, int eps, cplx u) {
    if (eps != 0 && eps != 1) throw std::domain_error("g_tilde: eps must be 0 or 1");
    return 0.5 * std::log(2.0) + special::log_gamma_c(0.5 * (1.0 - eps + u)) -
           special::log_gamma_c(0.5 * (2.0 - eps - u)) + gamma.log_evaluate(-0.5 * u) -
           gamma.log_evaluate(1.0 + 0.5 * u);
}

cplx g_tilde(const gspec::GammaFactorSpec& gamma, int eps, cplx u) {
    try {
        return std::exp(g_tilde_log(gamma, eps, u));
    } catch (const std::domain_error&) {
        // on the evaluation lines the numerator factors stay pole-free, so a
        // gamma pole always belongs to a denominator: the value is zero
        return {0.0, 0.0};
    }
}

double GTransform::operator()(double y) const {
    if (y <= 0.0) throw std::domain_error("GTransform: y must be positive");
    double osc = -std::log(y) - std::log(two_pi * gamma.q_effective()) - gamma.lambda_log_sum();
    if (std::abs(osc) < 1e-6) {
        // the single resonant scale; step off it rather than fight a
        // non-oscillatory 3/2-power tail
        y *= std::exp(osc - 2e-6);
        osc = 2e-6;
    }
    const double logy = std::log(y);
    auto f = [&](cplx u) -> cplx {
        try {
            return std::exp(g_tilde_log(gamma, eps, u) - u * logy);
        } catch (const std::domain_error&) {
            return {0.0, 0.0};
        }
    };
    ContourSpec spec;
    spec.sigma = sigma;
    spec.tol = tol;
    spec.max_doublings = 8;
    // nearest pole is half a unit off the line, so a coarser grid still has
    // negligible aliasing
    spec.t_max = 30.0;
    spec.step = 0.1;
    DecayInfo decay;
    decay.power = 1.5;
    decay.osc = std::abs(osc) < 1e-12 ? 0.0 : osc;
    decay.conjugate_symmetric = spec_is_real(gamma);
    return line_integral(f, spec, decay).value.real();
}

void GTransform::check_decay() const {
    for (double T : {60.0, 120.0, 240.0}) {
        double ratio = std::abs(g_tilde(gamma, eps, cplx(sigma, T))) * std::pow(T, 1.5);
        if (!std::isfinite(ratio) || ratio > 1e3)
            throw std::runtime_error("GTransform: g_tilde is not O(|u|^{-3/2}) on the line");
    }
}

GSampleGrid sample_g_grid(const GTransform& g, int panels) {
    FixedGrid fixed = kronrod_grid(0.0, 0.5 * pi, panels);
    GSampleGrid grid;
    grid.eps = g.eps;
    grid.phi = fixed.x;
    grid.weight = fixed.w;
    grid.g.resize(fixed.x.size());
    for (size_t i = 0; i < fixed.x.size(); ++i) grid.g[i] = g(std::sin(fixed.x[i]));
    return grid;
}

double fn_g_pairing(const GSampleGrid& grid, int k) {
    int n = k - 1;
    double acc = 0.0;
    for (size_t i = 0; i < grid.phi.size(); ++i) {
        double trig = (n % 2 == 0) ? std::cos(n * grid.phi[i]) : std::sin(n * grid.phi[i]);
        acc += grid.weight[i] * trig * grid.g[i];
    }
    return acc;
}

double fn_g_pairing(const GTransform& g, int k) {
    // g can kink where the inversion stops oscillating; split there so the
    // adaptive rule sees smooth pieces
    int n = k - 1;
    auto f = [&](double phi) -> cplx {
        double trig = (n % 2 == 0) ? std::cos(n * phi) : std::sin(n * phi);
        return trig * g(std::sin(phi));
    };
    double y_star = 1.0 / (two_pi * g.gamma.q_effective() * std::exp(g.gamma.lambda_log_sum()));
    double total = 0.0;
    if (y_star > 1e-6 && y_star < 1.0 - 1e-12) {
        double phi_star = std::asin(y_star);
        total += integrate_gk(f, 0.0, phi_star, 5e-8, 120).value.real();
        total += integrate_gk(f, phi_star, 0.5 * pi, 5e-8, 120).value.real();
    } else {
        total = integrate_gk(f, 0.0, 0.5 * pi, 1e-7, 160).value.real();
    }
    return total;
}

OrthogonalityReport fourier_orthogonality_check(const GSampleGrid& grid, int max_mode) {
    OrthogonalityReport rep;
    rep.modes.resize(max_mode + 1, 0.0);
    if (grid.eps == 1) {
        // h(t) = g(|sin(t/2)|); mode m coefficient (1/pi) int h cos(mt) dt
        for (int m = 0; m <= max_mode; ++m) {
            double acc = 0.0;
            for (size_t i = 0; i < grid.phi.size(); ++i)
                acc += grid.weight[i] * grid.g[i] * std::cos(2.0 * m * grid.phi[i]);
            rep.modes[m] = 4.0 / pi * acc;
        }
        rep.a = 0.5 * rep.modes[0];
        rep.b = rep.modes[1];
        for (int m = 2; m <= max_mode; ++m)
            rep.higher_residual = std::max(rep.higher_residual, std::abs(rep.modes[m]));
    } else {
        // fourth-kind Chebyshev modes of h(v) sqrt((1-v)/(1+v)), v = cos(2 phi)
        for (int m = 0; m <= max_mode; ++m) {
            double acc = 0.0;
            for (size_t i = 0; i < grid.phi.size(); ++i) {
                double phi = grid.phi[i];
                acc += grid.weight[i] * special::chebyshev_w(m, std::cos(2.0 * phi)) * grid.g[i] *
                       std::sin(phi);
            }
            rep.modes[m] = 2.0 * std::sqrt(2.0) / pi * acc;
        }
        rep.a = rep.modes[0];
        for (int m = 1; m <= max_mode; ++m)
            rep.higher_residual = std::max(rep.higher_residual, std::abs(rep.modes[m]));
    }
    return rep;
}

OrthogonalityReport fourier_orthogonality_check(const GTransform& g, int max_mode) {
    return fourier_orthogonality_check(sample_g_grid(g), max_mode);
}

// ---------------------------------------------------------------------------

cplx mellin_barnes_bessel(int k, double y, double sigma0, double tol) {
    if (k < 2) throw std::domain_error("mellin_barnes_bessel: k must be >= 2");
    if (y <= 0.0) throw std::domain_error("mellin_barnes_bessel: y must be positive");
    if (std::isnan(sigma0)) sigma0 = 0.25 * (1.0 - k);
    if (!(sigma0 > 0.5 * (1.0 - k) && sigma0 < 0.0))
        throw std::domain_error("mellin_barnes_bessel: sigma0 outside ((1-k)/2, 0)");
    const double A = 0.5 * (k - 1.0);
    auto f = [&](cplx u) {
        cplx lg = special::log_gamma_c(u + A) - special::log_gamma_c(0.5 * (k + 1.0) - u) -
                  2.0 * u * std::log(y);
        return std::exp(lg);
    };
    DecayInfo decay;
    decay.power = 1.0;
    decay.osc = -2.0 * std::log(y) - 2.0 - 2.0 * kLog2Pi;
    decay.conjugate_symmetric = true;
    // the kernel ratio grows in the right half-plane, so the tail must bend
    // up-left where the reciprocal gamma growth dominates
    decay.ray_angle = 0.75 * pi;
    ContourSpec spec;
    spec.sigma = sigma0;
    spec.tol = tol;
    return line_integral(f, spec, decay).value;
}

cplx mellin_pairing(const GTransform& g, int n, double tol) {
    // The Mellin transform of f_n continued past Re(s) > 0: log-form, since
    // the bent tail contour needs it far left of the abscissa where the
    // reciprocal-gamma route overflows.
    double sign = ((n / 2) % 2 == 0) ? 1.0 : -1.0;
    double nn = static_cast<double>(n);
    auto f = [&](cplx u) -> cplx {
        try {
            cplx s = 1.0 - u;
            cplx lg = special::log_gamma_c(s) - s * std::log(2.0) -
                      special::log_gamma_c(0.5 * (s + nn + 1.0)) -
                      special::log_gamma_c(0.5 * (s - nn + 1.0)) + g_tilde_log(g.gamma, g.eps, u);
            return sign * std::exp(lg);
        } catch (const std::domain_error&) {
            return {0.0, 0.0};
        }
    };
    DecayInfo decay;
    decay.power = 2.0;
    double osc = -std::log(two_pi * g.gamma.q_effective()) - g.gamma.lambda_log_sum();
    decay.osc = std::abs(osc) < 1e-12 ? 0.0 : osc;
    decay.conjugate_symmetric = spec_is_real(g.gamma);
    ContourSpec spec;
    spec.sigma = g.sigma;
    spec.tol = tol;
    return line_integral(f, spec, decay).value;
}

} // namespace clab::contour
