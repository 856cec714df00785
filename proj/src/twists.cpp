#include "clab/twists.hpp"
#include "clab/numth.hpp"
#include "clab/quadrature.hpp"
#include "clab/special.hpp"

#include <cmath>

namespace clab::twists {

TwistPoint::TwistPoint(cplx s_, int64_t a_, int64_t q_, double y0_) : s(s_), q(q_), y0(y0_) {
    if (q < 1) throw std::domain_error("TwistPoint: q must be positive");
    a = ((a_ % q) + q) % q;
    if (q == 1) {
        a = 0;
        abar = 0;
        return;
    }
    abar = numth::mod_inverse(a, q);
}

TwistPoint::TwistPoint(cplx s_, int64_t a_, int64_t abar_, int64_t q_, double y0_)
    : s(s_), a(a_), abar(abar_), q(q_), y0(y0_) {
    if (q < 1) throw std::domain_error("TwistPoint: q must be positive");
    if (((__int128)a * abar - 1) % q != 0 && q > 1)
        throw std::domain_error("TwistPoint: a abar != 1 mod q");
}

SeriesResult lambda_series(const forms::Form& f, cplx s, int64_t a, int64_t q, int64_t M) {
    if (s.real() <= 1.0 + 1e-9)
        throw std::domain_error("lambda_series: requires Re(s) > 1");
    if (M > f.size())
        throw std::domain_error("lambda_series: provider holds too few coefficients");
    double A = 0.5 * (f.weight() - 1.0);

    KahanSum acc;
    double envelope = 0.0;
    for (int64_t n = 1; n <= M; ++n) {
        cplx fn = f.analytic(n);
        envelope = std::max(envelope, std::abs(fn) / std::sqrt(static_cast<double>(n)));
        acc.add(fn * e_frac(n * a, q) * std::exp(-s * std::log(static_cast<double>(n))));
    }
    cplx gamma_factor = special::gamma_c(s + A);
    SeriesResult out;
    out.value = gamma_factor * acc.value();
    // sum_{n > M} C sqrt(n) n^{-Re s} <= C M^{3/2 - Re s} / (Re s - 3/2)
    double sigma = s.real();
    double tail = sigma > 1.5001
                      ? envelope * std::pow(static_cast<double>(M), 1.5 - sigma) / (sigma - 1.5)
                      : std::numeric_limits<double>::infinity();
    out.tail_bound = std::abs(gamma_factor) * tail;
    return out;
}

namespace {

// U(s, a/q; Y) = 2 Int_Y^inf f(a/q + iy) y^{s + (k-1)/2 - 1} dy by adaptive
// panels against the truncated q-expansion.
cplx upper_integral(const forms::Form& f, cplx s, int64_t a, int64_t q, double Y, double tol) {
    double A = 0.5 * (f.weight() - 1.0);
    double alpha = static_cast<double>(((a % q) + q) % q) / static_cast<double>(q);
    auto integrand = [&](double y) -> cplx {
        cplx z(alpha, y);
        return forms::eval_form(f, z, 0.01 * tol) *
               std::exp((s + A - 1.0) * std::log(y));
    };
    // exponential decay: the integrand is below tol * 1e-3 once
    // 2 pi y - (Re s + A - 1) log y exceeds the scale
    double y_max = Y;
    double target = std::log(1.0 / (tol * 1e-3));
    while (two_pi * y_max - (s.real() + A - 1.0) * std::log(y_max) < target + 3.0) y_max *= 1.3;
    QuadResult r = integrate_gk(integrand, Y, y_max, 0.2 * tol, 4000);
    if (!r.converged)
        throw std::runtime_error("lambda_integral: quadrature did not converge");
    return 2.0 * r.value;
}

} // namespace

cplx lambda_integral(const forms::Form& f, const TwistPoint& point, double tol) {
    int64_t q = point.q;
    double y0 = point.y0 > 0.0 ? point.y0 : 1.0 / static_cast<double>(q);
    cplx s = point.s;

    // principal part
    cplx upper = upper_integral(f, s, point.a, q, y0, tol);
    // inverted part: y -> 1/(q^2 y) maps the rest onto the dual twist
    cplx factor = f.omega() * f.character().lifted(point.abar, q) *
                  std::exp((1.0 - 2.0 * s) * std::log(static_cast<double>(q)));
    cplx lower = upper_integral(f, 1.0 - s, -point.abar, q,
                                1.0 / (static_cast<double>(q) * q * y0), tol);
    return upper + factor * lower;
}

double fe_defect(const forms::Form& f, const TwistPoint& point, double tol) {
    int64_t q = point.q;
    cplx s = point.s;
    cplx lhs = lambda_integral(f, point, tol);
    // the dual point, evaluated with a staggered split so the two sides do not
    // share quadratures
    TwistPoint dual(1.0 - s, -point.abar, -point.a, q, 1.31 / static_cast<double>(q));
    if (q == 1) dual = TwistPoint(1.0 - s, 0, 0, 1, 1.31);
    cplx rhs = f.omega() * f.character().lifted(point.abar, q) *
               std::exp((1.0 - 2.0 * s) * std::log(static_cast<double>(q))) *
               lambda_integral(f, dual, tol);
    return std::abs(lhs - rhs);
}

} // namespace clab::twists
