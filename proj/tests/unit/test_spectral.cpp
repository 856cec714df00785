#include <doctest.h>

#include "clab/contour.hpp"
#include "clab/special.hpp"
#include "clab/spectral.hpp"

#include <cmath>

using namespace clab;
using namespace clab::spectral;

TEST_CASE("dimension-zero spaces collapse the geometric side") {
    for (int k : {4, 6}) {
        PeterssonQuery q;
        q.k = k;
        q.q_max = 2500;
        auto r = petersson_geometric(q);
        CHECK(std::abs(r.value) < 1e-6);
    }
}

TEST_CASE("the equivalent kloosterman-bessel sum form") {
    // sum_q S(1,1;q)/q J_{k-1}(4 pi / q) = -i^k/(2 pi) when the spectral side
    // is empty
    PeterssonQuery q;
    q.k = 6;
    q.q_max = 2500;
    auto r = petersson_geometric(q);
    cplx sum = (r.value - 1.0) / (two_pi * i_pow(-6));
    CHECK(std::abs(sum - (-i_pow(6) / two_pi)) < 1e-7);
}

TEST_CASE("petersson validation") {
    PeterssonQuery q;
    q.k = 5; // odd weight with an even character: parity mismatch
    CHECK_THROWS_AS(petersson_geometric(q), std::domain_error);
    PeterssonQuery q2;
    q2.k = 4;
    q2.q_max = 100;
    CHECK_THROWS_AS(petersson_geometric(q2, 1e-9), std::runtime_error); // certified tail too big
}

TEST_CASE("fitted normalization reproduces the weight-12 grid") {
    auto data = fit_spectral_norm(12, 1, numth::DirichletCharacter::trivial(1), 1500, 4);
    CHECK(data.c0 > 0.0);
    CHECK(data.max_rel_residual < 1e-6);
    // the (2,1) ratio is the analytic second coefficient
    PeterssonQuery q;
    q.k = 12;
    q.m = 2;
    q.q_max = 1500;
    auto r21 = petersson_geometric(q);
    CHECK(std::abs(r21.value.real() / data.c0 - (-24.0 / std::pow(2.0,
5.5))) < 1e-8);
    CHECK_THROWS_AS(fit_spectral_norm(4, 1, numth::DirichletCharacter::trivial(1), 500, 2),
                    std::domain_error);
}

TEST_CASE("kn spectral side is self-consistent in the truncation") {
    auto delta = forms::delta_form(24000);
    auto data = fit_spectral_norm(12, 1, numth::DirichletCharacter::trivial(1), 1200, 2);
    cplx a = kn_spectral(cplx(2.0, 0.0), 1, *delta, data, 12000);
    cplx b = kn_spectral(cplx(2.0, 0.0), 1, *delta, data, 24000);
    CHECK(std::abs(a - b) / std::abs(b) < 1e-4);
    CHECK_THROWS_AS(kn_spectral(cplx(1.1, 0.0), 1, *delta, data, 100), std::domain_error);
    // spectral structure: the n = 2 to n = 1 ratio is the analytic coefficient
    cplx k1 = kn_spectral(cplx(2.0, 0.0), 1, *delta, data, 12000);
    cplx k2 = kn_spectral(cplx(2.0, 0.0), 2, *delta, data, 12000);
    CHECK(std::abs(k2 / k1 - (-24.0 / std::pow(2.0, 5.5))) < 1e-12);
}

TEST_CASE("kn geometric matches the spectral side") {
    auto delta = forms::delta_form(12000);
    auto data = fit_spectral_norm(12, 1, numth::DirichletCharacter::trivial(1), 1200, 2);
    auto gamma = gspec::gamma_c_shift_spec(Rational(11, 2));
    cplx s(2.0, 0.0);
    cplx sp = kn_spectral(s, 1, *delta, data, 12000);
    auto geo = kn_geometric(s, 1, *delta, gamma, std::nan(""), 250);
    CHECK(std::abs(sp - geo.value) / std::abs(sp) < 1e-3);
    CHECK_THROWS_AS(kn_geometric(cplx(0.4, 0.0), 1, *delta, gamma, std::nan(""), 50),
                    std::domain_error);
}

TEST_CASE("kn geometric m-terms decay like the contour exponent predicts") {
    auto delta = forms::delta_form(400);
    auto gamma = gspec::gamma_c_shift_spec(Rational(11, 2));
    cplx s(2.0, 0.0);
    double sigma1 = -3.75;
    // term(m) ~ m^{Re s - 1 + sigma1 + eps}: ratios across a decade shrink by
    // roughly 10^{-2.75}
    auto term = [&](int64_t m) {
        cplx sig = numth::sigma_gen({1 - m, 1, 1.0 - 2.0 * s});
        cplx fk = contour::fk_integral(s, static_cast<double>(m), 12, gamma, {}, sigma1);
        return std::abs(delta->analytic(m) * sig *
                        std::exp((s - 1.0) * std::log(static_cast<double>(m))) * fk);
    };
    double t20 = term(20), t200 = term(200);
    CHECK(t200 / t20 < 5.0 * std::pow(10.0, -2.75 + 0.4));
}

TEST_CASE("residue of the diagonal term at s = 1") {
    // circle the pole of zeta(2s-1): the residue must match
    // (1/2) i^{-k} omega N^{-1} prod(1-1/p) F_k(1,1) f_n
    auto delta = forms::delta_form(400);
    auto gamma = gspec::gamma_c_shift_spec(Rational(11, 2));
    const double radius = 0.08;
    const int nodes = 16;
    cplx acc = 0.0;
    for (int j = 0; j < nodes; ++j) {
        double theta = two_pi * j / nodes;
        cplx s = 1.0 + radius * std::polar(1.0, theta);
        auto geo = kn_geometric(s, 1, *delta, gamma, -3.2, 40, 1e-8);
        acc += geo.diagonal_term * radius * std::polar(1.0, theta);
    }
    cplx residue = acc / static_cast<double>(nodes);
    cplx expected = 0.5 * i_pow(-12) * delta->omega() *
                    contour::fk_integral(cplx(1.0, 0.0), 1.0, 12, gamma) *
                    delta->analytic(1);
    CHECK(std::abs(residue - expected) / std::abs(expected) < 1e-4);
}
