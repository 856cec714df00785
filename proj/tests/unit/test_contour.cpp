#include <doctest.h>

#include "clab/contour.hpp"
#include "clab/special.hpp"

#include <cmath>

using namespace clab;
using namespace clab::contour;

TEST_CASE("line_integral reproduces a rational residue value") {
    // f(u) = (2pi)^2/(9/4 - u^2) on Re u = -5/4: the single right pole at 3/2
    // gives (2pi)^2/3
    auto f = [](cplx u) { return two_pi * two_pi / (2.25 - u * u); };
    DecayInfo d;
    d.power = 2.0;
    d.conjugate_symmetric = true;
    ContourSpec spec;
    spec.sigma = -1.25;
    spec.tol = 1e-11;
    auto r = line_integral(f, spec, d);
    CHECK(r.converged);
    CHECK(std::abs(r.value.real() - two_pi * two_pi / 3.0) < 1e-11);
}

TEST_CASE("fk matching-weight closed form") {
    for (int k : {4, 6, 8, 12}) {
        auto gamma = gspec::gamma_c_shift_spec(Rational(k - 1, 2));
        cplx F = fk_integral(cplx(1.0, 0.0), 1.0, k, gamma);
        CHECK(std::abs(F - two_pi * two_pi / (k - 1)) < 1e-10);
    }
}

TEST_CASE("fk is contour independent") {
    auto gamma = gspec::gamma_c_shift_spec(Rational(11, 2));
    cplx a = fk_integral(cplx(2.0, 0.0), 1.5, 12, gamma, {}, -3.0);
    cplx b = fk_integral(cplx(2.0, 0.0), 1.5, 12, gamma, {}, -4.5);
    CHECK(std::abs(a - b) < 1e-8);
}

TEST_CASE("fk scaling envelope in x") {
    auto gamma = gspec::gamma_c_shift_spec(Rational(11, 2));
    double sigma1 = -3.75;
    double c = std::abs(fk_integral(cplx(2.0, 0.0), 1.0, 12, gamma, {}, sigma1));
    for (double x : {4.0, 25.0, 100.0}) {
        double v = std::abs(fk_integral(cplx(2.0, 0.0), x, 12, gamma, {}, sigma1));
        CHECK(v <= 2.0 * c * std::pow(x, sigma1));
    }
}

TEST_CASE("fk argument validation") {
    auto gamma = gspec::gamma_c_shift_spec(Rational(3, 2));
    CHECK_THROWS_AS(fk_integral(cplx(0.2, 0.0), 1.0, 4, gamma), std::domain_error);
    CHECK_THROWS_AS(fk_integral(cplx(1.0, 0.0), 1.0, 3, gamma), std::domain_error);
    CHECK_THROWS_AS(fk_integral(cplx(1.0, 0.0), -1.0, 4, gamma), std::domain_error);
    CHECK_THROWS_AS(fk_integral(cplx(1.0, 0.0), 1.0, 4, gamma, {}, -0.5), std::domain_error);
    CHECK_THROWS_AS(fk_integral(cplx(1.0, 0.0), 1.0, 4, gamma, {}, -1.5), std::domain_error);
}

TEST_CASE("h-rigidity: residues, quadrature and the paper polynomials") {
    for (auto [ell, k] : {std::pair<int, int>{2, 4}, {3, 5}, {1, 5}, {1, 7}}) {
        for (double H : {1.5, 2.0, 3.0}) {
            double value = h_rigidity_value(ell, k, H);
            cplx quad = h_rigidity_quadrature(ell, k, H);
            CHECK(std::abs(quad - value) < 1e-10);
        }
    }
    double r3 = std::sqrt(3.0);
    CHECK(std::abs(h_rigidity_poly(2, 4, 1.5) - (1.0 / 1.5 - std::pow(1.5, -3.0))) < 1e-13);
    CHECK(std::abs(h_rigidity_poly(3, 5, 2.0) - (0.25 - 0.0625)) < 1e-13);
    CHECK(std::abs(h_rigidity_poly(1, 5, r3)) < 1e-13);
    CHECK(std::abs(h_rigidity_poly(1, 7, r3) + 20.0 / 81.0) < 1e-13);
    CHECK_THROWS_AS(h_rigidity_value(1, 4, 2.0), std::domain_error);
    CHECK_THROWS_AS(h_rigidity_value(2, 4, 0.5), std::domain_error);
}

TEST_CASE("mellin-barnes representation of the bessel kernel") {
    for (int k : {4, 6}) {
        for (double y : {0.1, 1.0}) {
            cplx mb = mellin_barnes_bessel(k, y);
            double ref = two_pi * special::bessel_j(k - 1, 2.0 * two_pi * y);
            CHECK(std::abs(mb - ref) < 1e-10);
        }
    }
    // abscissa freedom inside ((1-k)/2, 0)
    cplx a = mellin_barnes_bessel(6, 0.5, -0.7);
    cplx b = mellin_barnes_bessel(6, 0.5, -1.9);
    CHECK(std::abs(a - b) < 1e-9);
}

TEST_CASE("g vanishes on (0,1) for the admissible archetypes") {
    for (auto [ell, eps] : {std::pair<int, int>{1, 1}, {2, 0}, {3, 1}}) {
        GTransform g{gspec::gamma_c_weight_spec(ell), eps};
        g.check_decay();
        for (double y : {0.15, 0.5, 0.92}) CHECK(std::abs(g(y)) < 1e-9);
    }
}

TEST_CASE("g-transform abscissa freedom") {
    GTransform g1{gspec::gamma_c_shift_spec(Rational(0), Rational(11, 10)), 1};
    GTransform g2 = g1;
    g2.sigma = -2.3;
    GTransform g3 = g1;
    g3.sigma = -2.7;
    for (double y : {0.4, 1.3}) {
        double base = g1(y);
        CHECK(std::abs(g2(y) - base) < 1e-8);
        CHECK(std::abs(g3(y) - base) < 1e-8);
    }
}

TEST_CASE("pairings vanish for true gamma and light up under perturbation") {
    GTransform g_odd{gspec::gamma_c_weight_spec(1), 1};
    auto grid_odd = sample_g_grid(g_odd);
    for (int k : {5, 7, 9}) CHECK(std::abs(fn_g_pairing(grid_odd, k)) < 1e-6);
    auto rep_odd = fourier_orthogonality_check(grid_odd);
    CHECK(std::abs(rep_odd.a) < 1e-6);
    CHECK(std::abs(rep_odd.b) < 1e-6);
    CHECK(rep_odd.higher_residual < 1e-6);

    GTransform g_even{gspec::gamma_c_weight_spec(2), 0};
    auto grid_even = sample_g_grid(g_even);
    for (int k : {4, 6, 8}) CHECK(std::abs(fn_g_pairing(grid_even, k)) < 1e-6);
    auto rep_even = fourier_orthogonality_check(grid_even);
    CHECK(std::abs(rep_even.a) < 1e-6);
    CHECK(rep_even.higher_residual < 1e-6);

    GTransform g_pert{gspec::gamma_c_shift_spec(Rational(0), Rational(11, 10)), 1};
    auto rep_pert = fourier_orthogonality_check(g_pert);
    CHECK(rep_pert.higher_residual > 1e-3);
}

TEST_CASE("three routes to the perturbed pairing agree") {
    // y-side quadrature, Mellin-side pairing and the shifted-contour residue
    // sum are computed along genuinely different paths
    auto gamma = gspec::gamma_c_shift_spec(Rational(0), Rational(11, 10));
    GTransform g{gamma, 1};
    double residues = h_rigidity_value(1, 5, 1.1);
    double y_side = fn_g_pairing(g, 5);
    cplx mellin_side = mellin_pairing(g, 4);
    CHECK(std::abs(y_side - residues) < 1e-6);
    CHECK(std::abs(mellin_side - residues) < 1e-9);
}

TEST_CASE("mellin pairing identity for the even parity") {
    auto gamma = gspec::gamma_c_shift_spec(Rational(1, 2), Rational(11, 10));
    GTransform g{gamma, 0};
    double residues = h_rigidity_value(2, 4, 1.1);
    double y_side = fn_g_pairing(g, 4);
    cplx mellin_side = mellin_pairing(g, 3);
    CHECK(std::abs(y_side - residues) < 1e-6);
    CHECK(std::abs(mellin_side - residues) < 1e-9);
}
