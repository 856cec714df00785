#include <doctest.h>

#include "clab/modgroup.hpp"
#include "clab/numth.hpp"

#include <cmath>

using namespace clab;
using namespace clab::modgroup;

TEST_CASE("mat2 basics") {
    Mat2 S{0, -1, 1, 0}, T{1, 1, 0, 1};
    CHECK(S.det() == Rational(1));
    CHECK((S * T).det() == Rational(1));
    CHECK(S.in_gamma0(1));
    CHECK(!S.in_gamma0(2));
    Mat2 G{1, 0, 11, 1};
    CHECK(G.in_gamma0(11));
    CHECK(Mat2{Rational(1, 2), 0, 0, 2}.det() == Rational(1));
    CHECK(!Mat2{Rational(1, 2), 0, 0, 2}.in_gamma0(1)); // non-integral entries
}

TEST_CASE("h_matrix is unimodular and reduces to the classical shape at H=1") {
    Mat2 M = h_matrix(2, 3, 5, Rational(1));
    CHECK(M == Mat2{2, 1, 5, 3});
    Mat2 MH = h_matrix(2, 3, 5, Rational(7, 4));
    CHECK(MH.det() == Rational(1));
    CHECK_THROWS_AS(h_matrix(2, 2, 5, Rational(1)), std::domain_error);
}

TEST_CASE("trace identity is exact over the whole grid") {
    for (Rational H : {Rational(1, 3), Rational(1, 2), Rational(9, 10), Rational(1)}) {
        for (int64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61,
                          67, 71, 73, 79, 83, 89, 97}) {
            for (int64_t N = 1; N <= 12; ++N) {
                CHECK(trace_product(p, N, H) == trace_product_closed(p, H));
            }
        }
    }
}

TEST_CASE("trace identity: pinned values") {
    // H = 1 collapses to the parabolic trace 2 for every p, N
    CHECK(trace_product(7, 3, Rational(1)) == Rational(2));
    // p = 2, H = 1/2 gives -9/8
    CHECK(trace_product_closed(2, Rational(1, 2)) == Rational(-9, 8));
    CHECK(trace_product(2, 1, Rational(1, 2)) == Rational(-9, 8));
    // |trace| < 2 for H = 9/10 and p >= 11
    for (int64_t p : {11, 13, 17, 97}) {
        Rational t = trace_product_closed(p, Rational(9, 10));
        CHECK(t < Rational(2));
        CHECK(t > Rational(-2));
    }
}

TEST_CASE("classification by trace") {
    auto elliptic_finite = classify(h_matrix(1, 1, 2, Rational(1, 2)));
    CHECK(elliptic_finite.type == MatClass::elliptic);
    CHECK(elliptic_finite.finite_order); // trace 1 = 2cos(pi/3)

    Mat2 m32{Rational(3, 2), Rational(-1), Rational(1), Rational(0)};
    auto elliptic_infinite = classify(m32);
    CHECK(m32.det() == Rational(1));
    CHECK(elliptic_infinite.type == MatClass::elliptic);
    CHECK(!elliptic_infinite.finite_order); // 3/2 is not a rational cosine value

    CHECK(classify(Mat2{1, 1, 0, 1}).type == MatClass::parabolic);
    CHECK(classify(Mat2{2, 1, 1, 1}).type == MatClass::hyperbolic);
    CHECK(classify(Mat2{0, -1, 1, 0}).finite_order); // trace 0
    CHECK_THROWS_AS(classify(Mat2{2, 0, 0, 1}), std::domain_error);
}

TEST_CASE("slash: identity, classical inversion, cocycle") {
    auto delta = forms::delta_form(6000);
    cplx z(0.3, 0.8);
    CHECK(std::abs(slash(*delta, identity_mat(), 12, z) - forms::eval_form(*delta, z)) < 1e-15);

    Mat2 S{0, -1, 1, 0};
    CHECK(std::abs(slash(*delta, S, 12, z) - forms::eval_form(*delta, z)) < 1e-12);
    CHECK(std::abs(slash(*delta, S, 12, cplx(0.0, 1.0)) -
                   forms::eval_form(*delta, cplx(0.0, 1.0))) < 1e-12);

    // cocycle on matrix pairs, including non-unit determinants
    std::vector<std::pair<Mat2, Mat2>> pairs = {
        {{1, 1, 0, 1}, {1, 0, 1, 1}},
        {{2, 1, 1, 1}, {1, -1, 0, 1}},
        {{2, 0, 0, 1}, {1, 0, 2, 1}},
    };
    cplx w(0.05, 1.7);
    for (const auto& [M1, M2] : pairs) {
        cplx lhs = std::pow(M2.det().to_double(), 6.0) *
                   std::pow(M2.c.to_double() * w + M2.d.to_double(), -12) *
                   slash(*delta, M1, 12, M2.apply(w));
        cplx rhs = slash(*delta, M1 * M2, 12, w);
        CHECK(std::abs(lhs - rhs) < 1e-10);
    }
}

TEST_CASE("modularity defects for the bundled forms") {
    std::vector<cplx> samples = {cplx(0.3, 0.8), cplx(0.0, 1.0), cplx(0.1, 1.1)};
    auto delta = forms::delta_form(6000);
    CHECK(modularity_defect(*delta, 2, 3, 5, samples) < 1e-9);
    CHECK(modularity_defect(*delta, 1, 0, 1, samples) < 1e-12);
    auto f11 = forms::level11_form(6000);
    CHECK(modularity_defect(*f11, 1, 1, 11, samples) < 1e-8);
    // omega consistency (i^{-l} omega)^2 = chi(-1) (-1)^l = 1
    cplx c = i_pow(-delta->weight()) * delta->omega();
    CHECK(std::abs(c * c - 1.0) < 1e-15);
    cplx c11 = i_pow(-f11->weight()) * f11->omega();
    CHECK(std::abs(c11 * c11 - 1.0) < 1e-15);
}

TEST_CASE("character of a matrix is multiplicative on the positive-corner shape") {
    numth::DirichletCharacter chi(7, 3);
    auto chi_of = [&](const Mat2& M) { return chi(M.d.num()); };
    Mat2 M1 = h_matrix(2, 4, 7, Rational(1));
    Mat2 M2 = h_matrix(3, 5, 14, Rational(1));
    Mat2 M12 = M1 * M2;
    CHECK(M12.in_gamma0(7));
    // exact root-of-unity indices agree
    int64_t i1, i2, i12, d;
    REQUIRE(chi.value_index(M1.d.num(), i1, d));
    REQUIRE(chi.value_index(M2.d.num(), i2, d));
    REQUIRE(chi.value_index(M12.d.num(), i12, d));
    CHECK((i1 + i2) % d == i12 % d);
    CHECK(std::abs(chi_of(M12) - chi_of(M1) * chi_of(M2)) < 1e-15);
}
