#include <doctest.h>

#include "clab/special.hpp"
#include "clab/twists.hpp"

#include <cmath>

using namespace clab;
using namespace clab::twists;

namespace {
forms::FormPtr shared_delta() {
    static forms::FormPtr f = forms::delta_form(100000);
    return f;
}
} // namespace

TEST_CASE("twist points validate their data") {
    TwistPoint pt(cplx(2.0, 0.0), 2, 5);
    CHECK(pt.abar == 3);
    CHECK_THROWS_AS(TwistPoint(cplx(2.0, 0.0), 2, 4), std::domain_error); // gcd(2,4) > 1
    TwistPoint explicit_pt(cplx(1.0, 0.0), 2, 3, 5, 0.0);
    CHECK(explicit_pt.abar == 3);
    CHECK_THROWS_AS(TwistPoint(cplx(1.0, 0.0), 2, 2, 5, 0.0), std::domain_error);
}

TEST_CASE("series equals integral far inside the convergence region") {
    auto delta = shared_delta();
    for (cplx s : {cplx(2.0, 0.0), cplx(2.0, 1.0), cplx(3.0, -0.5)}) {
        TwistPoint pt(s, 1, 5);
        auto series = lambda_series(*delta, s, 1, 5, delta->size());
        cplx integral = lambda_integral(*delta, pt);
        CHECK(std::abs(series.value - integral) < 1e-8);
    }
    // integer alpha reduces to alpha = 0
    auto s0 = lambda_series(*delta, cplx(2.0, 0.0), 0, 1, 40000);
    auto s1 = lambda_series(*delta, cplx(2.0, 0.0), 1, 1, 40000);
    CHECK(std::abs(s0.value - s1.value) == 0.0);
    CHECK_THROWS_AS(lambda_series(*delta, cplx(0.9, 0.0), 1, 5, 100), std::domain_error);
}

TEST_CASE("two truncations of the series agree") {
    auto delta = shared_delta();
    auto a = lambda_series(*delta, cplx(3.0, 0.0), 1, 5, 50000);
    auto b = lambda_series(*delta, cplx(3.0, 0.0), 1, 5, 100000);
    CHECK(std::abs(a.value - b.value) < 1e-10);
}

TEST_CASE("completed twists are finite at spread-out points") {
    auto delta = shared_delta();
    for (double sre : {0.0, 0.5, -1.0, 2.0}) {
        TwistPoint pt(cplx(sre, 0.0), 1, 1);
        cplx v = lambda_integral(*delta, pt);
        CHECK(is_finite(v));
    }
    // self-dual central value is real
    TwistPoint center(cplx(0.5, 0.0), 1, 1);
    cplx v = lambda_integral(*delta, center);
    CHECK(std::abs(v.imag()) < 1e-13);
    CHECK(v.real() > 0.0);
}

TEST_CASE("split height does not matter") {
    auto delta = shared_delta();
    TwistPoint base(cplx(1.5, 2.0), 2, 5);
    cplx ref = lambda_integral(*delta, base);
    for (double y0 : {0.1, 0.2, 0.4}) {
        TwistPoint pt(cplx(1.5, 2.0), 2, 5, y0);
        CHECK(std::abs(lambda_integral(*delta, pt) - ref) < 1e-10);
    }
}

TEST_CASE("functional equation defects") {
    auto delta = shared_delta();
    for (auto [q, a] : {std::pair<int64_t, int64_t>{1, 1}, {5, 2}, {7, 3}}) {
        for (cplx s : {cplx(0.5, 0.0), cplx(0.5, 3.0), cplx(2.0, 1.0)}) {
            CHECK(fe_defect(*delta, TwistPoint(s, a, q)) < 1e-8);
        }
    }
    auto f11 = forms::level11_form(8000);
    CHECK(fe_defect(*f11, TwistPoint(cplx(1.0, 2.0), 1, 11)) < 1e-7);
    CHECK(fe_defect(*f11, TwistPoint(cplx(1.0, 2.0), 5, 22)) < 1e-7);
}

TEST_CASE("applying the functional equation twice returns the start") {
    auto delta = shared_delta();
    int64_t q = 5, a = 2, abar = 3;
    cplx s(0.75, 1.2);
    cplx lhs = lambda_integral(*delta, TwistPoint(s, a, q));
    // one application
    cplx mid = delta->omega() * delta->character().lifted(abar, q) *
               std::exp((1.0 - 2.0 * s) * std::log(static_cast<double>(q))) *
               lambda_integral(*delta, TwistPoint(1.0 - s, q - abar, q));
    CHECK(std::abs(lhs - mid) < 1e-9);
    // the sign relation (i^{-k} omega)^2 chi(-1) (-1)^k = 1 makes the double
    // application the identity
    cplx unit = std::pow(i_pow(-delta->weight()) * delta->omega(), 2.0) *
                delta->character()(-1) * (delta->weight() % 2 == 0 ? 1.0 : -1.0);
    CHECK(std::abs(unit - 1.0) < 1e-14);
}
