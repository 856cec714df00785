#include <doctest.h>

#include "clab/forms.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numeric>

using namespace clab;
using namespace clab::forms;

TEST_CASE("eta power series: leading coefficients") {
    auto delta = delta_form(200);
    CHECK(delta->exact_coefficient(1) == 1);
    CHECK(delta->exact_coefficient(2) == -24);
    CHECK(delta->exact_coefficient(3) == 252);
    CHECK(delta->exact_coefficient(4) == -1472);
    CHECK(delta->exact_coefficient(5) == 4830);

    auto f11 = level11_form(60);
    CHECK(f11->exact_coefficient(1) == 1);
    CHECK(f11->exact_coefficient(2) == -2);
    CHECK(f11->exact_coefficient(3) == -1);
    CHECK(f11->exact_coefficient(11) == 1);

    CHECK_THROWS_AS(eta_power_series({{1, 23}}, 50), std::domain_error);
}

TEST_CASE("level-11 coefficients against a brute-force product oracle") {
    // multiply (q-shifted) eta factors termwise with plain integer polys
    const int M = 24;
    auto mult = [&](std::vector<long long> a, const std::vector<long long>& b) {
        std::vector<long long> out(M + 1, 0);
        for (int i = 0; i <= M; ++i)
            for (int j = 0; i + j <= M; ++j) out[i + j] += a[i] * b[j];
        return out;
    };
    auto euler_factor = [&](int d) {
        // prod_{n>=1} (1 - q^{dn}) expanded brutally
        std::vector<long long> acc(M + 1, 0);
        acc[0] = 1;
        for (int n = 1; d * n <= M; ++n) {
            std::vector<long long> f(M + 1, 0);
            f[0] = 1;
            f[d * n] = -1;
            acc = mult(acc, f);
        }
        return acc;
    };
    auto e1 = euler_factor(1), e11 = euler_factor(11);
    auto prod = mult(mult(e1, e1), mult(e11, e11));
    auto f11 = level11_form(M);
    for (int n = 1; n <= M; ++n) CHECK(f11->exact_coefficient(n) == prod[n - 1]);
}

TEST_CASE("tau is multiplicative on coprime pairs up to 100") {
    auto delta = delta_form(120);
    for (int64_t m = 2; m <= 10; ++m) {
        for (int64_t n = 2; n <= 10; ++n) {
            if (std::gcd(m, n) != 1 || m * n > 100) continue;
            CHECK(delta->exact_coefficient(m * n) ==
                  delta->exact_coefficient(m) * delta->exact_coefficient(n));
        }
    }
    // Hecke recursion at p = 2
    CHECK(delta->exact_coefficient(4) ==
          delta->exact_coefficient(2) * delta->exact_coefficient(2) - 2048);
}

TEST_CASE("eisenstein coefficients") {
    auto e4 = eisenstein_coeffs(4, 6);
    CHECK(e4[0] == 1.0);
    CHECK(e4[1] == 240.0);
    CHECK(e4[2] == 2160.0);
    auto e6 = eisenstein_coeffs(6, 3);
    CHECK(e6[1] == -504.0);
    CHECK_THROWS_AS(eisenstein_coeffs(3, 5), std::domain_error);
}

TEST_CASE("coefficient files round-trip") {
    auto delta = delta_form(128);
    std::string path = (std::filesystem::temp_directory_path() / "clab_delta_test.coeffs").string();
    save_coefficients(*delta, path, 100);
    auto loaded = load_coefficients(path);
    CHECK(loaded->weight() == 12);
    CHECK(loaded->level() == 1);
    CHECK(loaded->omega() == cplx(1.0, 0.0));
    for (int64_t n = 1; n <= 100; ++n)
        CHECK(loaded->coefficient(n).real() ==
              doctest::Approx(delta->coefficient(n).real()).epsilon(1e-12));
    // analytic normalization converts back on load
    save_coefficients(*delta, path, 64, Normalization::analytic);
    auto analytic = load_coefficients(path);
    for (int64_t n = 1; n <= 64; ++n)
        CHECK(analytic->coefficient(n).real() ==
              doctest::Approx(delta->coefficient(n).real()).epsilon(1e-10));
    std::filesystem::remove(path);
}

TEST_CASE("coefficient files: malformed input") {
    auto path = std::filesystem::temp_directory_path() / "clab_bad.coeffs";
    auto write = [&](const std::string& body) {
        std::ofstream out(path);
        out << body;
    };
    write("weight: 12\nlevel: 1\ncharacter: 1.1\nomega: 1 0\nnormalization: arithmetic\n"
          "1 1\n3 252\n");
    CHECK_THROWS_WITH_AS(static_cast<void>(load_coefficients(path.string())),
                         doctest::Contains("expected n = 2"), std::runtime_error);
    write("weight: 12\nlevel: 1\ncharacter: 1.1\nomega: 1 0\n1 1\n");
    CHECK_THROWS_WITH_AS(static_cast<void>(load_coefficients(path.string())),
                         doctest::Contains("incomplete header"), std::runtime_error);
    write("weight: 12\nlevel: 11\ncharacter: 1.1\nomega: 1 0\nnormalization: arithmetic\n1 1\n");
    CHECK_THROWS_WITH_AS(static_cast<void>(load_coefficients(path.string())),
                         doctest::Contains("modulus"), std::runtime_error);
    write("weight: 12\nlevel: 1\ncharacter: 1.1\nomega: 1 0\nnormalization: arithmetic\n"
          "1 not-a-number\n");
    CHECK_THROWS_AS(static_cast<void>(load_coefficients(path.string())), std::runtime_error);
    std::filesystem::remove(path);
}

TEST_CASE("eval_form at the classical point") {
    auto delta = delta_form(200);
    cplx v = eval_form(*delta, cplx(0.0, 1.0));
    CHECK(v.real() == doctest::Approx(0.0017853698506421).epsilon(1e-10));
    CHECK(std::abs(v.imag()) < 1e-15);
    // real on the imaginary axis
    for (double y : {0.6, 1.3, 2.0}) CHECK(std::abs(eval_form(*delta, cplx(0.0, y)).imag()) < 1e-15);
}

TEST_CASE("eval_form decay envelope and insufficiency error") {
    auto delta = delta_form(300);
    for (double y : {2.0, 3.0, 4.0}) {
        double v = std::abs(eval_form(*delta, cplx(0.37, y)));
        CHECK(v <= 1.5 * std::exp(-two_pi * y));
    }
    auto tiny = delta_form(40);
    CHECK_THROWS_WITH_AS(static_cast<void>(eval_form(*tiny, cplx(0.0, 0.02))),
                         doctest::Contains("insufficient"), std::runtime_error);
}

TEST_CASE("eisenstein providers evaluate") {
    auto e4 = eisenstein_form(4, 400);
    auto e6 = eisenstein_form(6, 400);
    auto delta = delta_form(400);
    cplx z(0.21, 0.9);
    cplx lhs = (std::pow(eval_form(*e4, z), 3) - std::pow(eval_form(*e6, z), 2)) / 1728.0;
    CHECK(std::abs(lhs - eval_form(*delta, z)) < 1e-12);
}
