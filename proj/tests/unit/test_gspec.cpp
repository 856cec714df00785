#include <doctest.h>

#include "clab/gspec.hpp"
#include "clab/special.hpp"

#include <cmath>
#include <random>

using namespace clab;
using namespace clab::gspec;

TEST_CASE("parser handles the grammar") {
    auto spec = parse_gamma_spec("Q=1; G(1,0)");
    CHECK(spec.Q == Rational(1));
    REQUIRE(spec.factors.size() == 1);
    CHECK(spec.factors[0].lambda == Rational(1));
    CHECK(spec.factors[0].mu.re == Rational(0));

    auto two = parse_gamma_spec(" Q = 3/2 ; G( 1/2 , 0 ) ; GC(1, 1/2+1/3i) ");
    CHECK(two.Q == Rational(3, 2));
    REQUIRE(two.factors.size() == 2);
    CHECK(two.factors[1].gamma_c);
    CHECK(two.factors[1].mu.im == Rational(1, 3));
}

TEST_CASE("parser rejects bad input with positions") {
    CHECK_THROWS_AS(parse_gamma_spec("G(1,0)"), ParseError);
    CHECK_THROWS_AS(parse_gamma_spec("Q=1"), ParseError);
    CHECK_THROWS_AS(parse_gamma_spec("Q=1; G(1,0) garbage"), ParseError);
    CHECK_THROWS_AS(parse_gamma_spec("Q=1; G(1/0,0)"), ParseError);
    CHECK_THROWS_AS(parse_gamma_spec("Q=0; G(1,0)"), std::domain_error);
    CHECK_THROWS_AS(parse_gamma_spec("Q=1; G(-1/2,0)"), std::domain_error);
    try {
        parse_gamma_spec("Q=1; G(1,0");
    } catch (const ParseError& e) {
        CHECK(e.position > 0);
    }
}

TEST_CASE("print-then-parse is the identity on random specs") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int64_t> small(1, 6), signed_small(-4, 4);
    for (int trial = 0; trial < 60; ++trial) {
        GammaFactorSpec spec;
        spec.Q = Rational(small(rng), small(rng));
        int nf = 1 + static_cast<int>(rng() % 3);
        for (int j = 0; j < nf; ++j) {
            GammaFactor f;
            f.lambda = Rational(small(rng), small(rng));
            f.mu.re = Rational(signed_small(rng), small(rng));
            f.mu.im = (rng() % 2) ? Rational(signed_small(rng), small(rng)) : Rational(0);
            spec.factors.push_back(f);
        }
        std::string text = print_gamma_spec(spec);
        auto parsed = parse_gamma_spec(text);
        CHECK(parsed.Q == spec.Q);
        REQUIRE(parsed.factors.size() == spec.factors.size());
        for (size_t j = 0; j < spec.factors.size(); ++j) {
            CHECK(parsed.factors[j].lambda == spec.factors[j].lambda);
            CHECK(parsed.factors[j].mu.re == spec.factors[j].mu.re);
            CHECK(parsed.factors[j].mu.im == spec.factors[j].mu.im);
        }
        CHECK(print_gamma_spec(parsed) == text);
    }
}

TEST_CASE("theorem-mode validation") {
    CHECK(theorem_mode_violation(parse_gamma_spec("Q=1; G(1/2,0); G(1/2,1/2)")).empty());
    CHECK(!theorem_mode_violation(parse_gamma_spec("Q=2/3; G(1/3,-1)")).empty());
    CHECK(!theorem_mode_violation(parse_gamma_spec("Q=1; G(1,0); G(1,0)")).empty());
}

TEST_CASE("pole census") {
    auto full = pole_census(parse_gamma_spec("Q=1; G(1,0)"), 10);
    CHECK(full.pole_count == 10);
    CHECK(full.missing.empty());
    CHECK(full.cofinite);

    auto half = pole_census(parse_gamma_spec("Q=1; G(1/2,0)"), 10);
    CHECK(half.pole_count == 5);
    CHECK(half.missing == std::vector<int64_t>{-9, -7, -5, -3, -1});
    CHECK(!half.cofinite);

    auto interleaved = pole_census(parse_gamma_spec("Q=1; G(1/2,0); G(1/2,1/2)"), 10);
    CHECK(interleaved.missing.empty());
    CHECK(interleaved.cofinite);

    // complex mu contributes no integer poles
    auto complex_mu = pole_census(parse_gamma_spec("Q=1; G(1,0+1i)"), 10);
    CHECK(complex_mu.pole_count == 0);
    CHECK(!complex_mu.cofinite);
}

TEST_CASE("pole-density dichotomy: cofinite poles force lambda-sum >= 1") {
    std::mt19937_64 rng(123);
    std::uniform_int_distribution<int64_t> den(1, 4), num(0, 5);
    int cofinite_seen = 0;
    for (int trial = 0; trial < 400; ++trial) {
        GammaFactorSpec spec;
        spec.Q = Rational(1);
        int nf = 1 + static_cast<int>(rng() % 3);
        for (int j = 0; j < nf; ++j) {
            GammaFactor f;
            f.lambda = Rational(1, den(rng));
            f.mu.re = Rational(num(rng), den(rng));
            spec.factors.push_back(f);
        }
        auto census = pole_census(spec, 6);
        if (census.cofinite) {
            ++cofinite_seen;
            CHECK(spec.lambda_sum() >= Rational(1));
        }
    }
    CHECK(cofinite_seen > 20); // the property was actually exercised
}

TEST_CASE("normalize: duplication collapses to (sqrt pi, pi, empty)") {
    auto n = normalize(parse_gamma_spec("Q=1; G(1/2,0); G(1/2,1/2)"));
    CHECK(std::abs(n.c - std::sqrt(pi)) < 1e-12);
    CHECK(std::abs(n.H - pi) < 1e-12);
    CHECK(n.roots.empty());
    CHECK(n.max_rel_error < 1e-10);
}

TEST_CASE("normalize: triplication and recurrence reductions verify numerically") {
    // Gamma(s/3) Gamma((s+1)/3) Gamma((s+2)/3) and a shifted variant with
    // polynomial part
    auto n3 = normalize(parse_gamma_spec("Q=1; G(1/3,0); G(1/3,1/3); G(1/3,2/3)"));
    CHECK(n3.roots.empty());
    CHECK(n3.max_rel_error < 1e-10);

    auto shifted = normalize(parse_gamma_spec("Q=1; G(1/2,0); G(1/2,3/2)"));
    // Gamma(s/2) Gamma((s+3)/2): the reduction must produce the root -1
    CHECK(shifted.roots == std::vector<int64_t>{-1});
    CHECK(shifted.max_rel_error < 1e-10);

    auto gamma_plain = normalize(parse_gamma_spec("Q=1; G(1,2)"));
    CHECK(gamma_plain.roots == std::vector<int64_t>{-1, 0});
    CHECK(gamma_plain.max_rel_error < 1e-10);
}

TEST_CASE("normalize rejections") {
    CHECK_THROWS_WITH_AS(normalize(parse_gamma_spec("Q=1; G(1/2,0)")),
                         doctest::Contains("cofinitely"), std::domain_error);
    // non-contiguous residues: poles only on the evens, doubled
    CHECK_THROWS_AS(normalize(parse_gamma_spec("Q=1; G(1/2,0); G(1/2,1)")), std::domain_error);
    // doubled full progression: residues mod 1 covered twice
    CHECK_THROWS_WITH_AS(normalize(parse_gamma_spec("Q=1; G(1,0); G(1,0)")),
                         doctest::Contains("exactly once"), std::domain_error);
    // lambda not a reciprocal integer
    CHECK_THROWS_AS(normalize(parse_gamma_spec("Q=1; G(2/3,0); G(1/3,1/2)")), std::domain_error);
}

TEST_CASE("detect_weight on the archetypes and their dressings") {
    for (int ell : {1, 2, 3}) {
        auto det = detect_weight(gamma_c_weight_spec(ell));
        REQUIRE(det.has_value());
        CHECK(det->ell == ell);
        CHECK(std::abs(det->c - 1.0) < 1e-12);
        CHECK(std::abs(det->H - 1.0) < 1e-12);
    }
    // (1/2)^s Gamma(s) = (1/2) pi^s Gamma_C(s)
    auto det = detect_weight(parse_gamma_spec("Q=1/2; G(1,0)"));
    REQUIRE(det.has_value());
    CHECK(det->ell == 1);
    CHECK(std::abs(det->c - 0.5) < 1e-12);
    CHECK(std::abs(det->H - pi) < 1e-12);
    // H^s-dressed archetype
    auto dressed = detect_weight(gamma_c_shift_spec(Rational(1, 2), Rational(3, 2)));
    REQUIRE(dressed.has_value());
    CHECK(dressed->ell == 2);
    CHECK(std::abs(dressed->H - 1.5) < 1e-12);
    // no match
    CHECK(!detect_weight(parse_gamma_spec("Q=1; G(1,0); G(1,0)")).has_value());
    CHECK(!detect_weight(parse_gamma_spec("Q=1; G(1,5/2)")).has_value());
}

TEST_CASE("spec evaluation matches brute products") {
    auto spec = parse_gamma_spec("Q=2/3; G(1/2,1/4); G(1/2,1)");
    cplx s(1.3, -0.7);
    cplx brute = std::pow(cplx(2.0 / 3.0, 0.0), s) * special::gamma(0.5 * s + 0.25) *
                 special::gamma(0.5 * s + 1.0);
    CHECK(std::abs(spec.evaluate(s) - brute) / std::abs(brute) < 1e-13);
    // GC factor carries its own constants
    auto gc = gamma_c_weight_spec(2);
    CHECK(std::abs(gc.evaluate(s) - special::gamma_c(s + 0.5)) / std::abs(gc.evaluate(s)) <
          1e-13);
}
