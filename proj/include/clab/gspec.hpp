#ifndef CLAB_GSPEC_HPP
#define CLAB_GSPEC_HPP

#include "clab/common.hpp"
#include "clab/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace clab::gspec {

struct RationalComplex {
    Rational re;
    Rational im;
    bool is_real() const { return im.is_zero(); }
    cplx to_cplx() const { return {re.to_double(), im.to_double()}; }
};

// One factor of a gamma-factor product. kind G is a plain Gamma(lambda s + mu);
// kind GC is Gamma_C(lambda s + mu) = 2 (2 pi)^{-lambda s - mu} Gamma(lambda s + mu)
// (GC requires real mu so the absorbed constant stays positive real).
struct GammaFactor {
    Rational lambda;    // > 0
    RationalComplex mu;
    bool gamma_c = false;
};

// gamma(s) = Q^s prod_j Gamma(lambda_j s + mu_j), extended with optional
// Gamma_C factors. Q is an exact positive rational; the 2 pi powers of GC
// factors are tracked separately so pole bookkeeping stays rational.
struct GammaFactorSpec {
    Rational Q{1};
    std::vector<GammaFactor> factors;
    // Internal-only extra scale exp(log_scale) produced by shifted(); always 0
    // for parsed specs and ignored by the printer.
    double log_scale = 0.0;

    // Effective exponential scale: Q * prod_{GC} (2 pi)^{-lambda_j}.
    double q_effective() const;
    // Constant in front coming from GC factors: prod 2 (2 pi)^{-mu_j}.
    double constant() const;
    // Numeric evaluation of gamma(s).
    cplx evaluate(cplx s) const;
    // log gamma(s) up to multiples of 2 pi i (for use inside exponentials).
    cplx log_evaluate(cplx s) const;
    // sum of lambda_j (exact).
    Rational lambda_sum() const;
    // sum lambda_j log lambda_j (controls contour oscillation bookkeeping).
    double lambda_log_sum() const;
    // Shift s -> s + delta: returns the spec of gamma(s + delta).
    GammaFactorSpec shifted(const Rational& delta) const;
};

struct ParseError : std::runtime_error {
    size_t position;
    ParseError(const std::string& msg, size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

// Text grammar:  Q=<rat> ; FACTOR [; FACTOR]*
//   FACTOR := ("G" | "GC") "(" <rat> "," <cplx> ")"
//   <rat>  := int | int "/" int
//   <cplx> := <rat> [("+" | "-") <rat> "i"]
// Whitespace is insignificant. Throws ParseError with position on syntax
// errors, std::domain_error on semantic violations (lambda <= 0, Q <= 0).
GammaFactorSpec parse_gamma_spec(const std::string& text);

// Canonical printer; parse(print(spec)) == spec.
std::string print_gamma_spec(const GammaFactorSpec& spec);

// Theorem-grade validation: Re(mu_j) > -lambda_j/2 and sum lambda_j = 1.
// Returns an explanation for the first violated condition, empty if fine.
std::string theorem_mode_violation(const GammaFactorSpec& spec);

struct PoleCensus {
    int64_t pole_count = 0;            // integers in [-T, 0) that are poles
    std::vector<int64_t> missing;      // integers in [-T, 0) that are not poles
    bool cofinite = false;             // poles at all but finitely many negative integers
};

// Exact census of negative-integer poles in [-T, 0). The cofinite decision is
// made from the residue classes of the pole progressions, not from T.
PoleCensus pole_census(const GammaFactorSpec& spec, int64_t T);

struct NormalizedGamma {
    double c = 1.0;                 // positive
    double H = 1.0;                 // positive
    std::vector<int64_t> roots;     // roots of the monic P, distinct, <= 0, sorted
    double max_rel_error = 0.0;     // numeric postcondition residual

    double P(cplx s, cplx* out = nullptr) const; // evaluates |P|, value via out
};

// Rewrites gamma(s) as c P(s) H^s Gamma_C(s) via Gauss multiplication and the
// recurrence, with an enforced numeric identity check at random sample points.
// Throws std::domain_error("hypothesis violated: ...") when the input is not
// of the required shape.
NormalizedGamma normalize(const GammaFactorSpec& spec);

struct WeightDetection {
    int ell = 0; // 1, 2 or 3
    double c = 1.0;
    double H = 1.0;
};

// Matches gamma against c H^s Gamma_C(s + (ell-1)/2) for ell in {1,2,3},
// trying the half-shift branch for even ell. nullopt when no match.
std::optional<WeightDetection> detect_weight(const GammaFactorSpec& spec);

// Spec of Gamma_C(s + (ell-1)/2), the weight-ell archetype.
GammaFactorSpec gamma_c_weight_spec(int ell);

// Spec of Gamma_C(s + (k-1)/2) scaled by H^s (H rational), used as the gamma
// factor of a weight-k form and for perturbation experiments.
GammaFactorSpec gamma_c_shift_spec(const Rational& shift, const Rational& H = Rational(1));

} // namespace clab::gspec

#endif
