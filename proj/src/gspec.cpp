#include "clab/gspec.hpp"
#include "clab/special.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

namespace clab::gspec {

// ---------------------------------------------------------------------------
// GammaFactorSpec numerics
// ---------------------------------------------------------------------------

namespace {
const double kLog2Pi = std::log(two_pi);
}

double GammaFactorSpec::q_effective() const {
    double q = Q.to_double();
    for (const auto& f : factors)
        if (f.gamma_c) q *= std::pow(two_pi, -f.lambda.to_double());
    return q;
}

double GammaFactorSpec::constant() const {
    double c = std::exp(log_scale);
    for (const auto& f : factors)
        if (f.gamma_c) c *= 2.0 * std::pow(two_pi, -f.mu.re.to_double());
    return c;
}

cplx GammaFactorSpec::evaluate(cplx s) const { return std::exp(log_evaluate(s)); }

cplx GammaFactorSpec::log_evaluate(cplx s) const {
    cplx lg = log_scale + s * std::log(Q.to_double());
    for (const auto& f : factors) {
        cplx arg = f.lambda.to_double() * s + f.mu.to_cplx();
        if (f.gamma_c) {
            lg += std::log(2.0) - arg * kLog2Pi;
        }
        lg += special::log_gamma(arg);
    }
    return lg;
}

Rational GammaFactorSpec::lambda_sum() const {
    Rational sum(0);
    for (const auto& f : factors) sum += f.lambda;
    return sum;
}

double GammaFactorSpec::lambda_log_sum() const {
    double v = 0.0;
    for (const auto& f : factors) {
        double l = f.lambda.to_double();
        v += l * std::log(l);
    }
    return v;
}

GammaFactorSpec GammaFactorSpec::shifted(const Rational& delta) const {
    GammaFactorSpec out = *this;
    for (auto& f : out.factors) f.mu.re += f.lambda * delta;
    // Q^{s+delta} = Q^delta Q^s; the residual constant lives in log_scale.
    out.log_scale = log_scale + delta.to_double() * std::log(Q.to_double());
    return out;
}

// ---------------------------------------------------------------------------
// Parser / printer
// ---------------------------------------------------------------------------

namespace {

struct Cursor {
    const std::string& text;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) { ++pos; return true; }
        return false;
    }
    void expect(char c, const char* what) {
        if (!eat(c)) throw ParseError(std::string("expected '") + c + "' " + what, pos);
    }
    bool peek_is(char c) {
        skip_ws();
        return pos < text.size() && text[pos] == c;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
};

int64_t parse_int(Cursor& cur) {
    cur.skip_ws();
    size_t start = cur.pos;
    bool neg = false;
    if (cur.pos < cur.text.size() && (cur.text[cur.pos] == '-' || cur.text[cur.pos] == '+')) {
        neg = cur.text[cur.pos] == '-';
        ++cur.pos;
    }
    if (cur.pos >= cur.text.size() || !std::isdigit(static_cast<unsigned char>(cur.text[cur.pos])))
        throw ParseError("expected integer", start);
    int64_t v = 0;
    while (cur.pos < cur.text.size() && std::isdigit(static_cast<unsigned char>(cur.text[cur.pos]))) {
        v = v * 10 + (cur.text[cur.pos] - '0');
        if (v < 0) throw ParseError("integer overflow", start);
        ++cur.pos;
    }
    return neg ? -v : v;
}

Rational parse_rational(Cursor& cur) {
    int64_t num = parse_int(cur);
    if (cur.peek_is('/')) {
        cur.eat('/');
        size_t dpos = cur.pos;
        int64_t den = parse_int(cur);
        if (den == 0) throw ParseError("zero denominator", dpos);
        return Rational(num, den);
    }
    return Rational(num);
}

RationalComplex parse_complex(Cursor& cur) {
    RationalComplex z;
    z.re = parse_rational(cur);
    z.im = Rational(0);
    cur.skip_ws();
    if (cur.pos < cur.text.size() && (cur.text[cur.pos] == '+' || cur.text[cur.pos] == '-')) {
        bool neg = cur.text[cur.pos] == '-';
        ++cur.pos;
        Rational im = parse_rational(cur);
        cur.skip_ws();
        if (cur.pos >= cur.text.size() || cur.text[cur.pos] != 'i')
            throw ParseError("expected 'i' after imaginary part", cur.pos);
        ++cur.pos;
        z.im = neg ? -im : im;
    }
    return z;
}

} // namespace

GammaFactorSpec parse_gamma_spec(const std::string& text) {
    Cursor cur{text};
    cur.skip_ws();
    if (!(cur.pos < text.size() && (text[cur.pos] == 'Q' || text[cur.pos] == 'q')))
        throw ParseError("expected 'Q='", cur.pos);
    ++cur.pos;
    cur.expect('=', "after Q");
    GammaFactorSpec spec;
    spec.Q = parse_rational(cur);
    if (!(spec.Q > Rational(0))) throw std::domain_error("gamma spec: Q must be positive");
    while (cur.eat(';')) {
        cur.skip_ws();
        size_t fpos = cur.pos;
        if (cur.pos >= text.size() || (text[cur.pos] != 'G' && text[cur.pos] != 'g'))
            throw ParseError("expected factor 'G(...)' or 'GC(...)'", fpos);
        ++cur.pos;
        GammaFactor f;
        if (cur.pos < text.size() && (text[cur.pos] == 'C' || text[cur.pos] == 'c')) {
            f.gamma_c = true;
            ++cur.pos;
        }
        cur.expect('(', "after factor name");
        f.lambda = parse_rational(cur);
        cur.expect(',', "between factor arguments");
        f.mu = parse_complex(cur);
        cur.expect(')', "closing factor");
        if (!(f.lambda > Rational(0)))
            throw std::domain_error("gamma spec: lambda must be positive");
        if (f.gamma_c && !f.mu.is_real())
            throw std::domain_error("gamma spec: GC factors require real mu");
        spec.factors.push_back(f);
    }
    if (!cur.done()) throw ParseError("trailing input", cur.pos);
    if (spec.factors.empty()) throw ParseError("at least one factor required", cur.pos);
    return spec;
}

std::string print_gamma_spec(const GammaFactorSpec& spec) {
    std::ostringstream os;
    os << "Q=" << spec.Q.str();
    for (const auto& f : spec.factors) {
        os << "; " << (f.gamma_c ? "GC(" : "G(") << f.lambda.str() << ",";
        os << f.mu.re.str();
        if (!f.mu.im.is_zero()) {
            Rational im = f.mu.im;
            if (im > Rational(0))
                os << "+" << im.str() << "i";
            else
                os << "-" << (-im).str() << "i";
        }
        os << ")";
    }
    return os.str();
}

std::string theorem_mode_violation(const GammaFactorSpec& spec) {
    for (const auto& f : spec.factors) {
        // Re(mu) > -lambda/2
        if (!(f.mu.re > -(f.lambda / Rational(2))))
            return "factor with Re(mu) <= -lambda/2: G(" + f.lambda.str() + "," + f.mu.re.str() + ")";
    }
    if (spec.lambda_sum() != Rational(1))
        return "sum of lambda_j is " + spec.lambda_sum().str() + ", expected 1";
    return {};
}

// ---------------------------------------------------------------------------
// Pole census
// ---------------------------------------------------------------------------

namespace {

// Is integer z a pole of Gamma(lambda z + mu)? Exact rational test.
bool factor_has_pole_at(const GammaFactor& f, int64_t z) {
    if (!f.mu.is_real()) return false;
    Rational v = f.lambda * Rational(z) + f.mu.re;
    return v.is_integer() && v <= Rational(0);
}

bool spec_has_pole_at(const GammaFactorSpec& spec, int64_t z) {
    for (const auto& f : spec.factors)
        if (factor_has_pole_at(f, z)) return true;
    return false;
}

} // namespace

PoleCensus pole_census(const GammaFactorSpec& spec, int64_t T) {
    if (T < 1) throw std::domain_error("pole_census: T must be >= 1");
    PoleCensus out;
    for (int64_t z = -T; z <= -1; ++z) {
        if (spec_has_pole_at(spec, z))
            ++out.pole_count;
        else
            out.missing.push_back(z);
    }

    // Cofinite decision by periodicity. The set of integer poles of a factor
    // is an arithmetic progression intersected with a half-line; below the
    // smallest threshold the union of progressions is exactly periodic with
    // period L = lcm of the local periods.
    int64_t L = 1;
    Rational threshold(0);
    bool have_real_factor = false;
    for (const auto& f : spec.factors) {
        if (!f.mu.is_real()) continue;
        have_real_factor = true;
        L = lcm64(L, f.lambda.den() * f.mu.re.den());
        Rational t = -(f.mu.re / f.lambda);
        if (t < threshold) threshold = t;
    }
    if (!have_real_factor) {
        out.cofinite = false;
        return out;
    }
    int64_t W = threshold.floor() - 1;
    if (W > -1) W = -1;
    out.cofinite = true;
    for (int64_t z = W - L + 1; z <= W; ++z) {
        if (!spec_has_pole_at(spec, z)) {
            out.cofinite = false;
            break;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Normalization
// ---------------------------------------------------------------------------

double NormalizedGamma::P(cplx s, cplx* out) const {
    cplx p(1.0, 0.0);
    for (int64_t r : roots) p *= s - static_cast<double>(r);
    if (out) *out = p;
    return std::abs(p);
}

NormalizedGamma normalize(const GammaFactorSpec& spec) {
    PoleCensus census = pole_census(spec, 4);
    if (!census.cofinite)
        throw std::domain_error(
            "hypothesis violated: gamma does not have poles at cofinitely many negative integers");

    int64_t q = 1;
    std::vector<int64_t> q_j(spec.factors.size());
    std::vector<int64_t> nu_j(spec.factors.size());
    for (size_t j = 0; j < spec.factors.size(); ++j) {
        const auto& f = spec.factors[j];
        if (!f.mu.is_real())
            throw std::domain_error("hypothesis violated: non-real mu in a contributing factor");
        if (f.lambda.num() != 1)
            throw std::domain_error("hypothesis violated: lambda_j is not the reciprocal of an integer");
        q_j[j] = f.lambda.den();
        Rational nu = f.mu.re * Rational(q_j[j]);
        if (!nu.is_integer() || nu < Rational(0))
            throw std::domain_error("hypothesis violated: mu_j q_j is not a non-negative integer");
        nu_j[j] = nu.num();
        q = lcm64(q, q_j[j]);
    }

    double logc = std::log(spec.constant());
    double logH = std::log(spec.q_effective());

    // Lift every factor to common denominator q by Gauss multiplication.
    std::vector<int64_t> nu_lifted;
    for (size_t j = 0; j < spec.factors.size(); ++j) {
        int64_t M = q / q_j[j];
        if (M > 1) {
            logc += 0.5 * (1.0 - M) * kLog2Pi;
            logc += (static_cast<double>(nu_j[j]) / q_j[j] - 0.5) * std::log(static_cast<double>(M));
            logH += std::log(static_cast<double>(M)) / static_cast<double>(q_j[j]);
        }
        for (int64_t i = 0; i < M; ++i) nu_lifted.push_back(nu_j[j] + i * q_j[j]);
    }

    // The residues mod q must form a complete system, each hit exactly once.
    if (static_cast<int64_t>(nu_lifted.size()) != q)
        throw std::domain_error("hypothesis violated: residue classes mod q not covered exactly once");
    std::set<int64_t> residues;
    for (int64_t nu : nu_lifted)
        if (!residues.insert(nu % q).second)
            throw std::domain_error("hypothesis violated: residue classes mod q not covered exactly once");

    // Reduce each nu' mod q through the recurrence, collecting the polynomial.
    NormalizedGamma out;
    for (int64_t nu : nu_lifted) {
        int64_t nu2 = nu % q;
        int64_t m = (nu - nu2) / q;
        for (int64_t i = 0; i < m; ++i) {
            out.roots.push_back(-(nu2 + i * q));
            logc -= std::log(static_cast<double>(q));
        }
    }
    std::sort(out.roots.begin(), out.roots.end());
    if (std::adjacent_find(out.roots.begin(), out.roots.end()) != out.roots.end())
        throw std::logic_error("normalize: repeated polynomial root");

    // Collapse prod_j Gamma((s+j)/q) back through Gauss multiplication, then
    // swap Gamma for Gamma_C.
    logc += 0.5 * (q - 1.0) * kLog2Pi + 0.5 * std::log(static_cast<double>(q));
    logH -= std::log(static_cast<double>(q));
    logc -= std::log(2.0);
    logH += kLog2Pi;

    out.c = std::exp(logc);
    out.H = std::exp(logH);

    // Mandatory numeric identity check at off-axis sample points.
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
    std::uniform_real_distribution<double> re_dist(-8.0, 8.0);
    std::uniform_real_distribution<double> im_dist(0.5, 6.0);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        cplx s(re_dist(rng), (i % 2 == 0 ? 1.0 : -1.0) * im_dist(rng));
        cplx lhs_log = spec.log_evaluate(s);
        cplx p;
        out.P(s, &p);
        cplx rhs_log = std::log(out.c) + std::log(p) + s * std::log(out.H) + special::log_gamma_c(s);
        double rel = std::abs(std::exp(lhs_log - rhs_log) - 1.0);
        worst = std::max(worst, rel);
    }
    out.max_rel_error = worst;
    if (worst > 1e-10)
        throw std::logic_error("normalize: numeric identity check failed (residual " +
                               std::to_string(worst) + ")");
    return out;
}

std::optional<WeightDetection> detect_weight(const GammaFactorSpec& spec) {
    // odd-parity branch: gamma itself of the form c P H^s Gamma_C(s)
    try {
        NormalizedGamma n = normalize(spec);
        if (n.roots.empty()) return WeightDetection{1, n.c, n.H};
        if (n.roots == std::vector<int64_t>{0})
            return WeightDetection{3, two_pi * n.c, n.H};
    } catch (const std::exception&) {
    }
    // even-parity branch: gamma(s + 1/2) of that form with P(s) = s
    try {
        NormalizedGamma n = normalize(spec.shifted(Rational(1, 2)));
        if (n.roots == std::vector<int64_t>{0})
            return WeightDetection{2, two_pi * n.c / std::sqrt(n.H), n.H};
    } catch (const std::exception&) {
    }
    return std::nullopt;
}

GammaFactorSpec gamma_c_weight_spec(int ell) {
    if (ell < 1 || ell > 3) throw std::domain_error("gamma_c_weight_spec: ell must be 1, 2 or 3");
    GammaFactorSpec spec;
    spec.Q = Rational(1);
    GammaFactor f;
    f.lambda = Rational(1);
    f.mu = {Rational(ell - 1, 2), Rational(0)};
    f.gamma_c = true;
    spec.factors.push_back(f);
    return spec;
}

GammaFactorSpec gamma_c_shift_spec(const Rational& shift, const Rational& H) {
    GammaFactorSpec spec;
    spec.Q = H;
    GammaFactor f;
    f.lambda = Rational(1);
    f.mu = {shift, Rational(0)};
    f.gamma_c = true;
    spec.factors.push_back(f);
    return spec;
}

} // namespace clab::gspec
