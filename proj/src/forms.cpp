#include "clab/forms.hpp"
#include "clab/rational.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <mutex>
#include <sstream>

namespace clab::forms {

std::vector<__int128> eta_power_series(const std::vector<std::pair<int64_t, int64_t>>& exponents,
                                       int64_t M) {
    int64_t weight24 = 0;
    for (auto [d, e] : exponents) {
        if (d < 1 || e < 1) throw std::domain_error("eta_power_series: d, e must be positive");
        weight24 += d * e;
    }
    if (weight24 % 24 != 0)
        throw std::domain_error("eta_power_series: sum d*e must be divisible by 24");
    int64_t offset = weight24 / 24;
    if (M < offset) M = offset;

    // series of prod (1 - q^{d n}) via generalized pentagonal numbers
    std::vector<__int128> acc(M + 1, 0);
    acc[0] = 1;
    std::vector<__int128> next(M + 1, 0);
    for (auto [d, e] : exponents) {
        // sparse factor: coefficient (-1)^j at q^{d g_j}, g_j = j(3j-1)/2
        std::vector<std::pair<int64_t, int>> sparse;
        for (int64_t j = 0;; ++j) {
            int64_t g1 = j * (3 * j - 1) / 2;
            int64_t g2 = j * (3 * j + 1) / 2;
            if (d * g1 > M && d * g2 > M) break;
            int sign = (j % 2 == 0) ? 1 : -1;
            if (d * g1 <= M) sparse.emplace_back(d * g1, sign);
            if (j > 0 && d * g2 <= M) sparse.emplace_back(d * g2, sign);
        }
        for (int64_t rep = 0; rep < e; ++rep) {
            std::fill(next.begin(), next.end(), 0);
            for (auto [pos, sign] : sparse) {
                if (sign > 0)
                    for (int64_t n = pos; n <= M; ++n) next[n] += acc[n - pos];
                else
                    for (int64_t n = pos; n <= M; ++n) next[n] -= acc[n - pos];
            }
            acc.swap(next);
        }
    }
    // shift by q^offset
    std::vector<__int128> out(M + 1, 0);
    for (int64_t n = offset; n <= M; ++n) out[n] = acc[n - offset];
    return out;
}

std::vector<double> eisenstein_coeffs(int k, int64_t M) {
    if (k < 4 || k % 2 != 0) throw std::domain_error("eisenstein_coeffs: k must be even, >= 4");
    Rational prefactor = -Rational(2 * k) / bernoulli(k);
    std::vector<double> out(M + 1, 0.0);
    out[0] = 1.0;
    // sigma_{k-1}(n) by divisor sieve; values can exceed int64 for large n,
    // so accumulate in binary64
    std::vector<double> sigma(M + 1, 0.0);
    for (int64_t d = 1; d <= M; ++d) {
        double dk = std::pow(static_cast<double>(d), k - 1);
        for (int64_t n = d; n <= M; n += d) sigma[n] += dk;
    }
    double c = prefactor.to_double();
    for (int64_t n = 1; n <= M; ++n) out[n] = c * sigma[n];
    return out;
}

int64_t Form::exact_coefficient(int64_t) const {
    throw std::logic_error("Form: provider has no exact integer coefficients");
}

namespace {

class EtaQuotientForm final : public Form {
public:
    EtaQuotientForm(std::vector<std::pair<int64_t, int64_t>> exponents, int weight, int64_t level,
                    cplx omega, int64_t M)
        : Form(weight, level, numth::DirichletCharacter::trivial(level), omega),
          exponents_(std::move(exponents)) {
        regenerate(M);
    }

    cplx coefficient(int64_t n) const override {
        if (n < 1 || n >= static_cast<int64_t>(coeffs_.size()))
            throw std::out_of_range("EtaQuotientForm: coefficient index outside cache");
        return {static_cast<double>(coeffs_[n]), 0.0};
    }

    int64_t exact_coefficient(int64_t n) const override {
        if (n < 1 || n >= static_cast<int64_t>(coeffs_.size()))
            throw std::out_of_range("EtaQuotientForm: coefficient index outside cache");
        __int128 v = coeffs_[n];
        if (v > INT64_MAX || v < INT64_MIN)
            throw std::overflow_error("EtaQuotientForm: coefficient exceeds int64");
        return static_cast<int64_t>(v);
    }

    void ensure(int64_t M) override {
        std::lock_guard<std::mutex> lock(mutex_);
        if (M >= static_cast<int64_t>(coeffs_.size())) regenerate(M);
    }

    int64_t size() const override { return static_cast<int64_t>(coeffs_.size()) - 1; }

private:
    void regenerate(int64_t M) { coeffs_ = eta_power_series(exponents_, M); }

    std::vector<std::pair<int64_t, int64_t>> exponents_;
    std::vector<__int128> coeffs_;
    std::mutex mutex_;
};

class TableForm final : public Form {
public:
    TableForm(int weight, int64_t level, numth::DirichletCharacter chi, cplx omega,
              std::vector<cplx> arithmetic, double constant_term)
        : Form(weight, level, std::move(chi), omega),
          table_(std::move(arithmetic)),
          a0_(constant_term) {}

    cplx coefficient(int64_t n) const override {
        if (n < 1 || n >= static_cast<int64_t>(table_.size()))
            throw std::out_of_range("TableForm: coefficient index outside table");
        return table_[n];
    }

    cplx a0() const override { return {a0_, 0.0}; }

    void ensure(int64_t M) override {
        if (M >= static_cast<int64_t>(table_.size()))
            throw std::out_of_range("TableForm: fixed table cannot grow");
    }

    int64_t size() const override { return static_cast<int64_t>(table_.size()) - 1; }

private:
    std::vector<cplx> table_;
    double a0_;
};

} // namespace

FormPtr delta_form(int64_t M) {
    return std::make_shared<EtaQuotientForm>(std::vector<std::pair<int64_t, int64_t>>{{1, 24}},
                                             12, 1, cplx(1.0, 0.0), M);
}

FormPtr level11_form(int64_t M) {
    return std::make_shared<EtaQuotientForm>(
        std::vector<std::pair<int64_t, int64_t>>{{1, 2}, {11, 2}}, 2, 11, cplx(-1.0, 0.0), M);
}

FormPtr eisenstein_form(int k, int64_t M) {
    auto coeffs = eisenstein_coeffs(k, M);
    std::vector<cplx> table(coeffs.size());
    for (size_t i = 0; i < coeffs.size(); ++i) table[i] = coeffs[i];
    return std::make_shared<TableForm>(k, 1, numth::DirichletCharacter::trivial(1),
                                       i_pow(k), std::move(table), 1.0);
}

FormPtr eta_quotient_form(const std::vector<std::pair<int64_t, int64_t>>& exponents, int weight,
                          int64_t level, cplx omega, int64_t M) {
    return std::make_shared<EtaQuotientForm>(exponents, weight, level, omega, M);
}

// ---------------------------------------------------------------------------
// Coefficient files
// ---------------------------------------------------------------------------

namespace {

[[noreturn]] void file_error(const std::string& path, int line, const std::string& msg) {
    throw std::runtime_error(path + ":" + std::to_string(line) + ": " + msg);
}

} // namespace

FormPtr load_coefficients(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_coefficients: cannot open " + path);

    int weight = 0;
    int64_t level = 0;
    int64_t chi_mod = -1, chi_label = 1;
    cplx omega(0.0, 0.0);
    bool have_weight = false, have_level = false, have_omega = false, have_norm = false;
    Normalization norm = Normalization::arithmetic;
    std::vector<cplx> table(1, cplx(0.0, 0.0));
    int64_t expect_n = 1;

    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw.substr(0, raw.find('#'));
        size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        size_t b = line.find_last_not_of(" \t\r");
        line = line.substr(a, b - a + 1);

        size_t colon = line.find(':');
        if (colon != std::string::npos &&
            line.find_first_of("0123456789-") > 0) { // header line
            std::string key = line.substr(0, colon);
            std::string val = line.substr(colon + 1);
            std::istringstream vs(val);
            if (key == "weight") {
                if (!(vs >> weight)) file_error(path, lineno, "bad weight");
                have_weight = true;
            } else if (key == "level") {
                if (!(vs >> level)) file_error(path, lineno, "bad level");
                have_level = true;
            } else if (key == "character") {
                std::string tok;
                vs >> tok;
                size_t dot = tok.find('.');
                if (dot == std::string::npos) file_error(path, lineno, "character must be N.label");
                chi_mod = std::stoll(tok.substr(0, dot));
                chi_label = std::stoll(tok.substr(dot + 1));
            } else if (key == "omega") {
                double re, im;
                if (!(vs >> re >> im)) file_error(path, lineno, "omega needs re im");
                omega = {re, im};
                have_omega = true;
            } else if (key == "normalization") {
                std::string tok;
                vs >> tok;
                if (tok == "arithmetic")
                    norm = Normalization::arithmetic;
                else if (tok == "analytic")
                    norm = Normalization::analytic;
                else
                    file_error(path, lineno, "normalization must be arithmetic|analytic");
                have_norm = true;
            } else {
                file_error(path, lineno, "unknown header key '" + key + "'");
            }
            continue;
        }

        std::istringstream ds(line);
        int64_t n;
        double re, im = 0.0;
        if (!(ds >> n >> re)) file_error(path, lineno, "malformed data line");
        ds >> im;
        if (n != expect_n)
            file_error(path, lineno,
                       "expected n = " + std::to_string(expect_n) + ", got " + std::to_string(n));
        table.emplace_back(re, im);
        ++expect_n;
    }
    if (!have_weight || !have_level || !have_omega || !have_norm || chi_mod < 0)
        throw std::runtime_error(path + ": incomplete header");
    if (chi_mod != level)
        throw std::runtime_error(path + ": character modulus does not equal the declared level");
    if (table.size() <= 1) throw std::runtime_error(path + ": no coefficient data");

    if (norm == Normalization::analytic) {
        for (size_t n = 1; n < table.size(); ++n)
            table[n] *= std::pow(static_cast<double>(n), 0.5 * (weight - 1));
    }
    numth::DirichletCharacter chi(chi_mod, chi_label);
    return std::make_shared<TableForm>(weight, level, std::move(chi), omega, std::move(table),
                                       0.0);
}

void save_coefficients(const Form& form, const std::string& path, int64_t count,
                       Normalization norm) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("save_coefficients: cannot open " + path);
    out << "weight: " << form.weight() << "\n";
    out << "level: " << form.level() << "\n";
    out << "character: " << form.character().modulus() << "." << form.character().label() << "\n";
    out.precision(17);
    out << "omega: " << form.omega().real() << " " << form.omega().imag() << "\n";
    out << "normalization: "
        << (norm == Normalization::arithmetic ? "arithmetic" : "analytic") << "\n";
    for (int64_t n = 1; n <= count; ++n) {
        cplx v = norm == Normalization::arithmetic ? form.coefficient(n) : form.analytic(n);
        out << n << " " << v.real();
        if (v.imag() != 0.0) out << " " << v.imag();
        out << "\n";
    }
}

// ---------------------------------------------------------------------------

cplx eval_form(const Form& form, cplx z, double tol) {
    if (z.imag() <= 0.0) throw std::domain_error("eval_form: z must be in the upper half-plane");
    double y = z.imag();
    double r = std::exp(-two_pi * y);
    int64_t M = form.size();

    // coarse coefficient envelope |a_n| <= C n^{k/2+1} fitted over the cache
    double p = 0.5 * form.weight() + 1.0;
    double C = 1.0;
    for (int64_t n = 1; n <= std::min<int64_t>(M, 400); ++n)
        C = std::max(C, std::abs(form.coefficient(n)) / std::pow(static_cast<double>(n), p));
    C *= 1.25;

    // find a truncation point where the geometric tail bound reaches tol
    auto tail_bound = [&](int64_t N) {
        // ratio of successive envelope terms for n > N
        double ratio = r * std::pow(1.0 + 1.0 / static_cast<double>(N), p);
        if (ratio >= 1.0) return std::numeric_limits<double>::infinity();
        double first = C * std::pow(static_cast<double>(N + 1), p) * std::pow(r, N + 1);
        return first / (1.0 - ratio);
    };
    int64_t N = std::max<int64_t>(8, static_cast<int64_t>(2.0 * p / (two_pi * y)));
    while (N <= M && tail_bound(N) > tol) N += std::max<int64_t>(8, N / 4);
    if (N > M)
        throw std::runtime_error("eval_form: insufficient coefficients for the requested tolerance");

    KahanSum acc;
    for (int64_t n = N; n >= 1; --n)
        acc.add(form.coefficient(n) * std::exp(two_pi * cplx(0.0, 1.0) * (static_cast<double>(n) * z)));
    return acc.value() + form.a0();
}

} // namespace clab::forms
