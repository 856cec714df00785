#include "clab/spectral.hpp"
#include "clab/contour.hpp"
#include "clab/parallel.hpp"
#include "clab/special.hpp"

#include <cmath>
#include <numeric>

namespace clab::spectral {

namespace {

// certified envelope: |J_{k-1}(y)| <= 1.2 (y/2)^{k-1}/(k-1)!  for y <= 2
double bessel_envelope_log(int k) {
    // log of 1.2 / (k-1)!
    return std::log(1.2) - std::lgamma(static_cast<double>(k));
}

double petersson_tail_bound(int k, int64_t N, int64_t m, int64_t n, int64_t q_max) {
    // sum_{q > Q, N | q} |S| / q |J| <= 1.2 sum (2 pi sqrt(mn)/q)^{k-1}/(k-1)!
    //                               <= 1.2 (2 pi sqrt(mn))^{k-1}/((k-1)! (k-2) Q^{k-2} N)
    double base = (k - 1) * std::log(two_pi * std::sqrt(static_cast<double>(m) *
                                                        static_cast<double>(n)));
    double lg = std::log(2.0 * pi) + base + bessel_envelope_log(k) -
                (k - 2) * std::log(static_cast<double>(q_max)) -
                std::log(static_cast<double>(k - 2)) - std::log(static_cast<double>(N));
    return std::exp(lg);
}

} // namespace

std::vector<PeterssonResult> petersson_geometric_grid(
    const PeterssonQuery& base, const std::vector<std::pair<int64_t, int64_t>>& mn) {
    if (base.k < 2) throw std::domain_error("petersson_geometric: k must be >= 2");
    if (base.N < 1 || base.q_max < base.N)
        throw std::domain_error("petersson_geometric: need q_max >= N >= 1");
    if (base.chi.modulus() != base.N)
        throw std::domain_error("petersson_geometric: character modulus must equal N");
    if ((base.k % 2 == 0) != (base.chi.parity() == 0))
        throw std::domain_error("petersson_geometric: k and chi(-1) have mismatched parity");

    const int k = base.k;
    std::vector<double> root_mn(mn.size());
    for (size_t i = 0; i < mn.size(); ++i) {
        if (mn[i].first < 1 || mn[i].second < 1)
            throw std::domain_error("petersson_geometric: m, n must be positive");
        root_mn[i] = std::sqrt(static_cast<double>(mn[i].first) *
                               static_cast<double>(mn[i].second));
    }

    // Kloosterman sums share the inverse-pair loop per q; chunks of q are
    // summed in fixed order, so the reduction is deterministic.
    int64_t count = base.q_max / base.N;
    std::vector<std::vector<cplx>> partial =
        parallel_chunked<std::vector<cplx>>(count, 64, [&](int64_t lo, int64_t hi) {
            std::vector<KahanSum> acc(mn.size());
            for (int64_t j = lo; j < hi; ++j) {
                int64_t q = (j + 1) * base.N;
                auto sums = numth::kloosterman_many(base.chi, mn, q);
                for (size_t i = 0; i < mn.size(); ++i) {
                    double y = 2.0 * two_pi * root_mn[i] / static_cast<double>(q);
                    acc[i].add(sums[i] / static_cast<double>(q) * special::bessel_j(k - 1, y));
                }
            }
            std::vector<cplx> out(mn.size());
            for (size_t i = 0; i < mn.size(); ++i) out[i] = acc[i].value();
            return out;
        });

    std::vector<PeterssonResult> results(mn.size());
    cplx prefactor = two_pi * i_pow(-k);
    for (size_t i = 0; i < mn.size(); ++i) {
        KahanSum total;
        for (const auto& chunk : partial) total.add(chunk[i]);
        results[i].value = (mn[i].first == mn[i].second ? 1.0 : 0.0) + prefactor * total.value();
        results[i].tail_bound =
            petersson_tail_bound(k, base.N, mn[i].first, mn[i].second, base.q_max);
    }
    return results;
}

PeterssonResult petersson_geometric(const PeterssonQuery& query, double tolerance) {
    auto res = petersson_geometric_grid(query, {{query.m, query.n}});
    if (tolerance >= 0.0 && res[0].tail_bound > tolerance)
        throw std::runtime_error("petersson_geometric: certified tail bound " +
                                 std::to_string(res[0].tail_bound) +
                                 " exceeds the requested tolerance");
    return res[0];
}

SpectralData fit_spectral_norm(int k, int64_t N, const numth::DirichletCharacter& chi,
                               int64_t q_max, int64_t grid) {
    SpectralData data;
    data.k = k;
    data.N = N;
    if (k == 12 && N == 1 && chi.is_trivial()) {
        data.form = forms::delta_form(64);
    } else if (k == 2 && N == 11 && chi.is_trivial()) {
        data.form = forms::level11_form(64);
    } else {
        throw std::domain_error(
            "fit_spectral_norm: not a known one-dimensional space (supported: weight 12 level 1, "
            "weight 2 level 11)");
    }

    PeterssonQuery base;
    base.k = k;
    base.N = N;
    base.chi = chi;
    base.q_max = q_max;
    std::vector<std::pair<int64_t, int64_t>> mn;
    for (int64_t m = 1; m <= grid; ++m)
        for (int64_t n = 1; n <= grid; ++n) mn.emplace_back(m, n);
    auto res = petersson_geometric_grid(base, mn);

    // the (1,1) instance pins the constant
    data.c0 = res[0].value.real();
    if (!(data.c0 > 0.0))
        throw std::runtime_error("fit_spectral_norm: fitted constant is not positive");
    double worst = 0.0;
    for (size_t i = 0; i < mn.size(); ++i) {
        double ref = data.c0 * data.form->analytic(mn[i].first).real() *
                     data.form->analytic(mn[i].second).real();
        worst = std::max(worst, std::abs(res[i].value.real() - ref) / std::abs(ref));
    }
    data.max_rel_residual = worst;
    data.grid_extent = grid;
    return data;
}

cplx kn_spectral(cplx s, int64_t n, const forms::Form& f, const SpectralData& data, int64_t M) {
    if (s.real() <= 1.25)
        throw std::domain_error("kn_spectral: requires Re(s) > 5/4");
    if (M > f.size())
        throw std::domain_error("kn_spectral: provider holds too few coefficients");
    data.form->ensure(M + 1);
    KahanSum acc;
    for (int64_t m = 1; m <= M; ++m) {
        cplx fm = f.analytic(m);
        double rho_m = data.form->analytic(m).real();
        acc.add(fm * rho_m * std::exp(-s * std::log(static_cast<double>(m))));
    }
    double rho_n = data.form->analytic(n).real();
    return special::zeta_n(2.0 * s, data.N) * data.c0 * rho_n * acc.value();
}

KnGeometricResult kn_geometric(cplx s, int64_t n, const forms::Form& f,
                               const gspec::GammaFactorSpec& gamma, double sigma1, int64_t M,
                               double fk_tol) {
    const int k = f.weight();
    const int64_t N = f.level();
    if (!(s.real() > 0.5 && (std::isnan(sigma1) || s.real() < -sigma1)))
        throw std::domain_error("kn_geometric: requires 1/2 < Re(s) < -sigma1");
    if (std::isnan(sigma1)) sigma1 = 0.5 * (0.5 * (1.0 - k) - s.real());
    if (M > f.size()) throw std::domain_error("kn_geometric: provider holds too few coefficients");

    contour::ContourSpec cspec;
    cspec.tol = fk_tol;

    KnGeometricResult out;
    cplx fn = f.analytic(n);
    out.delta_term = fn * std::exp(-s * std::log(static_cast<double>(n))) *
                     special::zeta_n(2.0 * s, N);

    double phi_ratio = 1.0;
    for (auto [p, e] : numth::factorize(N)) {
        (void)e;
        phi_ratio *= 1.0 - 1.0 / static_cast<double>(p);
    }
    cplx prefactor = i_pow(-k) * f.omega();
    out.diagonal_term = prefactor * fn * std::exp((s - 1.0) * std::log(static_cast<double>(n))) *
                        special::zeta(2.0 * s - 1.0) *
                        std::exp((1.0 - 2.0 * s) * std::log(static_cast<double>(N))) * phi_ratio *
                        contour::fk_integral(s, 1.0, k, gamma, cspec, sigma1);

    KahanSum sum;
    for (int64_t m = 1; m <= M; ++m) {
        if (m == n) continue;
        cplx sigma_val = numth::sigma_gen({n - m, N, 1.0 - 2.0 * s});
        if (std::abs(sigma_val) == 0.0) continue;
        double x = static_cast<double>(m) / static_cast<double>(n);
        cplx fk = contour::fk_integral(s, x, k, gamma, cspec, sigma1);
        sum.add(f.analytic(m) * sigma_val * std::exp((s - 1.0) * std::log(static_cast<double>(m))) *
                fk);
    }
    out.offdiag_term = prefactor * sum.value();
    out.value = out.delta_term + out.diagonal_term + out.offdiag_term;
    return out;
}

} // namespace clab::spectral
