#include "clab/numth.hpp"
#include "clab/special.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace clab::numth {

std::vector<std::pair<int64_t, int>> factorize(int64_t n) {
    if (n < 1) throw std::domain_error("factorize: n must be >= 1");
    std::vector<std::pair<int64_t, int>> out;
    for (int64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) { n /= p; ++e; }
            out.emplace_back(p, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

int64_t euler_phi(int64_t n) {
    int64_t phi = 1;
    for (auto [p, e] : factorize(n)) {
        int64_t pe = 1;
        for (int i = 1; i < e; ++i) pe *= p;
        phi *= pe * (p - 1);
    }
    return phi;
}

int mu(int64_t n) {
    int m = 1;
    for (auto [p, e] : factorize(n)) {
        (void)p;
        if (e > 1) return 0;
        m = -m;
    }
    return m;
}

int64_t radical(int64_t n) {
    int64_t r = 1;
    for (auto [p, e] : factorize(n)) {
        (void)e;
        r *= p;
    }
    return r;
}

int64_t power_mod(int64_t a, int64_t e, int64_t m) {
    if (m == 1) return 0;
    __int128 r = 1, b = ((a % m) + m) % m;
    while (e > 0) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return static_cast<int64_t>(r);
}

int64_t mod_inverse(int64_t a, int64_t m) {
    if (m == 1) return 0;
    int64_t old_r = ((a % m) + m) % m, r = m;
    int64_t old_s = 1, s = 0;
    while (r != 0) {
        int64_t q = old_r / r;
        int64_t t = old_r - q * r; old_r = r; r = t;
        t = old_s - q * s; old_s = s; s = t;
    }
    if (old_r != 1) throw std::domain_error("mod_inverse: arguments not coprime");
    return ((old_s % m) + m) % m;
}

// ---------------------------------------------------------------------------
// Dirichlet characters
// ---------------------------------------------------------------------------

namespace {

int64_t primitive_root_mod_pe(int64_t p, int e, int64_t pe) {
    // smallest g that is a primitive root mod p and mod p^2; such g works for
    // every p^e (odd p)
    int64_t phi_p = p - 1;
    auto fac = factorize(phi_p);
    for (int64_t g = 2; g < p; ++g) {
        bool prim = true;
        for (auto [q, ee] : fac) {
            (void)ee;
            if (power_mod(g, phi_p / q, p) == 1) { prim = false; break; }
        }
        if (!prim) continue;
        if (e == 1) return g;
        // need g^{p-1} != 1 mod p^2; otherwise g + p qualifies
        int64_t p2 = p * p;
        int64_t gg = g;
        if (power_mod(gg, phi_p, p2) == 1) gg += p;
        (void)pe;
        return gg;
    }
    throw std::logic_error("primitive_root_mod_pe: none found");
}

} // namespace

DirichletGroup::DirichletGroup(int64_t modulus) : modulus_(modulus) {
    if (modulus < 1) throw std::domain_error("DirichletGroup: modulus must be >= 1");
    exponent_ = 1;
    for (auto [p, e] : factorize(modulus)) {
        LocalFactor lf;
        lf.p = p;
        lf.e = e;
        lf.pe = 1;
        for (int i = 0; i < e; ++i) lf.pe *= p;
        lf.phi = lf.pe / p * (p - 1);
        lf.dlog.assign(lf.pe, -1);
        if (p == 2) {
            if (e == 1) {
                lf.dlog[1] = 0;
                // exponent contribution 1
            } else if (e == 2) {
                lf.dlog[1] = 0;
                lf.dlog[3] = 1;
                exponent_ = std::lcm(exponent_, int64_t{2});
            } else {
                lf.two_adic = true;
                lf.dlog2.assign(lf.pe, -1);
                int64_t half = lf.pe / 4; // order of 5 mod 2^e
                int64_t v = 1;
                for (int64_t y = 0; y < half; ++y) {
                    lf.dlog[v] = 0;
                    lf.dlog2[v] = y;
                    int64_t w = lf.pe - v; // -v
                    lf.dlog[w] = 1;
                    lf.dlog2[w] = y;
                    v = v * 5 % lf.pe;
                }
                exponent_ = std::lcm(exponent_, int64_t{2});
                exponent_ = std::lcm(exponent_, half);
            }
        } else {
            int64_t g = primitive_root_mod_pe(p, e, lf.pe);
            int64_t v = 1;
            for (int64_t x = 0; x < lf.phi; ++x) {
                lf.dlog[v] = x;
                v = static_cast<int64_t>((__int128)v * g % lf.pe);
            }
            exponent_ = std::lcm(exponent_, lf.phi);
        }
        locals_.push_back(std::move(lf));
    }
}

bool DirichletGroup::pairing(int64_t label, int64_t a, int64_t& index) const {
    // index of chi_label(a) as a multiple of 1/exponent_
    __int128 acc = 0;
    for (const auto& lf : locals_) {
        int64_t c = ((label % lf.pe) + lf.pe) % lf.pe;
        int64_t x = ((a % lf.pe) + lf.pe) % lf.pe;
        if (lf.dlog[c] < 0 || lf.dlog[x] < 0) return false;
        if (lf.p == 2) {
            if (lf.e == 1) continue;
            if (lf.e == 2) {
                // chi(c, a) = (-1)^{dlog(c) dlog(a)}
                acc += (__int128)(exponent_ / 2) * (lf.dlog[c] * lf.dlog[x] % 2);
            } else {
                int64_t half = lf.pe / 4;
                acc += (__int128)(exponent_ / 2) * ((lf.dlog[c] * lf.dlog[x]) % 2);
                acc += (__int128)(exponent_ / half) * ((__int128)lf.dlog2[c] * lf.dlog2[x] % half);
            }
        } else {
            acc += (__int128)(exponent_ / lf.phi) * ((__int128)lf.dlog[c] * lf.dlog[x] % lf.phi);
        }
    }
    index = static_cast<int64_t>(acc % exponent_);
    return true;
}

std::vector<int64_t> DirichletGroup::labels() const {
    std::vector<int64_t> out;
    if (modulus_ == 1) return {1};
    for (int64_t c = 1; c < std::max<int64_t>(modulus_, 2); ++c)
        if (std::gcd(c, modulus_) == 1) out.push_back(c);
    return out;
}

DirichletCharacter::DirichletCharacter(int64_t modulus, int64_t conrey_label)
    : modulus_(modulus), label_(conrey_label) {
    if (modulus < 1) throw std::domain_error("DirichletCharacter: modulus must be >= 1");
    if (modulus == 1) {
        label_ = 1;
        parity_ = 0;
        exponent_ = 1;
        index_table_.assign(1, 0);
        return;
    }
    if (std::gcd(((conrey_label % modulus) + modulus) % modulus, modulus) != 1)
        throw std::domain_error("DirichletCharacter: label not coprime to modulus");
    DirichletGroup group(modulus);
    exponent_ = group.exponent();
    index_table_.assign(modulus, -1);
    for (int64_t a = 0; a < modulus; ++a) {
        int64_t idx;
        if (group.pairing(label_, a, idx)) index_table_[a] = idx;
    }
    // parity from chi(-1)
    int64_t idx_m1 = index_table_[(modulus - 1) % modulus];
    parity_ = (idx_m1 == 0) ? 0 : 1; // chi(-1) is +-1, so index is 0 or D/2
}

DirichletCharacter DirichletCharacter::trivial(int64_t modulus) {
    return DirichletCharacter(modulus, 1);
}

bool DirichletCharacter::is_trivial() const {
    for (int64_t idx : index_table_)
        if (idx > 0) return false;
    return true;
}

cplx DirichletCharacter::operator()(int64_t a) const {
    int64_t r = ((a % modulus_) + modulus_) % modulus_;
    if (modulus_ == 1) return {1.0, 0.0};
    int64_t idx = index_table_[r];
    if (idx < 0) return {0.0, 0.0};
    return e_frac(idx, exponent_);
}

bool DirichletCharacter::value_index(int64_t a, int64_t& index, int64_t& denom) const {
    int64_t r = ((a % modulus_) + modulus_) % modulus_;
    denom = exponent_;
    if (modulus_ == 1) { index = 0; return true; }
    if (index_table_[r] < 0) return false;
    index = index_table_[r];
    return true;
}

cplx DirichletCharacter::lifted(int64_t a, int64_t q) const {
    if (q % modulus_ != 0)
        throw std::domain_error("DirichletCharacter::lifted: modulus must divide q");
    int64_t r = ((a % q) + q) % q;
    if (std::gcd(r, q) != 1) return {0.0, 0.0};
    return (*this)(r);
}

// ---------------------------------------------------------------------------
// Arithmetic sums
// ---------------------------------------------------------------------------

int64_t ramanujan_sum(int64_t q, int64_t n) {
    if (q < 1) throw std::domain_error("ramanujan_sum: q must be >= 1");
    int64_t an = n < 0 ? -n : n;
    int64_t g = (an == 0) ? q : std::gcd(q, an);
    // sum over d | g of d * mu(q/d)
    int64_t total = 0;
    for (int64_t d = 1; d * d <= g; ++d) {
        if (g % d != 0) continue;
        int64_t d2 = g / d;
        total += d * mu(q / d);
        if (d2 != d) total += d2 * mu(q / d2);
    }
    return total;
}

cplx ramanujan_sum_direct(int64_t q, int64_t n) {
    KahanSum acc;
    for (int64_t a = 0; a < q; ++a) {
        if (std::gcd(a, q) != 1) continue;
        acc.add(e_frac((n % q) * a, q));
    }
    return acc.value();
}

cplx kloosterman(const DirichletCharacter& chi, int64_t m, int64_t n, int64_t q) {
    auto v = kloosterman_many(chi, {{m, n}}, q);
    return v[0];
}

namespace {

// one extended-gcd pass giving gcd and (when it is 1) the inverse
inline int64_t gcd_with_inverse(int64_t a, int64_t m, int64_t& inv) {
    int64_t old_r = a, r = m, old_s = 1, s = 0;
    while (r != 0) {
        int64_t quot = old_r / r;
        int64_t t = old_r - quot * r; old_r = r; r = t;
        t = old_s - quot * s; old_s = s; s = t;
    }
    inv = old_s < 0 ? old_s + m : old_s;
    return old_r;
}

} // namespace

std::vector<cplx> kloosterman_many(const DirichletCharacter& chi,
                                   const std::vector<std::pair<int64_t, int64_t>>& mn,
                                   int64_t q) {
    if (q < 1) throw std::domain_error("kloosterman: q must be >= 1");
    if (q % chi.modulus() != 0)
        throw std::domain_error("kloosterman: character modulus must divide q");
    if (q == 1) return std::vector<cplx>(mn.size(), cplx(1.0, 0.0));

    // phase table e(r/q); exact anchors every 512 entries, recurrence inside
    thread_local std::vector<double> ctab, stab;
    if (static_cast<int64_t>(ctab.size()) < q) {
        ctab.resize(q);
        stab.resize(q);
    }
    const double step_ang = two_pi / static_cast<double>(q);
    const double wc = std::cos(step_ang), ws = std::sin(step_ang);
    for (int64_t r0 = 0; r0 < q; r0 += 512) {
        double ang = step_ang * static_cast<double>(r0);
        double c = std::cos(ang), s = std::sin(ang);
        int64_t hi = std::min<int64_t>(q, r0 + 512);
        for (int64_t r = r0; r < hi; ++r) {
            ctab[r] = c;
            stab[r] = s;
            double nc = c * wc - s * ws;
            s = c * ws + s * wc;
            c = nc;
        }
    }

    const size_t pairs = mn.size();
    std::vector<int64_t> mr(pairs), nr(pairs);
    for (size_t i = 0; i < pairs; ++i) {
        mr[i] = ((mn[i].first % q) + q) % q;
        nr[i] = ((mn[i].second % q) + q) % q;
    }
    std::vector<KahanSum> acc(pairs);
    const bool trivial = chi.is_trivial();
    for (int64_t a = 1; a < q; ++a) {
        int64_t abar;
        if (gcd_with_inverse(a, q, abar) != 1) continue;
        if (trivial) {
            for (size_t i = 0; i < pairs; ++i) {
                int64_t r = (mr[i] * a + nr[i] * abar) % q;
                acc[i].add(cplx(ctab[r], stab[r]));
            }
        } else {
            cplx chival = chi(a);
            for (size_t i = 0; i < pairs; ++i) {
                int64_t r = (mr[i] * a + nr[i] * abar) % q;
                acc[i].add(chival * cplx(ctab[r], stab[r]));
            }
        }
    }
    std::vector<cplx> out(pairs);
    for (size_t i = 0; i < pairs; ++i) out[i] = acc[i].value();
    return out;
}

cplx sigma_gen(const SigmaArg& arg) {
    if (arg.r == 0) throw std::domain_error("sigma_gen: r must be nonzero");
    if (arg.N < 1) throw std::domain_error("sigma_gen: N must be >= 1");
    int64_t n = arg.r < 0 ? -arg.r : arg.r;
    int64_t cofree = arg.N / radical(arg.N);
    if (n % cofree != 0) return {0.0, 0.0};

    auto nf = factorize(n);
    auto Nf = factorize(arg.N);
    const cplx s = arg.s;
    auto pw = [](int64_t p, cplx e) { return std::exp(e * std::log(static_cast<double>(p))); };

    cplx result(1.0, 0.0);
    for (auto [p, a] : nf) {
        bool divides_N = false;
        for (auto [pN, eN] : Nf)
            if (pN == p) { divides_N = true; (void)eN; }
        if (divides_N) continue;
        result *= (pw(p, s * static_cast<double>(a + 1)) - 1.0) / (pw(p, s) - 1.0);
    }
    for (auto [p, eN] : Nf) {
        int64_t a = 0;
        for (auto [pn, en] : nf)
            if (pn == p) a = en;
        cplx num = (1.0 - pw(p, s - 1.0)) * pw(p, s * static_cast<double>(a + 1)) -
                   (1.0 - 1.0 / static_cast<double>(p)) * pw(p, s * static_cast<double>(eN));
        result *= num / (pw(p, s) - 1.0);
    }
    return result;
}

RamanujanSeriesResult ramanujan_series(int64_t n, int64_t N, cplx s, int64_t q_max) {
    if (s.real() <= 1.0) throw std::domain_error("ramanujan_series: requires Re(s) > 1");
    if (n < 0) throw std::domain_error("ramanujan_series: n must be >= 0");
    if (N < 1) throw std::domain_error("ramanujan_series: N must be >= 1");

    RamanujanSeriesResult out;
    KahanSum acc;
    for (int64_t q = N; q <= q_max; q += N) {
        int64_t rq = ramanujan_sum(q, n);
        if (rq == 0) continue;
        acc.add(static_cast<double>(rq) * std::exp(-2.0 * s * std::log(static_cast<double>(q))));
    }
    out.truncated = acc.value();

    if (n != 0) {
        out.closed_form = sigma_gen({n, N, 1.0 - 2.0 * s}) / special::zeta_n(2.0 * s, N);
    } else {
        double phi_ratio = 1.0;
        for (auto [p, e] : factorize(N)) {
            (void)e;
            phi_ratio *= 1.0 - 1.0 / static_cast<double>(p);
        }
        out.closed_form = std::exp((1.0 - 2.0 * s) * std::log(static_cast<double>(N))) * phi_ratio *
                          special::zeta(2.0 * s - 1.0) / special::zeta_n(2.0 * s, N);
    }
    return out;
}

} // namespace clab::numth
