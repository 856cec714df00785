#ifndef CLAB_NUMTH_HPP
#define CLAB_NUMTH_HPP

#include "clab/common.hpp"

#include <map>
#include <memory>
#include <vector>

namespace clab::numth {

// --- elementary helpers -----------------------------------------------------

std::vector<std::pair<int64_t, int>> factorize(int64_t n); // n >= 1
int64_t euler_phi(int64_t n);
int mu(int64_t n);          // Moebius function
int64_t radical(int64_t n); // product of distinct primes, radical(1) = 1
int64_t mod_inverse(int64_t a, int64_t m); // throws if gcd(a, m) != 1
int64_t power_mod(int64_t a, int64_t e, int64_t m);

// --- Dirichlet characters ----------------------------------------------------

// Multiplicative group structure mod N via CRT over prime powers; characters
// are labeled Conrey-style by a unit c mod N. Values are exact roots of unity
// stored as exponent indices modulo the group exponent.
class DirichletGroup;

class DirichletCharacter {
public:
    // Trivial character of the given modulus.
    static DirichletCharacter trivial(int64_t modulus);

    DirichletCharacter(int64_t modulus, int64_t conrey_label);

    int64_t modulus() const { return modulus_; }
    int64_t label() const { return label_; }
    int parity() const { return parity_; } // 0 or 1, chi(-1) = (-1)^parity
    bool is_trivial() const;

    // chi(a); zero off the units.
    cplx operator()(int64_t a) const;

    // Exact exponent of chi(a) as a fraction index/denominator of a full turn;
    // returns false for non-units.
    bool value_index(int64_t a, int64_t& index, int64_t& denom) const;

    // Lift to modulus q (requires modulus() | q): chi evaluated at a mod N
    // when gcd(a, q) = 1, zero otherwise.
    cplx lifted(int64_t a, int64_t q) const;

private:
    int64_t modulus_;
    int64_t label_;
    int parity_;
    int64_t exponent_;                 // group exponent D
    std::vector<int64_t> index_table_; // per residue: exponent index, -1 off units
};

class DirichletGroup {
public:
    explicit DirichletGroup(int64_t modulus);
    int64_t modulus() const { return modulus_; }
    int64_t exponent() const { return exponent_; }

    // Index of the unit a in the character pairing: exact pairing exponent of
    // (label, a) as a multiple of 1/exponent(). Returns false for non-units.
    bool pairing(int64_t label, int64_t a, int64_t& index) const;

    // All Conrey labels (units mod N, ascending; {1} for N <= 2).
    std::vector<int64_t> labels() const;

private:
    struct LocalFactor {
        int64_t pe;        // prime power p^e
        int64_t p;
        int e;
        int64_t phi;       // phi(p^e)
        // odd p / p^e in {2,4}: dlog w.r.t. a fixed primitive root
        // p = 2, e >= 3: decomposition a = (-1)^x 5^y
        std::vector<int64_t> dlog;   // index by residue mod pe; -1 for non-unit
        std::vector<int64_t> dlog2;  // second coordinate for 2^e, e >= 3
        bool two_adic = false;
    };
    int64_t modulus_;
    int64_t exponent_;
    std::vector<LocalFactor> locals_;
    friend class DirichletCharacter;
};

// --- the arithmetic sums ------------------------------------------------------

// Ramanujan sum r_q(n) = sum_{a mod q, (a,q)=1} e(na/q), computed by the
// Moebius formula sum_{d | gcd(q,|n|)} d mu(q/d); exact integer result.
int64_t ramanujan_sum(int64_t q, int64_t n);

// Same by direct enumeration of the exponential sum (test oracle).
cplx ramanujan_sum_direct(int64_t q, int64_t n);

// Twisted Kloosterman sum S_chi(m, n; q) over a mod q with a abar = 1 (q),
// chi lifted from its own modulus N; requires N | q.
cplx kloosterman(const DirichletCharacter& chi, int64_t m, int64_t n, int64_t q);

// Shared-loop variant: S_chi(m_i, n_i; q) for several (m, n) pairs at once.
std::vector<cplx> kloosterman_many(const DirichletCharacter& chi,
                                   const std::vector<std::pair<int64_t, int64_t>>& mn,
                                   int64_t q);

struct SigmaArg {
    int64_t r;  // evaluated at |r|; r = 0 rejected
    int64_t N;  // N >= 1
    cplx s;
};

// Generalized divisor sum sigma_s(|r|; N): Euler product over p | r, p !| N
// times the penalty factors at p | N; zero unless (N / rad N) | r.
cplx sigma_gen(const SigmaArg& arg);

struct RamanujanSeriesResult {
    cplx truncated;   // sum_{q <= Q_max, N | q} r_q(n) / q^{2s}
    cplx closed_form; // sigma_{1-2s}(n;N)/zeta^{(N)}(2s), or the n = 0 branch
};

// Dirichlet series of Ramanujan sums over q in N Z_{>0} against q^{-2s},
// for n >= 0 and Re(s) > 1, with its closed form.
RamanujanSeriesResult ramanujan_series(int64_t n, int64_t N, cplx s, int64_t q_max);

} // namespace clab::numth

#endif
