#ifndef CLAB_COMMON_HPP
#define CLAB_COMMON_HPP

#include <complex>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace clab {

using cplx = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846264338327950288;
inline constexpr double two_pi = 2.0 * pi;

// e(x) = exp(2*pi*i*x)
inline cplx e_of(double x) { return std::polar(1.0, two_pi * x); }

// e(k/q) with the phase reduced exactly mod q before any floating point.
inline cplx e_frac(int64_t k, int64_t q) {
    int64_t r = k % q;
    if (r < 0) r += q;
    return std::polar(1.0, two_pi * static_cast<double>(r) / static_cast<double>(q));
}

inline bool is_finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

inline void require_finite(cplx z, const char* what) {
    if (!is_finite(z)) throw std::runtime_error(std::string(what) + ": non-finite value");
}

// i^n for integer n (exact).
inline cplx i_pow(int64_t n) {
    int64_t r = n % 4;
    if (r < 0) r += 4;
    switch (r) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

// Compensated (Kahan) accumulator for long sums.
struct KahanSum {
    cplx sum{0.0, 0.0};
    cplx carry{0.0, 0.0};
    void add(cplx x) {
        cplx y = x - carry;
        cplx t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    cplx value() const { return sum; }
};

} // namespace clab

#endif
