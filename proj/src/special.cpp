#include "clab/special.hpp"
#include "clab/rational.hpp"

#include <array>
#include <cmath>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace clab {

Rational bernoulli(int m) {
    if (m < 0) throw std::domain_error("bernoulli: negative index");
    if (m > 38) throw std::overflow_error("bernoulli: index too large for exact int64 arithmetic");
    static std::vector<Rational> cache = [] {
        // recurrence sum_{j=0}^{n} C(n+1, j) B_j = 0; running sums outgrow
        // int64 long before the reduced results do, so go through cpp_int
        using Big = boost::multiprecision::cpp_int;
        std::vector<Big> num(39), den(39);
        num[0] = 1;
        den[0] = 1;
        for (int n = 1; n <= 38; ++n) {
            Big acc_n = 0, acc_d = 1;
            Big binom = 1;
            for (int j = 0; j < n; ++j) {
                acc_n = acc_n * den[j] + binom * num[j] * acc_d;
                acc_d *= den[j];
                Big g = boost::multiprecision::gcd(acc_n, acc_d);
                if (g > 1) { acc_n /= g; acc_d /= g; }
                binom = binom * (n + 1 - j) / (j + 1);
            }
            num[n] = -acc_n;
            den[n] = acc_d * binom;
            Big g = boost::multiprecision::gcd(num[n], den[n]);
            if (g > 1) { num[n] /= g; den[n] /= g; }
            if (den[n] < 0) { num[n] = -num[n]; den[n] = -den[n]; }
        }
        std::vector<Rational> out(39);
        for (int n = 0; n <= 38; ++n)
            out[n] = Rational(static_cast<int64_t>(num[n]), static_cast<int64_t>(den[n]));
        return out;
    }();
    return cache[m];
}

} // namespace clab

namespace clab::special {

namespace {

// Lanczos approximation, g = 607/128 (15 coefficients).
constexpr double kLanczosG = 4.7421875;
constexpr std::array<double, 15> kLanczos = {
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

const double kLog2Pi = std::log(two_pi);
const double kHalfLogTwoPi = 0.5 * std::log(two_pi);

bool near_nonpositive_integer(cplx s, double tol = 1e-13) {
    if (std::abs(s.imag()) > tol) return false;
    double r = std::round(s.real());
    return r <= 0.0 && std::abs(s.real() - r) <= tol;
}

cplx lanczos_sum(cplx z) {
    // z with Re(z) >= 0.5; series in 1/(z-1+k).
    cplx a(kLanczos[0], 0.0);
    for (int k = 1; k < 15; ++k) a += kLanczos[k] / (z - 1.0 + static_cast<double>(k));
    return a;
}

cplx lanczos_log_gamma_right(cplx z) {
    cplx base = z + (kLanczosG - 0.5);
    return (z - 0.5) * std::log(base) - base + kHalfLogTwoPi + std::log(lanczos_sum(z));
}

// Stirling series for Re(z) > 0 and |z| large.
cplx stirling_log_gamma(cplx z) {
    cplx lg = (z - 0.5) * std::log(z) - z + kHalfLogTwoPi;
    cplx zinv2 = 1.0 / (z * z);
    cplx zp = 1.0 / z;
    static const double coef[] = {
        1.0 / 12.0,      -1.0 / 360.0,     1.0 / 1260.0,   -1.0 / 1680.0,
        1.0 / 1188.0,    -691.0 / 360360.0, 1.0 / 156.0,   -3617.0 / 122400.0,
    };
    for (double c : coef) {
        lg += c * zp;
        zp *= zinv2;
    }
    return lg;
}

// log sin(pi z), stable for large |Im z|; branch only meaningful mod 2 pi i.
cplx log_sin_pi(cplx z) {
    const cplx ipi(0.0, pi);
    if (z.imag() >= 0.0) {
        cplx w = std::exp(2.0 * ipi * z); // |w| <= 1
        return cplx(0.0, pi / 2.0) - std::log(2.0) - ipi * z + std::log(1.0 - w);
    }
    cplx w = std::exp(-2.0 * ipi * z);
    return cplx(0.0, -pi / 2.0) - std::log(2.0) + ipi * z + std::log(1.0 - w);
}

} // namespace

cplx gamma(cplx s) {
    if (near_nonpositive_integer(s))
        throw std::domain_error("gamma: pole at non-positive integer");
    if (s.real() < 0.5) {
        // reflection
        return pi / (std::sin(pi * s) * gamma(1.0 - s));
    }
    if (std::abs(s) > 30.0) return std::exp(stirling_log_gamma(s));
    cplx base = s + (kLanczosG - 0.5);
    return std::sqrt(two_pi) * std::pow(base, s - 0.5) * std::exp(-base) * lanczos_sum(s);
}

cplx log_gamma(cplx s) {
    if (near_nonpositive_integer(s))
        throw std::domain_error("log_gamma: pole at non-positive integer");
    if (s.real() >= 0.5) {
        if (std::abs(s) > 25.0) return stirling_log_gamma(s);
        return lanczos_log_gamma_right(s);
    }
    return std::log(pi) - log_sin_pi(s) - log_gamma(1.0 - s);
}

cplx recip_gamma(cplx s) {
    if (near_nonpositive_integer(s)) return {0.0, 0.0};
    if (s.real() < 0.5) return std::sin(pi * s) * gamma(1.0 - s) / pi;
    return std::exp(-log_gamma(s));
}

cplx gamma_c(cplx s) { return 2.0 * std::exp(-s * kLog2Pi) * gamma(s); }

cplx log_gamma_c(cplx s) { return std::log(2.0) - s * kLog2Pi + log_gamma(s); }

// ---------------------------------------------------------------------------
// J-Bessel, integer order
// ---------------------------------------------------------------------------

namespace {

double bessel_series(int nu, double y) {
    // Leading term via logs to survive large nu.
    double h = 0.5 * y;
    double t = std::exp(nu * std::log(h) - std::lgamma(nu + 1.0));
    double sum = t;
    double h2 = h * h;
    for (int j = 1; j <= 200; ++j) {
        t *= -h2 / (j * (nu + j));
        sum += t;
        if (std::abs(t) < 1e-18 * (std::abs(sum) + 1e-300)) break;
    }
    return sum;
}

double bessel_miller(int nu, double y) {
    int start = nu + static_cast<int>(std::ceil(y)) + 18 +
                12 * static_cast<int>(std::ceil(std::cbrt(y + 1.0)));
    if (start % 2) ++start;
    double above = 0.0;    // J_{m+1} (unnormalized)
    double cur = 1e-300;   // J_m, starting at m = start
    double sum = 0.0;      // J_0 + 2 sum_{m even >= 2} J_m  (equals 1 after scaling)
    double target = (start == nu) ? cur : 0.0;
    if (start >= 2) sum += 2.0 * cur; // start is even
    for (int m = start; m >= 1; --m) {
        double below = (2.0 * m / y) * cur - above; // J_{m-1}
        above = cur;
        cur = below;
        int ord = m - 1;
        if (ord == nu) target = cur;
        if (ord >= 2 && ord % 2 == 0) sum += 2.0 * cur;
        if (ord == 0) sum += cur;
        if (std::abs(cur) > 1e250) {
            cur *= 1e-250;
            above *= 1e-250;
            sum *= 1e-250;
            target *= 1e-250;
        }
    }
    return target / sum;
}

double bessel_hankel(int nu, double y) {
    double mu = 4.0 * nu * nu;
    double p = 1.0, q = 0.0;
    double y8 = 8.0 * y;
    // P collects even-index terms, Q odd-index ones, alternating signs.
    double ak = 1.0;
    for (int k = 1; k <= 20; ++k) {
        ak *= (mu - (2.0 * k - 1.0) * (2.0 * k - 1.0)) / (k * y8);
        if (k % 2 == 1) {
            q += (k % 4 == 1 ? 1.0 : -1.0) * ak;
        } else {
            p += (k % 4 == 2 ? -1.0 : 1.0) * ak;
        }
        if (std::abs(ak) < 1e-17) break;
    }
    double chi = y - (0.5 * nu + 0.25) * pi;
    return std::sqrt(2.0 / (pi * y)) * (p * std::cos(chi) - q * std::sin(chi));
}

} // namespace

double bessel_j(int nu, double y) {
    if (nu < 0) throw std::domain_error("bessel_j: negative order");
    if (y < 0.0) throw std::domain_error("bessel_j: negative argument");
    if (y == 0.0) return nu == 0 ? 1.0 : 0.0;
    if (y <= std::min(8.0, 2.0 * std::sqrt(nu + 1.0))) return bessel_series(nu, y);
    if (y >= 4.0 * static_cast<double>(nu) * nu + 300.0) return bessel_hankel(nu, y);
    return bessel_miller(nu, y);
}

// ---------------------------------------------------------------------------
// Riemann zeta (Euler-Maclaurin)
// ---------------------------------------------------------------------------

namespace {

// B_{2j} / (2j)! via  B_{2j}/(2j)! = (-1)^{j+1} 2 zeta(2j) / (2 pi)^{2j}.
const std::vector<double>& em_coefficients() {
    static const std::vector<double> coef = [] {
        std::vector<double> c(33, 0.0);
        for (int j = 1; j <= 32; ++j) {
            double z2j;
            switch (j) {
                case 1: z2j = pi * pi / 6.0; break;
                case 2: z2j = std::pow(pi, 4) / 90.0; break;
                case 3: z2j = std::pow(pi, 6) / 945.0; break;
                case 4: z2j = std::pow(pi, 8) / 9450.0; break;
                case 5: z2j = std::pow(pi, 10) / 93555.0; break;
                default: {
                    z2j = 1.0;
                    for (int n = 2; n <= 40; ++n) {
                        double t = std::pow(static_cast<double>(n), -2.0 * j);
                        z2j += t;
                        if (t < 1e-20) break;
                    }
                }
            }
            double sign = (j % 2 == 1) ? 1.0 : -1.0;
            c[j] = sign * 2.0 * z2j / std::pow(two_pi, 2.0 * j);
        }
        return c;
    }();
    return coef;
}

} // namespace

cplx zeta(cplx s) {
    if (std::abs(s - cplx(1.0, 0.0)) < 1e-12)
        throw std::domain_error("zeta: pole at s = 1");
    const auto& b2f = em_coefficients();
    int M = std::max(24, static_cast<int>(std::ceil(std::abs(s.imag()))) / 2 + 24);
    KahanSum head;
    for (int n = 1; n < M; ++n) head.add(std::exp(-s * std::log(static_cast<double>(n))));
    cplx Md = static_cast<double>(M);
    cplx logM = std::log(static_cast<double>(M));
    cplx result = head.value() + std::exp((1.0 - s) * logM) / (s - 1.0) + 0.5 * std::exp(-s * logM);
    // correction terms: B_{2j}/(2j)! * s(s+1)...(s+2j-2) * M^{-s-2j+1}
    cplx poch = s; // rising factorial of length 2j-1, j = 1 gives s
    cplx Mpow = std::exp((-s - 1.0) * logM);
    for (int j = 1; j <= 30; ++j) {
        cplx term = b2f[j] * poch * Mpow;
        result += term;
        if (std::abs(term) < 1e-18 * std::abs(result)) break;
        poch *= (s + (2.0 * j - 1.0)) * (s + 2.0 * j);
        Mpow /= Md * Md;
    }
    return result;
}

cplx zeta_n(cplx s, int64_t N) {
    if (N <= 0) throw std::domain_error("zeta_n: N must be positive");
    cplx z = zeta(s);
    int64_t n = N;
    for (int64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            z *= 1.0 - std::exp(-s * std::log(static_cast<double>(p)));
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) z *= 1.0 - std::exp(-s * std::log(static_cast<double>(n)));
    return z;
}

// ---------------------------------------------------------------------------

double chebyshev_w(int n, double x) {
    if (n < 0) throw std::domain_error("chebyshev_w: negative degree");
    double wm1 = 1.0;          // W_0
    if (n == 0) return wm1;
    double w = 2.0 * x + 1.0;  // W_1
    for (int k = 2; k <= n; ++k) {
        double next = 2.0 * x * w - wm1;
        wm1 = w;
        w = next;
    }
    return w;
}

double fn_profile(int n, double y) {
    if (y <= 0.0 || y >= 1.0) return 0.0;
    double t = std::asin(y);
    double c = 1.0 / std::sqrt(1.0 - y * y);
    return (n % 2 == 0) ? std::cos(n * t) * c : std::sin(n * t) * c;
}

cplx fn_mellin(int n, cplx s) {
    if (s.real() <= 0.0) throw std::domain_error("fn_mellin: requires Re(s) > 0");
    auto recip_gamma_c = [](cplx z) { return 0.5 * std::exp(z * kLog2Pi) * recip_gamma(z); };
    double sign = ((n / 2) % 2 == 0) ? 1.0 : -1.0;
    return sign * gamma_c(s) * std::exp(-s * std::log(2.0)) *
           recip_gamma_c(0.5 * (s + static_cast<double>(n) + 1.0)) *
           recip_gamma_c(0.5 * (s - static_cast<double>(n) + 1.0));
}

} // namespace clab::special
