#include "clab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace clab {

namespace {

// Kronrod-15 nodes/weights on [-1,1]; Gauss-7 embedded at the odd positions.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct Segment {
    double a, b;
    cplx value;
    double err;
};

Segment eval_segment(const std::function<cplx(double)>& f, double a, double b) {
    double c = 0.5 * (a + b);
    double h = 0.5 * (b - a);
    cplx fc = f(c);
    cplx resk = kWgk[7] * fc;
    cplx resg = kWg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        double x = h * kXgk[j];
        cplx fsum = f(c - x) + f(c + x);
        resk += kWgk[j] * fsum;
        if (j % 2 == 1) resg += kWg[j / 2] * fsum;
    }
    Segment s;
    s.a = a;
    s.b = b;
    s.value = resk * h;
    s.err = std::abs((resk - resg) * h);
    return s;
}

} // namespace

QuadResult integrate_gk(const std::function<cplx(double)>& f, double a, double b,
                        double tol, int max_intervals) {
    QuadResult out;
    if (a == b) {
        out.converged = true;
        return out;
    }
    std::vector<Segment> segs;
    segs.push_back(eval_segment(f, a, b));
    out.evaluations = 15;
    while (static_cast<int>(segs.size()) < max_intervals) {
        double total_err = 0.0;
        size_t worst = 0;
        for (size_t i = 0; i < segs.size(); ++i) {
            total_err += segs[i].err;
            if (segs[i].err > segs[worst].err) worst = i;
        }
        if (total_err <= tol) break;
        Segment s = segs[worst];
        double mid = 0.5 * (s.a + s.b);
        if (mid == s.a || mid == s.b) break; // interval exhausted in binary64
        segs[worst] = eval_segment(f, s.a, mid);
        segs.push_back(eval_segment(f, mid, s.b));
        out.evaluations += 30;
    }
    KahanSum acc;
    double err = 0.0;
    std::sort(segs.begin(), segs.end(), [](const Segment& x, const Segment& y) { return x.a < y.a; });
    for (const auto& s : segs) {
        acc.add(s.value);
        err += s.err;
    }
    out.value = acc.value();
    out.err_estimate = err;
    out.converged = err <= tol;
    return out;
}

cplx integrate_gk_checked(const std::function<cplx(double)>& f, double a, double b,
                          double tol, int max_intervals) {
    QuadResult r = integrate_gk(f, a, b, tol, max_intervals);
    if (!r.converged)
        throw std::runtime_error("integrate_gk: quadrature did not reach requested tolerance");
    return r.value;
}

FixedGrid kronrod_grid(double a, double b, int panels) {
    FixedGrid grid;
    double len = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
        double c = a + (p + 0.5) * len;
        double h = 0.5 * len;
        for (int j = 0; j < 8; ++j) {
            if (j == 7) {
                grid.x.push_back(c);
                grid.w.push_back(kWgk[7] * h);
            } else {
                grid.x.push_back(c - h * kXgk[j]);
                grid.w.push_back(kWgk[j] * h);
                grid.x.push_back(c + h * kXgk[j]);
                grid.w.push_back(kWgk[j] * h);
            }
        }
    }
    return grid;
}

} // namespace clab
