#ifndef CLAB_QUADRATURE_HPP
#define CLAB_QUADRATURE_HPP

#include "clab/common.hpp"

#include <functional>
#include <vector>

namespace clab {

struct QuadResult {
    cplx value{0.0, 0.0};
    double err_estimate = 0.0;
    int evaluations = 0;
    bool converged = false;
};

// Adaptive Gauss-Kronrod (G7-K15) on a finite interval. Splits the interval
// with the largest local error first (leftmost on ties) until the summed
// error estimate drops below tol or the subdivision budget is exhausted.
QuadResult integrate_gk(const std::function<cplx(double)>& f, double a, double b,
                        double tol, int max_intervals = 2000);

// Convenience wrapper that throws on non-convergence.
cplx integrate_gk_checked(const std::function<cplx(double)>& f, double a, double b,
                          double tol, int max_intervals = 2000);

// Fixed composite Kronrod-15 grid on [a, b]: shared abscissae for evaluating
// several integrals against the same expensive samples.
struct FixedGrid {
    std::vector<double> x;
    std::vector<double> w;
};
FixedGrid kronrod_grid(double a, double b, int panels);

} // namespace clab

#endif
