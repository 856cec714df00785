#include "clab/modgroup.hpp"

#include <cmath>

namespace clab::modgroup {

bool Mat2::in_gamma0(int64_t N) const {
    if (!a.is_integer() || !b.is_integer() || !c.is_integer() || !d.is_integer()) return false;
    if (det() != Rational(1)) return false;
    return c.num() % N == 0;
}

cplx Mat2::apply(cplx z) const {
    cplx num = a.to_double() * z + b.to_double();
    cplx den = c.to_double() * z + d.to_double();
    return num / den;
}

Mat2 h_matrix(int64_t a, int64_t abar, int64_t q, const Rational& H) {
    if (q < 1) throw std::domain_error("h_matrix: q must be positive");
    if (((__int128)a * abar - 1) % q != 0)
        throw std::domain_error("h_matrix: a abar != 1 mod q");
    Rational aa(a), bb(abar), qq(q);
    Mat2 M{aa * H, (aa * bb * H * H - Rational(1)) / (qq * H), qq * H, bb * H};
    if (M.det() != Rational(1)) throw std::logic_error("h_matrix: determinant is not 1");
    return M;
}

cplx slash(const forms::Form& f, const Mat2& M, int ell, cplx z, double tol) {
    Rational det = M.det();
    if (!(det > Rational(0))) throw std::domain_error("slash: determinant must be positive");
    if (z.imag() <= 0.0) throw std::domain_error("slash: z must be in the upper half-plane");
    cplx w = M.apply(z);
    cplx den = M.c.to_double() * z + M.d.to_double();
    return std::pow(det.to_double(), 0.5 * ell) * std::pow(den, -ell) *
           forms::eval_form(f, w, tol);
}

Rational trace_product(int64_t p, int64_t N, const Rational& H) {
    Rational off = H - Rational(1) / H;
    auto mat = [&](int64_t q) {
        return Mat2{H, off / Rational(q), Rational(q) * H, H};
    };
    Mat2 prod = mat(p * N) * mat((p + 1) * N);
    return prod.trace();
}

Rational trace_product_closed(int64_t p, const Rational& H) {
    Rational t = Rational(2) * H;
    Rational t2 = t * t;
    return t2 - Rational(2) - (Rational(4) - t2) / Rational(4 * p * (p + 1));
}

Classification classify(const Mat2& M) {
    if (M.det() != Rational(1)) throw std::domain_error("classify: requires det = 1");
    Rational t = M.trace();
    Rational abs_t = t.sign() < 0 ? -t : t;
    if (abs_t < Rational(2)) {
        // elliptic; finite order iff trace = 2cos(pi r) with rational r,
        // and the only rational such values are 0, +-1 (and +-2, parabolic)
        bool finite = (t == Rational(0)) || (t == Rational(1)) || (t == Rational(-1));
        return {MatClass::elliptic, finite};
    }
    if (abs_t == Rational(2)) return {MatClass::parabolic, false};
    return {MatClass::hyperbolic, false};
}

double modularity_defect(const forms::Form& f, int64_t a, int64_t abar, int64_t q,
                         const std::vector<cplx>& samples, double tol) {
    if (q % f.level() != 0)
        throw std::domain_error("modularity_defect: level must divide q");
    Mat2 M = h_matrix(a, abar, q, Rational(1));
    int ell = f.weight();
    cplx target = i_pow(-ell) * f.omega() * f.character()(abar);
    double worst = 0.0;
    for (cplx z : samples) {
        cplx lhs = slash(f, M, ell, z, tol);
        cplx rhs = target * forms::eval_form(f, z, tol);
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return worst;
}

} // namespace clab::modgroup
