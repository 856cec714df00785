#ifndef CLAB_FORMS_HPP
#define CLAB_FORMS_HPP

#include "clab/common.hpp"
#include "clab/numth.hpp"

#include <memory>
#include <string>
#include <vector>

namespace clab::forms {

enum class Normalization { arithmetic, analytic };

// Coefficients of prod_d eta(d z)^{e_d} up to q^M, exact integers. The
// leading power q^{sum d e / 24} must be integral; index [n] is the
// coefficient of q^n in the expansion (so [off] = 1 is the first nonzero).
std::vector<__int128> eta_power_series(const std::vector<std::pair<int64_t, int64_t>>& exponents,
                                       int64_t M);

// Eisenstein coefficients: E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n, index 0
// is the constant term. Exact rational prefactor, binary64 output.
std::vector<double> eisenstein_coeffs(int k, int64_t M);

// A Fourier-coefficient provider with its transformation data. Coefficients
// are cached; ensure() extends the cache (regenerating for eta quotients).
class Form {
public:
    virtual ~Form() = default;

    int weight() const { return weight_; }
    int64_t level() const { return level_; }
    const numth::DirichletCharacter& character() const { return chi_; }
    cplx omega() const { return omega_; }

    // a_n, arithmetic normalization (a_1 = 1 for the bundled cusp forms);
    // includes the constant term for non-cuspidal providers via a0().
    virtual cplx coefficient(int64_t n) const = 0;
    virtual cplx a0() const { return {0.0, 0.0}; }

    // analytic normalization f_n = a_n n^{-(k-1)/2}
    cplx analytic(int64_t n) const {
        return coefficient(n) * std::pow(static_cast<double>(n), -0.5 * (weight_ - 1));
    }

    // exact integer coefficient where the provider is integral; throws
    // std::logic_error otherwise and std::overflow_error beyond int64
    virtual int64_t exact_coefficient(int64_t n) const;

    virtual void ensure(int64_t M) = 0;
    virtual int64_t size() const = 0;

protected:
    Form(int weight, int64_t level, numth::DirichletCharacter chi, cplx omega)
        : weight_(weight), level_(level), chi_(std::move(chi)), omega_(omega) {}

    int weight_;
    int64_t level_;
    numth::DirichletCharacter chi_;
    cplx omega_;
};

using FormPtr = std::shared_ptr<Form>;

// The bundled forms.
FormPtr delta_form(int64_t M = 2000);              // weight 12, level 1
FormPtr level11_form(int64_t M = 2000);            // weight 2, level 11
FormPtr eisenstein_form(int k, int64_t M = 2000);  // E_k, evaluation-only

// Generic eta-quotient provider (weight = sum e_d / 2 must be integral).
FormPtr eta_quotient_form(const std::vector<std::pair<int64_t, int64_t>>& exponents, int weight,
                          int64_t level, cplx omega, int64_t M = 2000);

// --- coefficient files -------------------------------------------------------
//
// UTF-8 text: header lines
//   weight: <int>
//   level: <int>
//   character: <modulus>.<conrey>
//   omega: <re> <im>
//   normalization: arithmetic|analytic
// then data lines `<n> <re> [<im>]` with n = 1, 2, 3, ... consecutively.
// '#' starts a comment.

FormPtr load_coefficients(const std::string& path);
void save_coefficients(const Form& form, const std::string& path, int64_t count,
                       Normalization norm = Normalization::arithmetic);

// Truncated q-expansion evaluation with a certified geometric tail bound.
// Throws when the cached coefficients cannot push the tail below tol.
cplx eval_form(const Form& form, cplx z, double tol = 1e-12);

} // namespace clab::forms

#endif
