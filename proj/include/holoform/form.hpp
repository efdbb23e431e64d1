#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "holoform/laurent.hpp"

namespace holoform {

/// Strictly increasing tuple of variable positions; length = form degree.
using MultiIndex = std::vector<int>;

/// Merges two strictly increasing index tuples, returning the sign of the
/// sorting permutation, or 0 if they share an index.
int merge_indices(const MultiIndex& a, const MultiIndex& b, MultiIndex& out);

/// Rebuilds the canonical form of a Laurent polynomial (drops zero terms,
/// merges duplicates). Idempotent; equality after normalize is term-map
/// equality.
LaurentPoly normalize(const LaurentPoly& p);

/// A (p,0)-form on one chart: map from strictly increasing multi-indices to
/// Laurent polynomial coefficients. Canonical: no zero coefficients stored.
class Form {
public:
    Form() = default;
    Form(int nvars, int degree) : nvars_(nvars), degree_(degree) {}

    static Form zero(int nvars, int degree) { return Form(nvars, degree); }
    /// coeff * dz_{idx[0]} ^ ... ^ dz_{idx[p-1]}, idx strictly increasing.
    static Form monomial_form(int nvars, MultiIndex idx, LaurentPoly coeff);
    /// The coordinate 1-form dz_var.
    static Form dz(int nvars, int var);

    int nvars() const { return nvars_; }
    int degree() const { return degree_; }
    const std::map<MultiIndex, LaurentPoly>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    Form& add_term(const MultiIndex& idx, const LaurentPoly& coeff);
    const LaurentPoly* coeff(const MultiIndex& idx) const;

    friend Form operator+(const Form& a, const Form& b);
    friend Form operator-(const Form& a, const Form& b);
    friend Form operator-(const Form& a);
    friend Form operator*(const Scalar& c, const Form& a);
    friend Form operator*(const LaurentPoly& p, const Form& a);
    friend bool operator==(const Form& a, const Form& b) {
        return a.nvars_ == b.nvars_ && a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const Form& a, const Form& b) { return !(a == b); }

    std::string str(const std::vector<std::string>& var_names = {}) const;

private:
    int nvars_ = 0;
    int degree_ = 0;
    std::map<MultiIndex, LaurentPoly> coeffs_;
};

/// Exterior product. Degrees add; rejects degree overflow past nvars.
Form wedge(const Form& a, const Form& b);

/// Wedge power a^k (k >= 0).
Form wedge_pow(const Form& a, int k);

/// Holomorphic exterior derivative: each coefficient differentiated in each
/// variable, the new dz prepended with the merge sign. Satisfies del(del) = 0.
Form del_op(const Form& a);

/// Interior product of the vector field xi = sum_j xi[j] d/dz_j against a,
/// in the left anti-derivation convention:
///   xi . (dz_J) = sum_k (-1)^k xi[j_k] dz_{J \ j_k}.
/// Degree drops by one; rejects contraction of a 0-form.
Form contract(const std::vector<LaurentPoly>& xi, const Form& a);

/// Numeric value of a form at a point: multi-index -> complex coefficient.
using NumFormValue = std::map<MultiIndex, std::complex<double>>;
NumFormValue eval_at(const Form& a, const std::vector<std::complex<double>>& point);

/// Exact value of a form at a Gaussian-rational point.
std::map<MultiIndex, Scalar> eval_exact_at(const Form& a, const std::vector<Scalar>& point);

/// Substitution pullback: coefficients mapped through monomial substitution
/// and each dz_j replaced by the 1-form d_images[j] (all in a space with
/// out_nvars variables).
Form substitute(const Form& a, const std::vector<LaurentPoly>& coeff_images,
                const std::vector<Form>& d_images, int out_nvars);

/// Embeds a form into a larger variable space, variable j -> perm[j].
Form relabel(const Form& a, const std::vector<int>& perm, int out_nvars);

/// Parses the canonical rendering of a Form (inverse of Form::str).
Form parse_form(const std::string& text, int nvars, int degree,
                const std::vector<std::string>& var_names = {});

}  // namespace holoform
