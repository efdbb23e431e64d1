#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "holoform/scalar.hpp"

namespace holoform {

/// Dense integer exponent vector; entries may be negative.
using ExpVec = std::vector<int>;

/// Multivariate Laurent polynomial over Scalar, kept in canonical form:
/// no stored term has a zero coefficient, and equality is term-map equality.
/// Term order (std::map over ExpVec) is lexicographic in the exponents,
/// which is also the canonical rendering order.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(int nvars) : nvars_(nvars) {}

    static LaurentPoly constant(int nvars, Scalar c);
    /// c * prod z_j^{exps[j]}
    static LaurentPoly monomial(int nvars, ExpVec exps, Scalar c);
    /// z_var^power
    static LaurentPoly variable(int nvars, int var, int power = 1);

    int nvars() const { return nvars_; }
    const std::map<ExpVec, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_polynomial() const;  // no negative exponents
    /// The constant coefficient if the polynomial is constant.
    std::optional<Scalar> constant_value() const;

    LaurentPoly& add_term(const ExpVec& exps, const Scalar& c);

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const Scalar& c, const LaurentPoly& a);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    /// d/dz_var, termwise.
    LaurentPoly derivative(int var) const;

    /// Substitutes each variable by a Laurent monomial: z_j -> images[j].
    /// Every image must be a single-term LaurentPoly in the target variable
    /// space; this covers all chart transition substitutions.
    LaurentPoly substitute_monomials(const std::vector<LaurentPoly>& images, int out_nvars) const;

    /// Maps variable j of this polynomial to variable perm[j] of a larger
    /// space with out_nvars variables (block embedding for products).
    LaurentPoly relabel(const std::vector<int>& perm, int out_nvars) const;

    /// Numeric evaluation. Throws PoleError if a coordinate is zero where a
    /// negative exponent requires division.
    std::complex<double> eval(const std::vector<std::complex<double>>& point) const;
    /// Exact evaluation at a Gaussian-rational point (same pole rule).
    Scalar eval_exact(const std::vector<Scalar>& point) const;

    /// Canonical rendering; var_names[j] names variable j (defaults z0,z1,...).
    std::string str(const std::vector<std::string>& var_names = {}) const;

private:
    int nvars_ = 0;
    std::map<ExpVec, Scalar> terms_;
};

struct PoleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parses the canonical rendering of a LaurentPoly with variables named
/// var_names; inverse of LaurentPoly::str.
LaurentPoly parse_laurent(const std::string& text, int nvars,
                          const std::vector<std::string>& var_names = {});

std::vector<std::string> default_var_names(int nvars);

}  // namespace holoform
