#pragma once

#include <complex>
#include <map>

#include "holoform/form.hpp"

namespace holoform {

/// Numeric exterior algebra over an abstract set of generators (used with
/// 2n generators for mixed dz / dz-bar computations: holomorphic
/// differentials at positions 0..n-1, antiholomorphic at n..2n-1).
struct NumForm {
    int ngen = 0;
    int degree = 0;
    std::map<MultiIndex, std::complex<double>> terms;

    static NumForm zero(int ngen, int degree) { return {ngen, degree, {}}; }

    NumForm& add_term(const MultiIndex& idx, std::complex<double> v) {
        if (v == std::complex<double>(0.0)) return *this;
        auto [it, inserted] = terms.emplace(idx, v);
        if (!inserted) {
            it->second += v;
            if (it->second == std::complex<double>(0.0)) terms.erase(it);
        }
        return *this;
    }
};

inline NumForm operator+(const NumForm& a, const NumForm& b) {
    NumForm out = a;
    for (const auto& [idx, v] : b.terms) out.add_term(idx, v);
    return out;
}

inline NumForm operator-(const NumForm& a, const NumForm& b) {
    NumForm out = a;
    for (const auto& [idx, v] : b.terms) out.add_term(idx, -v);
    return out;
}

inline NumForm operator*(std::complex<double> c, const NumForm& a) {
    NumForm out{a.ngen, a.degree, {}};
    for (const auto& [idx, v] : a.terms) out.add_term(idx, c * v);
    return out;
}

inline NumForm wedge_num(const NumForm& a, const NumForm& b) {
    NumForm out{a.ngen, a.degree + b.degree, {}};
    MultiIndex merged;
    for (const auto& [ia, va] : a.terms)
        for (const auto& [ib, vb] : b.terms) {
            int sign = merge_indices(ia, ib, merged);
            if (sign == 0) continue;
            out.add_term(merged, static_cast<double>(sign) * va * vb);
        }
    return out;
}

/// Numeric value of a symbolic form as a NumForm on ngen generators, with
/// differential j mapped to generator offset + j.
inline NumForm num_value(const Form& f, const std::vector<std::complex<double>>& point,
                         int ngen, int offset, bool conjugated = false) {
    NumForm out{ngen, f.degree(), {}};
    for (const auto& [idx, c] : f.coeffs()) {
        std::complex<double> v = c.eval(point);
        if (conjugated) v = std::conj(v);
        MultiIndex shifted;
        for (int j : idx) shifted.push_back(offset + j);
        out.add_term(shifted, v);
    }
    return out;
}

inline double max_abs(const NumForm& a) {
    double m = 0.0;
    for (const auto& [idx, v] : a.terms) m = std::max(m, std::abs(v));
    return m;
}

}  // namespace holoform
