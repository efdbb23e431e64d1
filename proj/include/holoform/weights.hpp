#pragma once

#include <complex>
#include <string>
#include <vector>

#include "holoform/scalar.hpp"

namespace holoform {

/// Local fibre-metric weight on a chart: flat (phi = 0) or Fubini-Study
/// (phi = k * log(1 + |z|^2)) with closed-form first derivatives.
struct WeightModel {
    enum Kind { Flat, FubiniStudy } kind = Flat;
    int k = 0;  // bundle twist entering the Fubini-Study weight

    static WeightModel flat() { return {Flat, 0}; }
    static WeightModel fubini_study(int k) { return {FubiniStudy, k}; }

    std::string str() const {
        return kind == Flat ? "flat" : "fubini-study(k=" + std::to_string(k) + ")";
    }

    double phi(const std::vector<std::complex<double>>& z) const {
        if (kind == Flat) return 0.0;
        double s = 1.0;
        for (auto& c : z) s += std::norm(c);
        return k * std::log(s);
    }

    /// Components of the (1,0)-form d'phi: d'phi_j = k * conj(z_j) / (1+|z|^2).
    std::vector<std::complex<double>> del_phi(const std::vector<std::complex<double>>& z) const {
        std::vector<std::complex<double>> out(z.size(), 0.0);
        if (kind == Flat) return out;
        double s = 1.0;
        for (auto& c : z) s += std::norm(c);
        for (std::size_t j = 0; j < z.size(); ++j) out[j] = double(k) * std::conj(z[j]) / s;
        return out;
    }

    /// Exact d'phi at a Gaussian-rational point (the formula is rational).
    std::vector<Scalar> del_phi_exact(const std::vector<Scalar>& z) const {
        std::vector<Scalar> out(z.size(), Scalar(0));
        if (kind == Flat) return out;
        Scalar s(1);
        for (auto& c : z) s += c * c.conj();
        for (std::size_t j = 0; j < z.size(); ++j) out[j] = Scalar(k) * z[j].conj() / s;
        return out;
    }
};

/// Deterministic pseudo-random Gaussian-rational sample points with real
/// and imaginary parts in [1/2, 2] (away from poles and coordinate
/// hyperplanes); same seed, same points.
std::vector<std::vector<Scalar>> seeded_points(int nvars, int count, unsigned long long seed);

inline std::vector<std::complex<double>> to_complex_point(const std::vector<Scalar>& p) {
    std::vector<std::complex<double>> out;
    out.reserve(p.size());
    for (const Scalar& s : p) out.push_back(s.to_complex());
    return out;
}

}  // namespace holoform
