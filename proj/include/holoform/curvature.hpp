#pragma once

#include <Eigen/Dense>
#include <complex>
#include <map>
#include <stdexcept>
#include <vector>

#include "holoform/atlas.hpp"
#include "holoform/weights.hpp"

namespace holoform {

/// Sorted ascending eigenvalues of the curvature (1,1)-form with respect
/// to the metric at a point, in the simultaneously diagonalized frame.
struct Spectrum {
    std::vector<double> values;  // ascending

    int n() const { return static_cast<int>(values.size()); }
};

/// Pointwise metric and curvature data.
struct PointFrame {
    std::vector<std::complex<double>> point;
    Eigen::MatrixXcd metric;     // positive definite Hermitian
    Eigen::MatrixXcd curvature;  // Hermitian
    WeightModel weight;
};

/// Diagonal curvature operator on (|J|, |K|)-components: multiplies each
/// component by sum_{j in J} l_j + sum_{k in K} l_k - sum_l l_l.
/// Templated so the oracle comparison can run over exact rationals.
template <typename Eig, typename Val>
std::map<std::pair<MultiIndex, MultiIndex>, Val> curvature_op_apply(
    const std::vector<Eig>& spec,
    const std::map<std::pair<MultiIndex, MultiIndex>, Val>& components) {
    int n = static_cast<int>(spec.size());
    Eig total = Eig(0);
    for (const Eig& l : spec) total += l;
    std::map<std::pair<MultiIndex, MultiIndex>, Val> out;
    for (const auto& [jk, v] : components) {
        Eig factor = Eig(0) - total;
        for (int j : jk.first) {
            if (j < 0 || j >= n) throw std::invalid_argument("curvature_op_apply: J index out of range");
            factor += spec[j];
        }
        for (int k : jk.second) {
            if (k < 0 || k >= n) throw std::invalid_argument("curvature_op_apply: K index out of range");
            factor += spec[k];
        }
        out[jk] = Val(factor) * v;
    }
    return out;
}

/// True iff the sum of the m smallest eigenvalues is >= 0 (equivalently:
/// the sum of any m eigenvalues is).
bool m_positive(const Spectrum& spec, int m);

/// -sum_{|J|=p} l_{C_J} |Gamma_J|^2, C_J the complement of J in {0..n-1}.
double contact_pairing_value(const Spectrum& spec,
                             const std::map<MultiIndex, std::complex<double>>& gamma_components,
                             int p);

/// (1/2pi) trace(metric^{-1} curvature).
double scalar_curvature(const PointFrame& frame);

/// Fubini-Study frame of O(k) at a chart point: metric g_FS, curvature
/// k * g_FS, weight phi = k log(1+|z|^2).
PointFrame fs_frame(int n, int k, const std::vector<std::complex<double>>& point);

/// Kernel dimension of xi -> xi . Gamma_chart at an exact rational point.
int kernel_rank_at(const Section& s, const ChartId& chart, const std::vector<Scalar>& point);

/// Same at a floating point, kernel by SVD with relative threshold 1e-9.
int kernel_rank_at(const Section& s, const ChartId& chart,
                   const std::vector<std::complex<double>>& point);

/// dim(F intersect G) at the point, F = ker(xi . Gamma),
/// G = ker(xi . D'_h Gamma); exact over the Gaussian rationals.
int directsum_at(const Section& s, const WeightModel& weight, const ChartId& chart,
                 const std::vector<Scalar>& point);

}  // namespace holoform
