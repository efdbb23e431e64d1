#include "holoform/curvature.hpp"

#include <Eigen/SVD>
#include <numbers>

#include "holoform/linalg.hpp"

namespace holoform {

namespace {

// Matrix of the contraction map xi -> xi . value, rows indexed by the
// (p-1)-multi-indices appearing, columns by the n vector components.
template <typename V>
std::map<MultiIndex, std::vector<V>> contraction_rows(const std::map<MultiIndex, V>& value,
                                                      int n) {
    std::map<MultiIndex, std::vector<V>> rows;
    for (const auto& [J, v] : value) {
        for (std::size_t t = 0; t < J.size(); ++t) {
            MultiIndex rest;
            for (std::size_t u = 0; u < J.size(); ++u)
                if (u != t) rest.push_back(J[u]);
            auto [it, inserted] = rows.emplace(rest, std::vector<V>(n, V(0)));
            V signed_v = (t % 2 == 0) ? v : V(0) - v;
            it->second[J[t]] = it->second[J[t]] + signed_v;
        }
    }
    return rows;
}

// D'_h Gamma = del(Gamma) - del(phi) ^ Gamma at an exact point, as a map
// multi-index -> Scalar over the chart's n variables.
std::map<MultiIndex, Scalar> chern_derivative_exact(const Form& gamma,
                                                    const WeightModel& weight,
                                                    const std::vector<Scalar>& point) {
    std::map<MultiIndex, Scalar> out = eval_exact_at(del_op(gamma), point);
    std::vector<Scalar> dp = weight.del_phi_exact(point);
    auto gval = eval_exact_at(gamma, point);
    MultiIndex merged;
    for (std::size_t j = 0; j < dp.size(); ++j) {
        if (dp[j].is_zero()) continue;
        MultiIndex one = {static_cast<int>(j)};
        for (const auto& [J, v] : gval) {
            int sign = merge_indices(one, J, merged);
            if (sign == 0) continue;
            Scalar term = dp[j] * v;
            if (sign < 0) term = -term;
            auto [it, inserted] = out.emplace(merged, -term);
            if (!inserted) it->second -= term;
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

int exact_kernel_dim(const std::map<MultiIndex, std::vector<Scalar>>& rows, int n) {
    ScalarMatrix m;
    for (const auto& [idx, r] : rows) m.push_back(r);
    if (m.empty()) return n;
    return n - rank(std::move(m));
}

ScalarMatrix rows_to_matrix(const std::map<MultiIndex, std::vector<Scalar>>& rows) {
    ScalarMatrix m;
    for (const auto& [idx, r] : rows) m.push_back(r);
    return m;
}

}  // namespace

bool m_positive(const Spectrum& spec, int m) {
    if (m < 1 || m > spec.n())
        throw std::invalid_argument("m_positive: m out of range");
    double s = 0.0;
    for (int i = 0; i < m; ++i) s += spec.values[i];  // ascending: m smallest
    return s >= 0.0;
}

double contact_pairing_value(const Spectrum& spec,
                             const std::map<MultiIndex, std::complex<double>>& gamma_components,
                             int p) {
    int n = spec.n();
    double total = 0.0;
    for (double l : spec.values) total += l;
    double acc = 0.0;
    for (const auto& [J, v] : gamma_components) {
        if (static_cast<int>(J.size()) != p)
            throw std::invalid_argument("contact_pairing_value: |J| != p");
        double in_j = 0.0;
        for (int j : J) {
            if (j < 0 || j >= n) throw std::invalid_argument("contact_pairing_value: index range");
            in_j += spec.values[j];
        }
        acc += (total - in_j) * std::norm(v);  // lambda_{C_J} |Gamma_J|^2
    }
    return -acc;
}

double scalar_curvature(const PointFrame& frame) {
    Eigen::LLT<Eigen::MatrixXcd> llt(frame.metric);
    if (llt.info() != Eigen::Success)
        throw std::invalid_argument("scalar_curvature: metric not positive definite");
    std::complex<double> tr = llt.solve(frame.curvature).trace();
    return tr.real() / (2.0 * std::numbers::pi);
}

PointFrame fs_frame(int n, int k, const std::vector<std::complex<double>>& point) {
    PointFrame f;
    f.point = point;
    f.weight = WeightModel::fubini_study(k);
    double s = 1.0;
    for (auto& z : point) s += std::norm(z);
    Eigen::MatrixXcd g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::complex<double> v = -std::conj(point[i]) * point[j];
            if (i == j) v += s;
            g(i, j) = v / (s * s);
        }
    f.metric = g;
    f.curvature = double(k) * g;
    return f;
}

int kernel_rank_at(const Section& s, const ChartId& chart, const std::vector<Scalar>& point) {
    int n = s.model.dimension();
    auto value = eval_exact_at(s.chart_forms.at(chart), point);
    if (value.empty()) return n;  // zero form: everything contracts to zero
    return exact_kernel_dim(contraction_rows(value, n), n);
}

int kernel_rank_at(const Section& s, const ChartId& chart,
                   const std::vector<std::complex<double>>& point) {
    int n = s.model.dimension();
    auto value = eval_at(s.chart_forms.at(chart), point);
    if (value.empty()) return n;
    auto rows = contraction_rows(value, n);
    Eigen::MatrixXcd m(rows.size(), n);
    int r = 0;
    for (const auto& [idx, row] : rows) {
        for (int c = 0; c < n; ++c) m(r, c) = row[c];
        ++r;
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    const auto& sv = svd.singularValues();
    double thresh = 1e-9 * (sv.size() ? sv(0) : 0.0);
    int rank = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) > thresh) ++rank;
    return n - rank;
}

int directsum_at(const Section& s, const WeightModel& weight, const ChartId& chart,
                 const std::vector<Scalar>& point) {
    int n = s.model.dimension();
    const Form& gamma = s.chart_forms.at(chart);
    auto gval = eval_exact_at(gamma, point);
    auto dval = chern_derivative_exact(gamma, weight, point);
    // F intersect G is the kernel of the stacked contraction system.
    ScalarMatrix m = rows_to_matrix(contraction_rows(gval, n));
    ScalarMatrix m2 = rows_to_matrix(contraction_rows(dval, n));
    m.insert(m.end(), m2.begin(), m2.end());
    if (m.empty()) return n;
    return n - rank(std::move(m));
}

}  // namespace holoform
