#include "holoform/structures.hpp"

#include <cmath>
#include <stdexcept>

#include "holoform/numform.hpp"

namespace holoform {

namespace {

MultiIndex full_index(int n) {
    MultiIndex idx(n);
    for (int j = 0; j < n; ++j) idx[j] = j;
    return idx;
}

// i^m for any integer m.
std::complex<double> ipow(long m) {
    switch (((m % 4) + 4) % 4) {
        case 0: return {1, 0};
        case 1: return {0, 1};
        case 2: return {-1, 0};
        default: return {0, -1};
    }
}

// Examines a chart top form c * dz_{0..n-1}; returns the constant or a
// failure reason + witness per the nowhere-vanishing decision rule.
bool top_constant(const Form& top, int n, Scalar& out, std::string& reason,
                  std::string& witness) {
    const LaurentPoly* c = top.coeff(full_index(n));
    if (!c) {
        reason = "zero top form";
        return false;
    }
    if (!c->is_polynomial()) {
        reason = "top coefficient is not a polynomial (cannot be decided nonvanishing)";
        witness = c->str();
        return false;
    }
    auto cv = c->constant_value();
    if (!cv) {
        reason = "top coefficient is a nonconstant polynomial (vanishes somewhere)";
        witness = c->str();
        return false;
    }
    out = *cv;
    return true;
}

StructureReport structure_check(Section& s, bool contact) {
    StructureReport rep;
    rep.degree = s.degree;
    rep.model_dim = s.model.dimension();
    int p = s.degree, n = rep.model_dim;
    rep.parity_ok = contact ? (p % 2 == 1 && n == 2 * p + 1) : (p % 2 == 0 && n == 2 * p);
    rep.bundle_root_check = s.model.is_single_projective() &&
                            2 * s.bundle.twists[0] == n + 1;
    if (!rep.parity_ok) {
        rep.reason = contact ? "parity: requires p odd and dim = 2p+1"
                             : "parity: requires s even and dim = 2s";
        return rep;
    }
    if (s.glue_status == GlueStatus::Unverified) glue_check(s);
    if (s.glue_status != GlueStatus::Verified) {
        rep.reason = "gluing failed";
        return rep;
    }
    for (const auto& [id, f] : s.chart_forms) {
        Form top = contact ? wedge(f, del_op(f)) : wedge(f, f);
        Scalar c;
        if (!top_constant(top, n, c, rep.reason, rep.witness)) {
            rep.fail_chart = id;
            return rep;
        }
        rep.top_form_constants[id] = c;
    }
    rep.verdict = contact ? StructureReport::PContact : StructureReport::SSymplectic;
    return rep;
}

}  // namespace

ChartId base_chart(const ChartModel& model) {
    return ChartId(model.leaves().size(), 0);
}

StructureReport is_p_contact(Section& s) { return structure_check(s, true); }

StructureReport is_s_symplectic(Section& s) { return structure_check(s, false); }

Section construct_pn(int n) {
    if (n % 4 != 3)
        throw std::invalid_argument("construct_pn: requires n = 3 mod 4 (p = (n-1)/2 odd)");
    int p = (n - 1) / 2;
    ChartModel model = ChartModel::projective(n);
    // Chart 0 variables are labeled 1..n at positions 0..n-1.
    Form gamma0(n, p);
    MultiIndex first;  // dz_1 ^ ... ^ dz_p
    for (int j = 1; j <= p; ++j) first.push_back(j - 1);
    gamma0.add_term(first, LaurentPoly::variable(n, n - 1));  // z_n coefficient
    MultiIndex second;  // dz_{p+1} ^ ... ^ dz_{n-1}
    for (int j = p + 1; j <= n - 1; ++j) second.push_back(j - 1);
    gamma0.add_term(second, LaurentPoly::constant(n, Scalar(1)));

    std::map<ChartId, Form> forms;
    forms[{0}] = gamma0;
    for (int a = 1; a <= n; ++a) {
        // Gamma_a = (z_0^{(a)})^{p+1} * pullback of Gamma_0; the variable
        // labeled 0 sits at position 0 in every chart a >= 1.
        Form pulled = pullback(gamma0, {0}, {a}, model);
        forms[{a}] = LaurentPoly::variable(n, 0, p + 1) * pulled;
    }
    Section s = make_section(model, BundleDescriptor::o(p + 1), p, std::move(forms));
    glue_check(s);
    return s;
}

Section contact_power(Section& eta, int l) {
    if (eta.degree != 1)
        throw std::invalid_argument("contact_power: input must have degree 1");
    if (l < 0) throw std::invalid_argument("contact_power: l must be >= 0");
    if (eta.glue_status == GlueStatus::Unverified) glue_check(eta);
    if (eta.glue_status != GlueStatus::Verified)
        throw std::invalid_argument("contact_power: input does not glue");
    std::map<ChartId, Form> forms;
    for (const auto& [id, f] : eta.chart_forms)
        forms[id] = wedge(f, wedge_pow(del_op(f), l));
    BundleDescriptor bundle = eta.bundle;
    for (int& k : bundle.twists) k *= (l + 1);
    Section out = make_section(eta.model, bundle, 2 * l + 1, std::move(forms));
    glue_check(out);
    return out;
}

Section product_structure(Section& omega, Section& gamma) {
    StructureReport so = is_s_symplectic(omega);
    if (!so.ok())
        throw std::invalid_argument("product_structure: first factor is not s-symplectic: " +
                                    so.reason);
    StructureReport sg = is_p_contact(gamma);
    if (!sg.ok())
        throw std::invalid_argument("product_structure: second factor is not p-contact: " +
                                    sg.reason);
    ChartModel model = ChartModel::product(omega.model, gamma.model);
    int dy = omega.model.dimension(), dim = model.dimension();
    std::vector<int> perm_y(dy), perm_z(dim - dy);
    for (int j = 0; j < dy; ++j) perm_y[j] = j;
    for (int j = 0; j < dim - dy; ++j) perm_z[j] = dy + j;
    std::map<ChartId, Form> forms;
    for (const auto& [ida, fa] : omega.chart_forms) {
        Form lifted_a = relabel(fa, perm_y, dim);
        for (const auto& [idb, fb] : gamma.chart_forms) {
            ChartId id = ida;
            id.insert(id.end(), idb.begin(), idb.end());
            forms[id] = wedge(lifted_a, relabel(fb, perm_z, dim));
        }
    }
    Section out = make_section(model, BundleDescriptor::tensor(omega.bundle, gamma.bundle),
                               omega.degree + gamma.degree, std::move(forms));
    glue_check(out);
    return out;
}

Scalar quadratic_T_value(const Section& s) {
    int n = s.model.dimension();
    const Form& g = s.chart_forms.at(base_chart(s.model));
    Form top = wedge(g, del_op(g));
    const LaurentPoly* c = top.coeff(full_index(n));
    if (!c) return Scalar(0);
    auto cv = c->constant_value();
    if (!cv)
        throw std::invalid_argument("quadratic_T: nonconstant top coefficient: " + c->str());
    return *cv;
}

Section section_combination(const std::vector<Section>& basis,
                            const std::vector<Scalar>& coeffs) {
    if (basis.empty() || basis.size() != coeffs.size())
        throw std::invalid_argument("section_combination: size mismatch");
    Section out = basis[0];
    for (auto& [id, f] : out.chart_forms) {
        Form acc = coeffs[0] * f;
        for (std::size_t i = 1; i < basis.size(); ++i)
            acc = acc + coeffs[i] * basis[i].chart_forms.at(id);
        f = acc;
    }
    out.glue_status = GlueStatus::Unverified;
    return out;
}

QuadraticForm quadratic_T(const std::vector<Section>& basis) {
    int m = static_cast<int>(basis.size());
    QuadraticForm q;
    q.dim = m;
    q.matrix.assign(m, std::vector<Scalar>(m, Scalar(0)));
    std::vector<Scalar> diag(m);
    for (int i = 0; i < m; ++i) {
        diag[i] = quadratic_T_value(basis[i]);
        q.matrix[i][i] = diag[i];
    }
    Scalar half(Rational(1, 2));
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            std::vector<Scalar> c(m, Scalar(0));
            c[i] = Scalar(1);
            c[j] = Scalar(1);
            Scalar ts = quadratic_T_value(section_combination({basis[i], basis[j]},
                                                              {Scalar(1), Scalar(1)}));
            Scalar b = half * (ts - diag[i] - diag[j]);
            q.matrix[i][j] = b;
            q.matrix[j][i] = b;
        }
    }
    return q;
}

PointReport no_contact_check_at(Section& s, const WeightModel& weight,
                                const std::vector<std::vector<Scalar>>& points) {
    int n = s.model.dimension();
    const Form& g = s.chart_forms.at(base_chart(s.model));
    Form dg = del_op(g);
    PointReport rep;
    for (std::size_t i = 0; i < points.size(); ++i) {
        PointReport::Row row;
        row.index = static_cast<int>(i);
        try {
            auto pt = to_complex_point(points[i]);
            NumForm G = num_value(g, pt, n, 0);
            NumForm dG = num_value(dg, pt, n, 0);
            NumForm dphi{n, 1, {}};
            auto dp = weight.del_phi(pt);
            for (int j = 0; j < n; ++j) dphi.add_term({j}, dp[j]);
            row.value = max_abs(dG - wedge_num(dphi, G));
        } catch (const PoleError& e) {
            row.skipped = true;
            row.note = e.what();
        }
        if (!row.skipped) rep.max_value = std::max(rep.max_value, row.value);
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

double volume_form_at(const Section& s, const WeightModel& weight,
                      const std::vector<Scalar>& point) {
    int n = s.model.dimension();
    const Form& g = s.chart_forms.at(base_chart(s.model));
    Form top = wedge(g, del_op(g));
    auto pt = to_complex_point(point);
    const LaurentPoly* c = top.coeff(full_index(n));
    std::complex<double> cv = c ? c->eval(pt) : 0.0;
    return std::ldexp(std::norm(cv) * std::exp(-2.0 * weight.phi(pt)), n);  // 2^n |c|^2 e^{-2phi}
}

double volume_form_crosscheck_at(const Section& s, const WeightModel& weight,
                                 const std::vector<Scalar>& point) {
    int n = s.model.dimension();
    int p = s.degree;
    const Form& g = s.chart_forms.at(base_chart(s.model));
    Form dg = del_op(g);
    auto pt = to_complex_point(point);
    int m = 2 * n;  // generators: dz_0..dz_{n-1}, then their conjugates
    NumForm G = num_value(g, pt, m, 0);
    NumForm Gbar = num_value(g, pt, m, n, /*conjugated=*/true);
    NumForm dG = num_value(dg, pt, m, 0);
    NumForm dbarGbar = num_value(dg, pt, m, n, /*conjugated=*/true);
    auto dp = weight.del_phi(pt);
    NumForm dphi{m, 1, {}}, dbarphi{m, 1, {}};
    for (int j = 0; j < n; ++j) {
        dphi.add_term({j}, dp[j]);
        dbarphi.add_term({n + j}, std::conj(dp[j]));
    }
    double ephi = std::exp(-weight.phi(pt));
    NumForm GGbar = wedge_num(G, Gbar);
    // del(Gamma ^ conj(Gamma) e^{-phi}) and delbar(...): conj(Gamma) is
    // del-closed and Gamma is delbar-closed, so only one derivative term
    // plus the weight gradient survives on each side.
    NumForm A = std::complex<double>(ephi) *
                (wedge_num(dG, Gbar) - wedge_num(dphi, GGbar));
    double sign_p = (p % 2 == 0) ? 1.0 : -1.0;
    NumForm B = std::complex<double>(ephi) *
                (std::complex<double>(sign_p) * wedge_num(G, dbarGbar) -
                 wedge_num(dbarphi, GGbar));
    NumForm top = wedge_num(A, B);
    auto it = top.terms.find(full_index(m));
    std::complex<double> c2 = it == top.terms.end() ? 0.0 : it->second;
    // i * c2 * dz^dzbar = i * c2 * i^{-n^2} * 2^n dV
    std::complex<double> density = ipow(1 - long(n) * long(n)) * c2 * std::ldexp(1.0, n);
    return density.real();
}

PointReport metric_independence_at(const Section& s, const std::vector<WeightModel>& weights,
                                   const std::vector<std::vector<Scalar>>& points) {
    int n = s.model.dimension();
    const Form& g = s.chart_forms.at(base_chart(s.model));
    Form dg = del_op(g);
    PointReport rep;
    int idx = 0;
    for (const WeightModel& w : weights) {
        for (const auto& point : points) {
            PointReport::Row row;
            row.index = idx++;
            row.note = w.str();
            try {
                auto pt = to_complex_point(point);
                NumForm G = num_value(g, pt, n, 0);
                NumForm dG = num_value(dg, pt, n, 0);
                NumForm dphi{n, 1, {}};
                auto dp = w.del_phi(pt);
                for (int j = 0; j < n; ++j) dphi.add_term({j}, dp[j]);
                NumForm ref = wedge_num(G, dG);  // Gamma ^ del(Gamma)
                NumForm chern = wedge_num(G, dG - wedge_num(dphi, G));  // Gamma ^ D'_h(Gamma)
                double scale = std::max(max_abs(ref), 1e-300);
                row.value = max_abs(chern - ref) / scale;
            } catch (const PoleError& e) {
                row.skipped = true;
                row.note += std::string("; ") + e.what();
            }
            if (!row.skipped) rep.max_value = std::max(rep.max_value, row.value);
            rep.rows.push_back(std::move(row));
        }
    }
    return rep;
}

}  // namespace holoform
