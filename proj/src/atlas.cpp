#include "holoform/atlas.hpp"

#include <sstream>
#include <stdexcept>

namespace holoform {

namespace {

int leaf_chart_count(const Leaf& l) {
    return l.kind == Leaf::Projective ? l.n + 1 : 1;
}

LaurentPoly monomial_inverse(const LaurentPoly& m) {
    if (m.terms().size() != 1)
        throw std::invalid_argument("monomial_inverse: not a monomial");
    const auto& [e, c] = *m.terms().begin();
    ExpVec inv(e.size());
    for (std::size_t j = 0; j < e.size(); ++j) inv[j] = -e[j];
    return LaurentPoly::monomial(m.nvars(), inv, Scalar(1) / c);
}

}  // namespace

ChartModel ChartModel::projective(int n) {
    if (n < 1) throw std::invalid_argument("projective: n must be >= 1");
    ChartModel m;
    m.leaves_ = {{Leaf::Projective, n}};
    return m;
}

ChartModel ChartModel::torus(int n) {
    if (n < 1) throw std::invalid_argument("torus: n must be >= 1");
    ChartModel m;
    m.leaves_ = {{Leaf::Torus, n}};
    return m;
}

ChartModel ChartModel::product(ChartModel left, ChartModel right) {
    ChartModel m;
    m.leaves_ = left.leaves_;
    m.leaves_.insert(m.leaves_.end(), right.leaves_.begin(), right.leaves_.end());
    return m;
}

int ChartModel::dimension() const {
    int d = 0;
    for (const Leaf& l : leaves_) d += l.n;
    return d;
}

int ChartModel::leaf_offset(int t) const {
    int o = 0;
    for (int i = 0; i < t; ++i) o += leaves_[i].n;
    return o;
}

bool ChartModel::has_projective_leaf() const {
    for (const Leaf& l : leaves_)
        if (l.kind == Leaf::Projective) return true;
    return false;
}

std::vector<ChartId> ChartModel::chart_ids() const {
    std::vector<ChartId> out = {{}};
    for (const Leaf& l : leaves_) {
        std::vector<ChartId> next;
        for (const ChartId& id : out) {
            for (int a = 0; a < leaf_chart_count(l); ++a) {
                ChartId e = id;
                e.push_back(a);
                next.push_back(std::move(e));
            }
        }
        out = std::move(next);
    }
    return out;
}

std::string ChartModel::str() const {
    std::ostringstream os;
    for (std::size_t t = 0; t < leaves_.size(); ++t) {
        if (t) os << " x ";
        os << (leaves_[t].kind == Leaf::Projective ? "P" : "T") << leaves_[t].n;
    }
    return os.str();
}

BundleDescriptor BundleDescriptor::tensor(const BundleDescriptor& a, const BundleDescriptor& b) {
    BundleDescriptor out = a;
    out.twists.insert(out.twists.end(), b.twists.begin(), b.twists.end());
    return out;
}

LaurentPoly transition_function(const ChartModel& model, const BundleDescriptor& bundle,
                                const ChartId& from, const ChartId& to) {
    const auto& leaves = model.leaves();
    if (from.size() != leaves.size() || to.size() != leaves.size() ||
        bundle.twists.size() != leaves.size())
        throw std::invalid_argument("transition_function: chart/bundle shape mismatch");
    int dim = model.dimension();
    LaurentPoly g = LaurentPoly::constant(dim, Scalar(1));
    for (std::size_t t = 0; t < leaves.size(); ++t) {
        if (leaves[t].kind == Leaf::Torus) {
            if (bundle.twists[t] != 0)
                throw std::invalid_argument("transition_function: torus leaf must be untwisted");
            continue;
        }
        int a = from[t], b = to[t], k = bundle.twists[t];
        if (a == b || k == 0) continue;
        // g_{ab} on a projective leaf, in b-chart coordinates: (z_a^{(b)})^{-k}
        int pos = model.leaf_offset(static_cast<int>(t)) + ChartModel::var_position(b, a);
        g = g * LaurentPoly::variable(dim, pos, -k);
    }
    return g;
}

Form pullback(const Form& form, const ChartId& from, const ChartId& to,
              const ChartModel& model) {
    const auto& leaves = model.leaves();
    int dim = model.dimension();
    if (form.nvars() != dim)
        throw std::invalid_argument("pullback: form variable count mismatch");
    std::vector<LaurentPoly> coeff_images(dim);
    std::vector<Form> d_images(dim, Form(dim, 1));
    for (std::size_t t = 0; t < leaves.size(); ++t) {
        int o = model.leaf_offset(static_cast<int>(t));
        int n = leaves[t].n;
        int a = from[t], b = to[t];
        if (leaves[t].kind == Leaf::Torus || a == b) {
            for (int v = 0; v < n; ++v) {
                coeff_images[o + v] = LaurentPoly::variable(dim, o + v);
                d_images[o + v] = Form::dz(dim, o + v);
            }
            continue;
        }
        // Projective leaf, chart change a -> b. The from-chart coordinate
        // labeled j is x_j/x_a; in b-chart coordinates (x_b = 1) this is
        // w_j / w_a with w_l the b-chart variable labeled l and w_b = 1.
        int wa = o + ChartModel::var_position(b, a);
        for (int v = 0; v < n; ++v) {
            int j = ChartModel::var_label(a, v);
            if (j == b) {
                coeff_images[o + v] = LaurentPoly::variable(dim, wa, -1);
                Form d(dim, 1);
                d.add_term({wa}, -LaurentPoly::variable(dim, wa, -2));
                d_images[o + v] = d;
            } else {
                int wj = o + ChartModel::var_position(b, j);
                ExpVec e(dim, 0);
                e[wj] = 1;
                e[wa] = -1;
                coeff_images[o + v] = LaurentPoly::monomial(dim, e, Scalar(1));
                Form d(dim, 1);
                d.add_term({wj}, LaurentPoly::variable(dim, wa, -1));
                ExpVec e2(dim, 0);
                e2[wj] = 1;
                e2[wa] = -2;
                d.add_term({wa}, -LaurentPoly::monomial(dim, e2, Scalar(1)));
                d_images[o + v] = d;
            }
        }
    }
    return substitute(form, coeff_images, d_images, dim);
}

Section make_section(ChartModel model, BundleDescriptor bundle, int degree,
                     std::map<ChartId, Form> chart_forms) {
    int dim = model.dimension();
    if (bundle.twists.size() != model.leaves().size())
        throw std::invalid_argument("make_section: bundle shape mismatch");
    for (std::size_t t = 0; t < model.leaves().size(); ++t)
        if (model.leaves()[t].kind == Leaf::Torus && bundle.twists[t] != 0)
            throw std::invalid_argument("make_section: torus leaf must be untwisted");
    for (const ChartId& id : model.chart_ids())
        if (!chart_forms.count(id))
            throw std::invalid_argument("make_section: missing chart form");
    for (const auto& [id, f] : chart_forms) {
        if (f.nvars() != dim || f.degree() != degree)
            throw std::invalid_argument("make_section: form degree/variable mismatch");
        // lattice invariance: coefficients constant along torus-leaf blocks
        for (std::size_t t = 0; t < model.leaves().size(); ++t) {
            if (model.leaves()[t].kind != Leaf::Torus) continue;
            int o = model.leaf_offset(static_cast<int>(t));
            for (const auto& [idx, c] : f.coeffs())
                for (const auto& [e, s] : c.terms())
                    for (int v = 0; v < model.leaves()[t].n; ++v)
                        if (e[o + v] != 0)
                            throw std::invalid_argument(
                                "make_section: torus coefficients must be constant");
        }
    }
    Section s;
    s.model = std::move(model);
    s.bundle = std::move(bundle);
    s.degree = degree;
    s.chart_forms = std::move(chart_forms);
    s.glue_status = GlueStatus::Unverified;
    return s;
}

GluingCertificate glue_check(Section& s) {
    GluingCertificate cert;
    std::vector<ChartId> ids = s.model.chart_ids();
    for (const ChartId& a : ids) {
        for (const ChartId& b : ids) {
            if (a == b) continue;
            ++cert.pairs_checked;
            // Gamma_a = g_{ab} * pullback(Gamma_b), in a-chart coordinates;
            // g_{ab} there is the inverse of g_{ba} = transition(b -> a).
            LaurentPoly g_ab = monomial_inverse(transition_function(s.model, s.bundle, b, a));
            Form rhs = g_ab * pullback(s.chart_forms.at(b), b, a, s.model);
            Form diff = s.chart_forms.at(a) - rhs;
            if (!diff.is_zero()) cert.failures.push_back({a, b, diff});
        }
    }
    cert.verified = cert.failures.empty();
    s.glue_status = cert.verified ? GlueStatus::Verified : GlueStatus::Failed;
    return cert;
}

}  // namespace holoform
