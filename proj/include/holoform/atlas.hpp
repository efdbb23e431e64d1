#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "holoform/form.hpp"

namespace holoform {

/// One chart per leaf of the model tree: entry t is the chart index of
/// leaf t (projective leaves: 0..n, torus leaves: always 0).
using ChartId = std::vector<int>;

/// Description of one leaf of a (possibly nested) product model.
struct Leaf {
    enum Kind { Projective, Torus } kind;
    int n;  // complex dimension of the leaf
};

/// A chart model: projective space, flat torus, or a binary product.
/// Chart variables of a product are the concatenated leaf blocks, leaves
/// enumerated left to right.
class ChartModel {
public:
    static ChartModel projective(int n);
    static ChartModel torus(int n);
    static ChartModel product(ChartModel left, ChartModel right);

    const std::vector<Leaf>& leaves() const { return leaves_; }
    int dimension() const;
    /// All chart ids (cartesian product of per-leaf chart ranges),
    /// lexicographic order.
    std::vector<ChartId> chart_ids() const;
    /// Start of leaf t's variable block within a chart.
    int leaf_offset(int t) const;
    bool is_single_projective() const {
        return leaves_.size() == 1 && leaves_[0].kind == Leaf::Projective;
    }
    bool has_projective_leaf() const;

    /// Variable labels of a projective-leaf chart: {0..n} minus the chart
    /// index, increasing. Position of homogeneous label j in chart a.
    static int var_position(int a, int j) { return j < a ? j : j - 1; }
    /// Inverse: homogeneous label of variable position v in chart a.
    static int var_label(int a, int v) { return v < a ? v : v + 1; }

    std::string str() const;

private:
    std::vector<Leaf> leaves_;
};

/// Twist of the line bundle, one entry per leaf (external tensor product);
/// torus leaves must carry twist 0 (trivial bundle).
struct BundleDescriptor {
    std::vector<int> twists;

    static BundleDescriptor o(int k) { return BundleDescriptor{{k}}; }
    static BundleDescriptor trivial(int nleaves) {
        return BundleDescriptor{std::vector<int>(nleaves, 0)};
    }
    static BundleDescriptor tensor(const BundleDescriptor& a, const BundleDescriptor& b);
    friend bool operator==(const BundleDescriptor& a, const BundleDescriptor& b) {
        return a.twists == b.twists;
    }
};

enum class GlueStatus { Unverified, Verified, Failed };

struct GlueFailure {
    ChartId a, b;
    Form witness;  // nonzero difference in a-chart coordinates
};

struct GluingCertificate {
    bool verified = false;
    int pairs_checked = 0;
    std::vector<GlueFailure> failures;
};

/// A global bundle-valued (p,0)-form: one chart form per chart.
struct Section {
    ChartModel model;
    BundleDescriptor bundle;
    int degree = 0;
    std::map<ChartId, Form> chart_forms;
    GlueStatus glue_status = GlueStatus::Unverified;
};

/// g_{from,to} of the bundle, expressed in the to-chart coordinates.
/// The gluing relation is Gamma_from = g_{from,to} * Gamma_to (after
/// pulling Gamma_to back to from-chart coordinates). Always a Laurent
/// monomial for the supported models.
LaurentPoly transition_function(const ChartModel& model, const BundleDescriptor& bundle,
                                const ChartId& from, const ChartId& to);

/// Pulls a form in from-chart variables back to to-chart variables by the
/// rational coordinate change and the chain rule on differentials.
Form pullback(const Form& form, const ChartId& from, const ChartId& to,
              const ChartModel& model);

/// Constructs a Section with glue_status Unverified; validates shapes
/// (degree, variable counts, torus constancy).
Section make_section(ChartModel model, BundleDescriptor bundle, int degree,
                     std::map<ChartId, Form> chart_forms);

/// Verifies Gamma_a = g_{ab} * pullback(Gamma_b) exactly on every ordered
/// chart pair, in the a-chart coordinates; updates s.glue_status.
GluingCertificate glue_check(Section& s);

}  // namespace holoform
