#pragma once

#include "holoform/atlas.hpp"
#include "holoform/linalg.hpp"
#include "holoform/weights.hpp"

namespace holoform {

/// Outcome of a structure predicate, with the per-chart top-form constants
/// and the parity / bundle-root bookkeeping.
struct StructureReport {
    enum Verdict { PContact, SSymplectic, Fails } verdict = Fails;
    std::string reason;  // set when verdict == Fails
    ChartId fail_chart;
    std::string witness;  // rendering of the offending coefficient, if any
    std::map<ChartId, Scalar> top_form_constants;
    int degree = 0;
    int model_dim = 0;
    bool parity_ok = false;
    bool bundle_root_check = false;  // 2k == n+1 on a single projective space

    bool ok() const { return verdict != Fails; }
};

/// Per-point numeric report (residuals, densities, deviations).
struct PointReport {
    struct Row {
        int index = 0;
        double value = 0.0;
        bool skipped = false;
        std::string note;
    };
    std::vector<Row> rows;
    double max_value = 0.0;
    unsigned long long seed = 0;
};

/// Decides the p-contact property: gluing verified, p odd with
/// dim = 2p+1, and every chart's Gamma ^ del(Gamma) a nonzero constant
/// multiple of the chart top form (the nowhere-vanishing decision rule).
StructureReport is_p_contact(Section& s);

/// Decides the s-symplectic property via Omega ^ Omega, s even, dim = 2s.
StructureReport is_s_symplectic(Section& s);

/// Numeric residual of the no-contact equation D'_h Gamma = 0, i.e.
/// del(Gamma) - del(phi) ^ Gamma, at each sample point (base chart).
PointReport no_contact_check_at(Section& s, const WeightModel& weight,
                                const std::vector<std::vector<Scalar>>& points);

/// Gamma := eta ^ (del eta)^l chartwise; bundle twist scales by l+1.
Section contact_power(Section& eta, int l);

/// External product pi*Omega ^ Gamma on the product model.
Section product_structure(Section& omega, Section& gamma);

/// The explicit p-contact section on P^n (n = 2p+1, p odd), O(p+1)-valued,
/// built from Gamma_0 = z_n dz_1^...^dz_p + dz_{p+1}^...^dz_{n-1} and
/// transported to the other charts by the gluing rule.
Section construct_pn(int n);

/// T(Gamma) := the chart-0 constant of Gamma ^ del(Gamma). Throws
/// std::invalid_argument (with the witness rendering) if that coefficient
/// is not constant.
Scalar quadratic_T_value(const Section& s);

struct QuadraticForm {
    int dim = 0;
    ScalarMatrix matrix;  // symmetric, T(Gamma) = Gamma^t M Gamma on the basis
};

/// Quadratic form of T on a basis of sections, built by polarization.
QuadraticForm quadratic_T(const std::vector<Section>& basis);

/// Linear combination of sections sharing model/bundle/degree.
Section section_combination(const std::vector<Section>& basis, const std::vector<Scalar>& coeffs);

/// Density of the volume form i^{n^2} {Gamma^delGamma, Gamma^delGamma}_{h^2}
/// against Lebesgue measure at the point (base chart): 2^n |c|^2 e^{-2phi}.
double volume_form_at(const Section& s, const WeightModel& weight,
                      const std::vector<Scalar>& point);

/// Independent route: i del(Gamma^conj(Gamma) e^{-phi}) ^
/// delbar(Gamma^conj(Gamma) e^{-phi}) evaluated in the numeric exterior
/// algebra on 2n generators, reduced to a Lebesgue density.
double volume_form_crosscheck_at(const Section& s, const WeightModel& weight,
                                 const std::vector<Scalar>& point);

/// Max relative deviation between Gamma ^ D'_h Gamma and Gamma ^ del Gamma
/// over the given weights and points.
PointReport metric_independence_at(const Section& s, const std::vector<WeightModel>& weights,
                                   const std::vector<std::vector<Scalar>>& points);

/// The base chart (all leaf charts 0).
ChartId base_chart(const ChartModel& model);

}  // namespace holoform
