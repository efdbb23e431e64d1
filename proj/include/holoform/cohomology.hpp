#pragma once

#include <optional>

#include "holoform/atlas.hpp"
#include "holoform/linalg.hpp"

namespace holoform {

/// Basis of the kernel of the Euler contraction on Lambda^p V* (x)
/// S^{k-p} V*, V = C^{n+1}: representatives of H^{p,0}(P^n, O(k)).
/// Elements are Forms in n+1 homogeneous variables with homogeneous
/// degree-(k-p) polynomial coefficients.
struct ZSpaceBasis {
    int n = 0, p = 0, k = 0;
    std::vector<Form> basis;

    int dimension() const { return static_cast<int>(basis.size()); }
};

ZSpaceBasis zspace_basis(int n, int p, int k);

/// Restriction of a homogeneous representative to an affine chart; the
/// resulting chart forms assemble into a glue-verified O(k) Section.
Form dehomogenize(const Form& element, int chart, int n, int p);

/// The full Section of a ZSpaceBasis element.
Section dehomogenize_section(const Form& element, int n, int p, int k);

/// One certified cohomology group with its justification.
struct VanishingStep {
    // group H^{p,q}(space, O(twist)); space "P<N>" or "X"
    std::string space;
    int p = 0, q = 0, twist = 0;
    std::string justification;  // "case (a)".."case (d)", "degree out of range",
                                // "Akizuki-Nakano", "Kodaira", "injection-chain"
    std::string detail;         // the checked inequalities, human-auditable
    bool vanishes = false;      // false means not_covered
};

struct VanishingCertificate {
    std::string target;  // description of the certified group
    int n = 0, d = 0, p = 0, k = 0;
    std::vector<VanishingStep> steps;
    enum Verdict { Vanishes, NotCovered, Rejected } verdict = NotCovered;
    std::string reject_reason;
};

/// First applicable Bott-type case for H^{p,q}(P^N, O(k)), or not_covered.
VanishingStep bott_vanishing(int p, int q, int k, int N);

/// The full hypersurface certificate: X in P^{n+1} of odd degree d,
/// 3 <= d <= n, certifying H^{p,0}(X, O_X(k)) = 0 with k = p+1+(1-d)/2.
VanishingCertificate hypersurface_certificate(int n, int d);

/// Twist of the holomorphic square root of -K on P^n: (n+1)/2 for n odd.
std::optional<int> spin_root_k(int n);

}  // namespace holoform
