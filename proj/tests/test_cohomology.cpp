#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "holoform/cohomology.hpp"

using namespace holoform;

namespace {

long long binom(int a, int b) {
    if (b < 0 || b > a) return 0;
    long long r = 1;
    for (int i = 0; i < b; ++i) r = r * (a - i) / (i + 1);
    return r;
}

}  // namespace

TEST_CASE("zspace_basis: P^1 twisted 1-forms") {
    ZSpaceBasis z = zspace_basis(1, 1, 2);
    REQUIRE(z.dimension() == 1);
    // spanned by x1 dx0 - x0 dx1 up to scale
    Form expect(2, 1);
    expect.add_term({0}, LaurentPoly::variable(2, 1));
    expect.add_term({1}, -LaurentPoly::variable(2, 0));
    const Form& got = z.basis[0];
    bool match = got == expect || got == -expect;
    CHECK(match);
}

TEST_CASE("zspace_basis vanishes for k <= p, except (0,0) — exhaustive n <= 5") {
    for (int n = 1; n <= 5; ++n)
        for (int p = 0; p <= n; ++p)
            for (int k = 0; k <= p; ++k) {
                if (k == 0 && p == 0) continue;
                CHECK(zspace_basis(n, p, k).dimension() == 0);
            }
    CHECK(zspace_basis(3, 0, 0).dimension() == 1);
    CHECK(zspace_basis(3, 2, 1).dimension() == 0);
}

TEST_CASE("zspace_basis(3,1,2): dimension = Euler-sequence count 16 - 10") {
    ZSpaceBasis z = zspace_basis(3, 1, 2);
    CHECK(z.dimension() == 16 - 10);  // h0(O(1)^4) - h0(O(2)) on P^3
    // every element is Euler-contracted to zero, exactly
    std::vector<LaurentPoly> euler;
    for (int j = 0; j < 4; ++j) euler.push_back(LaurentPoly::variable(4, j));
    for (const Form& f : z.basis) CHECK(contract(euler, f).is_zero());
}

TEST_CASE("p = 0 row: dimension C(n+k, n) for k >= 0") {
    for (int n = 1; n <= 3; ++n)
        for (int k = 0; k <= 4; ++k)
            CHECK(zspace_basis(n, 0, k).dimension() == binom(n + k, n));
}

TEST_CASE("dehomogenize: chart forms and glue verification") {
    // x1 dx0 - x0 dx1 on P^1 chart 0 -> -dz_1
    Form el(2, 1);
    el.add_term({0}, LaurentPoly::variable(2, 1));
    el.add_term({1}, -LaurentPoly::variable(2, 0));
    Form chart0 = dehomogenize(el, 0, 1, 1);
    CHECK(chart0 == -Form::dz(1, 0));
    // homogeneous monomial x0^k dehomogenizes to (z_0^{(a)})^k on chart a
    Form mono = Form::monomial_form(3, {}, LaurentPoly::variable(3, 0, 2));
    Form c1 = dehomogenize(mono, 1, 2, 0);
    CHECK(c1 == Form::monomial_form(2, {}, LaurentPoly::variable(2, 0, 2)));
    // all Z^{1,2} basis elements on P^3 give glue-verified sections
    for (const Form& f : zspace_basis(3, 1, 2).basis) {
        Section s = dehomogenize_section(f, 3, 1, 2);
        CHECK(s.glue_status == GlueStatus::Verified);
    }
    // and on smaller spaces (n <= 3) across several twists
    for (int n = 1; n <= 3; ++n)
        for (int k = 2; k <= 3; ++k)
            for (const Form& f : zspace_basis(n, 1, k).basis) {
                Section s = dehomogenize_section(f, n, 1, k);
                CHECK(s.glue_status == GlueStatus::Verified);
            }
}

TEST_CASE("zspace dimension is basis-order independent (rank-nullity)") {
    // dimension from the kernel equals ncols - rank; re-derive the count
    // via the Euler sequence on another instance
    CHECK(zspace_basis(2, 1, 2).dimension() == 3 * binom(2 + 1, 2) - binom(2 + 2, 2));
}

TEST_CASE("bott_vanishing: the four cases and their side conditions") {
    VanishingStep a = bott_vanishing(1, 2, 7, 4);
    CHECK(a.vanishes);
    CHECK(a.justification == "case (a)");
    VanishingStep b = bott_vanishing(2, 0, 1, 4);
    CHECK(b.vanishes);
    CHECK(b.justification == "case (b)");
    VanishingStep nc = bott_vanishing(1, 1, 0, 4);
    CHECK_FALSE(nc.vanishes);
    CHECK(nc.justification == "not_covered");
    VanishingStep c = bott_vanishing(1, 1, 3, 4);
    CHECK(c.vanishes);
    CHECK(c.justification == "case (c)");
    VanishingStep d = bott_vanishing(2, 4, -1, 4);
    CHECK(d.vanishes);
    CHECK(d.justification == "case (d)");
    VanishingStep range = bott_vanishing(-2, 5, 0, 4);
    CHECK(range.vanishes);
    CHECK(range.justification == "degree out of range");
    // H^{0,0}(O(k)) for k >= 0 is nonzero: not covered
    CHECK_FALSE(bott_vanishing(0, 0, 3, 4).vanishes);
}

TEST_CASE("bott_vanishing sound against the p=0 dimension oracle") {
    // p = 0 row: h^{0,0}(P^N, O(k)) = C(N+k, N) for k >= 0, else 0
    for (int N = 1; N <= 2; ++N)
        for (int k = -4; k <= 4; ++k) {
            VanishingStep st = bott_vanishing(0, 0, k, N);
            long long dim = k >= 0 ? binom(N + k, N) : 0;
            if (st.vanishes) CHECK(dim == 0);
            // exact Euler-kernel cross-check where the twist is in range
            if (k >= 0) CHECK(zspace_basis(N, 0, k).dimension() == dim);
        }
}

TEST_CASE("hypersurface certificates: full sweep has no gaps") {
    for (int n : {3, 7, 11}) {
        for (int d = 3; d <= n; d += 2) {
            VanishingCertificate c = hypersurface_certificate(n, d);
            CHECK(c.verdict == VanishingCertificate::Vanishes);
            for (const auto& st : c.steps) {
                CHECK(st.vanishes);
                CHECK(st.justification != "not_covered");
            }
        }
    }
    // (n=3, d=3): k = 1, target H^{1,0}(X, O_X(1))
    VanishingCertificate c = hypersurface_certificate(3, 3);
    CHECK(c.k == 1);
    CHECK(c.p == 1);
    CHECK(c.steps.back().justification == "Akizuki-Nakano");  // k - pd = -2 < 0
}

TEST_CASE("hypersurface certificate rejections") {
    VanishingCertificate d1 = hypersurface_certificate(3, 1);
    CHECK(d1.verdict == VanishingCertificate::Rejected);
    CHECK(d1.reject_reason.find("P^n") != std::string::npos);
    CHECK(hypersurface_certificate(3, 2).verdict == VanishingCertificate::Rejected);
    CHECK(hypersurface_certificate(3, 5).verdict == VanishingCertificate::Rejected);
    CHECK(hypersurface_certificate(5, 3).verdict == VanishingCertificate::Rejected);
}

TEST_CASE("spin_root_k") {
    CHECK(spin_root_k(3) == 2);
    CHECK(spin_root_k(7) == 4);
    CHECK_FALSE(spin_root_k(4).has_value());
}
