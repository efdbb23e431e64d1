#include "holoform/cohomology.hpp"

#include <sstream>
#include <stdexcept>

namespace holoform {

namespace {

// All degree-d exponent vectors in v variables, lexicographic order.
void enumerate_monomials(int v, int d, ExpVec& cur, std::vector<ExpVec>& out) {
    if (static_cast<int>(cur.size()) == v - 1) {
        cur.push_back(d);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int e = d; e >= 0; --e) {
        cur.push_back(e);
        enumerate_monomials(v, d - e, cur, out);
        cur.pop_back();
    }
}

std::vector<ExpVec> monomials(int v, int d) {
    std::vector<ExpVec> out;
    if (d < 0) return out;
    ExpVec cur;
    enumerate_monomials(v, d, cur, out);
    return out;
}

// All strictly increasing p-subsets of {0..n}, lexicographic order.
void enumerate_subsets(int n, int p, int start, MultiIndex& cur,
                       std::vector<MultiIndex>& out) {
    if (static_cast<int>(cur.size()) == p) {
        out.push_back(cur);
        return;
    }
    for (int j = start; j <= n; ++j) {
        cur.push_back(j);
        enumerate_subsets(n, p, j + 1, cur, out);
        cur.pop_back();
    }
}

std::vector<MultiIndex> subsets(int n, int p) {
    std::vector<MultiIndex> out;
    MultiIndex cur;
    enumerate_subsets(n, p, 0, cur, out);
    return out;
}

}  // namespace

ZSpaceBasis zspace_basis(int n, int p, int k) {
    if (n < 1 || p < 0) throw std::invalid_argument("zspace_basis: bad n or p");
    ZSpaceBasis out;
    out.n = n;
    out.p = p;
    out.k = k;
    int v = n + 1;
    if (p == 0) {
        // No constraint: H^{0,0}(O(k)) is spanned by the degree-k monomials.
        for (const ExpVec& e : monomials(v, k))
            out.basis.push_back(Form::monomial_form(v, {}, LaurentPoly::monomial(v, e, Scalar(1))));
        return out;
    }
    if (k < p) return out;  // zero by the k <= p row (the solve below also
                            // yields zero at k == p; k < p is empty by fiat)
    std::vector<MultiIndex> cols_J = subsets(n, p);
    std::vector<ExpVec> cols_m = monomials(v, k - p);
    std::vector<MultiIndex> rows_J = subsets(n, p - 1);
    std::vector<ExpVec> rows_m = monomials(v, k - p + 1);
    std::map<MultiIndex, int> row_J_pos;
    std::map<ExpVec, int> row_m_pos;
    for (std::size_t i = 0; i < rows_J.size(); ++i) row_J_pos[rows_J[i]] = static_cast<int>(i);
    for (std::size_t i = 0; i < rows_m.size(); ++i) row_m_pos[rows_m[i]] = static_cast<int>(i);
    int ncols = static_cast<int>(cols_J.size() * cols_m.size());
    int nrows = static_cast<int>(rows_J.size() * rows_m.size());
    ScalarMatrix mat(nrows, std::vector<Scalar>(ncols, Scalar(0)));
    int col = 0;
    for (const MultiIndex& J : cols_J) {
        for (const ExpVec& m : cols_m) {
            // Euler contraction: xi . (m dx_J) = sum_t (-1)^t x_{j_t} m dx_{J minus j_t}
            for (std::size_t t = 0; t < J.size(); ++t) {
                MultiIndex rest;
                for (std::size_t u = 0; u < J.size(); ++u)
                    if (u != t) rest.push_back(J[u]);
                ExpVec me = m;
                me[J[t]] += 1;
                int row = row_J_pos.at(rest) * static_cast<int>(rows_m.size()) + row_m_pos.at(me);
                mat[row][col] = Scalar(t % 2 == 0 ? 1 : -1);
            }
            ++col;
        }
    }
    for (const auto& vec : kernel_basis(std::move(mat), ncols)) {
        Form f(v, p);
        int c = 0;
        for (const MultiIndex& J : cols_J)
            for (const ExpVec& m : cols_m) {
                if (!vec[c].is_zero())
                    f.add_term(J, LaurentPoly::monomial(v, m, vec[c]));
                ++c;
            }
        out.basis.push_back(std::move(f));
    }
    return out;
}

Form dehomogenize(const Form& element, int chart, int n, int p) {
    int v = n + 1;
    if (element.nvars() != v)
        throw std::invalid_argument("dehomogenize: wrong homogeneous variable count");
    std::vector<LaurentPoly> coeff_images(v);
    std::vector<Form> d_images(v, Form(n, 1));
    for (int j = 0; j < v; ++j) {
        if (j == chart) {
            coeff_images[j] = LaurentPoly::constant(n, Scalar(1));
            // d_images[chart] stays the zero 1-form: dx_chart restricts to 0
        } else {
            int pos = ChartModel::var_position(chart, j);
            coeff_images[j] = LaurentPoly::variable(n, pos);
            d_images[j] = Form::dz(n, pos);
        }
    }
    (void)p;
    return substitute(element, coeff_images, d_images, n);
}

Section dehomogenize_section(const Form& element, int n, int p, int k) {
    ChartModel model = ChartModel::projective(n);
    std::map<ChartId, Form> forms;
    for (int a = 0; a <= n; ++a) forms[{a}] = dehomogenize(element, a, n, p);
    Section s = make_section(model, BundleDescriptor::o(k), p, std::move(forms));
    glue_check(s);
    return s;
}

VanishingStep bott_vanishing(int p, int q, int k, int N) {
    VanishingStep st;
    st.space = "P" + std::to_string(N);
    st.p = p;
    st.q = q;
    st.twist = k;
    std::ostringstream d;
    if (p < 0 || p > N || q < 0 || q > N) {
        st.vanishes = true;
        st.justification = "degree out of range";
        d << "p=" << p << ", q=" << q << " outside [0," << N << "]";
        st.detail = d.str();
        return st;
    }
    if (q != 0 && q != p && q != N) {
        st.vanishes = true;
        st.justification = "case (a)";
        d << "q=" << q << " not in {0," << p << "," << N << "}";
        st.detail = d.str();
        return st;
    }
    if (q == 0 && k <= p && !(k == 0 && p == 0)) {
        st.vanishes = true;
        st.justification = "case (b)";
        d << "q=0, k=" << k << " <= p=" << p << ", (k,p) != (0,0)";
        st.detail = d.str();
        return st;
    }
    if (p == q && p != 0 && p != N && k != 0) {
        st.vanishes = true;
        st.justification = "case (c)";
        d << "p=q=" << p << " not in {0," << N << "}, k=" << k << " != 0";
        st.detail = d.str();
        return st;
    }
    if (q == N && k >= p - N && !(k == 0 && p == N)) {
        st.vanishes = true;
        st.justification = "case (d)";
        d << "q=" << N << ", k=" << k << " >= p-N=" << (p - N) << ", (k,p) != (0," << N << ")";
        st.detail = d.str();
        return st;
    }
    st.vanishes = false;
    st.justification = "not_covered";
    st.detail = "no case applies";
    return st;
}

VanishingCertificate hypersurface_certificate(int n, int d) {
    VanishingCertificate cert;
    cert.n = n;
    cert.d = d;
    if (n % 4 != 3) {
        cert.verdict = VanishingCertificate::Rejected;
        cert.reject_reason = "n must be 3 mod 4 (p = (n-1)/2 odd)";
        return cert;
    }
    if (d % 2 == 0) {
        cert.verdict = VanishingCertificate::Rejected;
        cert.reject_reason = "d must be odd (spin parity of the hypersurface)";
        return cert;
    }
    if (d == 1) {
        cert.verdict = VanishingCertificate::Rejected;
        cert.reject_reason =
            "d = 1 is the construction case: the hypersurface is a copy of P^n, "
            "which carries the p-contact structure";
        return cert;
    }
    if (d > n) {
        cert.verdict = VanishingCertificate::Rejected;
        cert.reject_reason = "d must satisfy d <= n (Fano range)";
        return cert;
    }
    int p = (n - 1) / 2;
    int N = n + 1;
    int k = p + 1 + (1 - d) / 2;
    cert.p = p;
    cert.k = k;
    cert.target = "H^{" + std::to_string(p) + ",0}(X, O_X(" + std::to_string(k) +
                  ")), X in P" + std::to_string(N) + " of degree " + std::to_string(d);
    bool all_ok = true;
    for (int i = 0; i < p; ++i) {
        VanishingStep s1 = bott_vanishing(p - i, i, k - i * d, N);
        all_ok = all_ok && s1.vanishes;
        cert.steps.push_back(std::move(s1));
        VanishingStep s2 = bott_vanishing(p - i, i + 1, k - (i + 1) * d, N);
        all_ok = all_ok && s2.vanishes;
        cert.steps.push_back(std::move(s2));
    }
    VanishingStep chain;
    chain.space = "X";
    chain.p = p;
    chain.q = 0;
    chain.twist = k;
    chain.vanishes = true;
    chain.justification = "injection-chain";
    {
        std::ostringstream os;
        os << "H^0(X, O^" << p << "(" << k << ")) injects stepwise into H^{0," << p
           << "}(X, O_X(" << (k - p * d) << ")) via the restriction sequence";
        chain.detail = os.str();
    }
    cert.steps.push_back(std::move(chain));
    VanishingStep endgame;
    endgame.space = "X";
    endgame.p = 0;
    endgame.q = p;
    endgame.twist = k - p * d;
    endgame.vanishes = true;
    if (k - p * d < 0) {
        endgame.justification = "Akizuki-Nakano";
        endgame.detail = "k-pd=" + std::to_string(k - p * d) + " < 0, 0+p < n, bundle negative";
    } else {
        endgame.justification = "Kodaira";
        endgame.detail = "k-pd=" + std::to_string(k - p * d) +
                         " >= 0, -K_X + O(k-pd) ample, n+p > n";
    }
    cert.steps.push_back(std::move(endgame));
    cert.verdict = all_ok ? VanishingCertificate::Vanishes : VanishingCertificate::NotCovered;
    return cert;
}

std::optional<int> spin_root_k(int n) {
    if (n % 2 == 0) return std::nullopt;
    return (n + 1) / 2;
}

}  // namespace holoform
