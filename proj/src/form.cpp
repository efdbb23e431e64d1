#include "holoform/form.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace holoform {

int merge_indices(const MultiIndex& a, const MultiIndex& b, MultiIndex& out) {
    out.clear();
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    int sign = 1;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return 0;
        if (a[i] < b[j]) {
            out.push_back(a[i++]);
        } else {
            // b[j] jumps over the remaining a-elements
            if ((a.size() - i) % 2 == 1) sign = -sign;
            out.push_back(b[j++]);
        }
    }
    while (i < a.size()) out.push_back(a[i++]);
    while (j < b.size()) out.push_back(b[j++]);
    return sign;
}

LaurentPoly normalize(const LaurentPoly& p) {
    LaurentPoly out(p.nvars());
    for (const auto& [e, c] : p.terms()) out.add_term(e, c);
    return out;
}

Form Form::monomial_form(int nvars, MultiIndex idx, LaurentPoly coeff) {
    Form f(nvars, static_cast<int>(idx.size()));
    f.add_term(idx, coeff);
    return f;
}

Form Form::dz(int nvars, int var) {
    return monomial_form(nvars, {var}, LaurentPoly::constant(nvars, Scalar(1)));
}

Form& Form::add_term(const MultiIndex& idx, const LaurentPoly& coeff) {
    if (static_cast<int>(idx.size()) != degree_)
        throw std::invalid_argument("Form::add_term: multi-index length != degree");
    for (std::size_t k = 0; k + 1 < idx.size(); ++k)
        if (idx[k] >= idx[k + 1])
            throw std::invalid_argument("Form::add_term: multi-index not strictly increasing");
    if (!idx.empty() && idx.back() >= nvars_)
        throw std::invalid_argument("Form::add_term: index out of range");
    if (coeff.is_zero()) return *this;
    auto it = coeffs_.find(idx);
    if (it == coeffs_.end()) {
        coeffs_.emplace(idx, coeff);
    } else {
        it->second = it->second + coeff;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
    return *this;
}

const LaurentPoly* Form::coeff(const MultiIndex& idx) const {
    auto it = coeffs_.find(idx);
    return it == coeffs_.end() ? nullptr : &it->second;
}

Form operator+(const Form& a, const Form& b) {
    Form out = a;
    for (const auto& [idx, c] : b.coeffs_) out.add_term(idx, c);
    return out;
}

Form operator-(const Form& a, const Form& b) {
    Form out = a;
    for (const auto& [idx, c] : b.coeffs_) out.add_term(idx, -c);
    return out;
}

Form operator-(const Form& a) {
    Form out(a.nvars_, a.degree_);
    for (const auto& [idx, c] : a.coeffs_) out.coeffs_.emplace(idx, -c);
    return out;
}

Form operator*(const Scalar& c, const Form& a) {
    Form out(a.nvars_, a.degree_);
    for (const auto& [idx, p] : a.coeffs_) out.add_term(idx, c * p);
    return out;
}

Form operator*(const LaurentPoly& p, const Form& a) {
    Form out(a.nvars_, a.degree_);
    for (const auto& [idx, q] : a.coeffs_) out.add_term(idx, p * q);
    return out;
}

Form wedge(const Form& a, const Form& b) {
    if (a.nvars() != b.nvars())
        throw std::invalid_argument("wedge: variable count mismatch");
    if (a.degree() + b.degree() > a.nvars())
        throw std::invalid_argument("wedge: degree overflow");
    Form out(a.nvars(), a.degree() + b.degree());
    MultiIndex merged;
    for (const auto& [ia, ca] : a.coeffs()) {
        for (const auto& [ib, cb] : b.coeffs()) {
            int sign = merge_indices(ia, ib, merged);
            if (sign == 0) continue;
            LaurentPoly c = ca * cb;
            out.add_term(merged, sign < 0 ? -c : c);
        }
    }
    return out;
}

Form wedge_pow(const Form& a, int k) {
    if (k < 0) throw std::invalid_argument("wedge_pow: negative power");
    if (k == 0)
        return Form::monomial_form(a.nvars(), {}, LaurentPoly::constant(a.nvars(), Scalar(1)));
    Form out = a;
    for (int t = 1; t < k; ++t) out = wedge(out, a);
    return out;
}

Form del_op(const Form& a) {
    Form out(a.nvars(), a.degree() + 1);
    if (a.degree() + 1 > a.nvars()) return out;  // forced zero by top degree
    MultiIndex merged;
    for (const auto& [idx, c] : a.coeffs()) {
        for (int j = 0; j < a.nvars(); ++j) {
            LaurentPoly d = c.derivative(j);
            if (d.is_zero()) continue;
            int sign = merge_indices({j}, idx, merged);
            if (sign == 0) continue;
            out.add_term(merged, sign < 0 ? -d : d);
        }
    }
    return out;
}

Form contract(const std::vector<LaurentPoly>& xi, const Form& a) {
    if (static_cast<int>(xi.size()) != a.nvars())
        throw std::invalid_argument("contract: vector field component count mismatch");
    if (a.degree() == 0)
        throw std::invalid_argument("contract: degree underflow on 0-form");
    Form out(a.nvars(), a.degree() - 1);
    for (const auto& [idx, c] : a.coeffs()) {
        for (std::size_t k = 0; k < idx.size(); ++k) {
            const LaurentPoly& comp = xi[idx[k]];
            if (comp.is_zero()) continue;
            MultiIndex rest;
            rest.reserve(idx.size() - 1);
            for (std::size_t t = 0; t < idx.size(); ++t)
                if (t != k) rest.push_back(idx[t]);
            LaurentPoly term = comp * c;
            out.add_term(rest, k % 2 == 1 ? -term : term);
        }
    }
    return out;
}

NumFormValue eval_at(const Form& a, const std::vector<std::complex<double>>& point) {
    NumFormValue out;
    for (const auto& [idx, c] : a.coeffs()) {
        std::complex<double> v = c.eval(point);
        if (v != std::complex<double>(0.0)) out[idx] = v;
    }
    return out;
}

std::map<MultiIndex, Scalar> eval_exact_at(const Form& a, const std::vector<Scalar>& point) {
    std::map<MultiIndex, Scalar> out;
    for (const auto& [idx, c] : a.coeffs()) {
        Scalar v = c.eval_exact(point);
        if (!v.is_zero()) out[idx] = v;
    }
    return out;
}

Form substitute(const Form& a, const std::vector<LaurentPoly>& coeff_images,
                const std::vector<Form>& d_images, int out_nvars) {
    Form out(out_nvars, a.degree());
    for (const auto& [idx, c] : a.coeffs()) {
        LaurentPoly cc = c.substitute_monomials(coeff_images, out_nvars);
        Form term = Form::monomial_form(out_nvars, {}, cc);
        for (int j : idx) term = wedge(term, d_images.at(j));
        out = out + term;
    }
    return out;
}

Form relabel(const Form& a, const std::vector<int>& perm, int out_nvars) {
    Form out(out_nvars, a.degree());
    for (const auto& [idx, c] : a.coeffs()) {
        MultiIndex mapped;
        mapped.reserve(idx.size());
        for (int j : idx) mapped.push_back(perm.at(j));
        // perm is monotone on each block in all our uses, but sort defensively
        MultiIndex sorted = mapped;
        std::sort(sorted.begin(), sorted.end());
        int sign = 1;
        // parity of the permutation taking mapped to sorted
        auto tmp = mapped;
        for (std::size_t i = 0; i < tmp.size(); ++i)
            for (std::size_t j = i + 1; j < tmp.size(); ++j)
                if (tmp[i] > tmp[j]) { std::swap(tmp[i], tmp[j]); sign = -sign; }
        LaurentPoly cc = c.relabel(perm, out_nvars);
        out.add_term(sorted, sign < 0 ? -cc : cc);
    }
    return out;
}

std::string Form::str(const std::vector<std::string>& var_names) const {
    if (coeffs_.empty()) return "0";
    std::vector<std::string> names = var_names.empty() ? default_var_names(nvars_) : var_names;
    std::ostringstream os;
    bool first = true;
    for (const auto& [idx, c] : coeffs_) {
        if (!first) os << "  ";
        first = false;
        os << "[";
        for (std::size_t k = 0; k < idx.size(); ++k) {
            if (k) os << ",";
            os << idx[k];
        }
        os << "] " << c.str(names);
    }
    return os.str();
}

Form parse_form(const std::string& text, int nvars, int degree,
                const std::vector<std::string>& var_names) {
    Form out(nvars, degree);
    if (text == "0") return out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t lb = text.find('[', pos);
        if (lb == std::string::npos) break;
        std::size_t rb = text.find(']', lb);
        if (rb == std::string::npos) throw std::invalid_argument("unterminated multi-index");
        MultiIndex idx;
        std::string inner = text.substr(lb + 1, rb - lb - 1);
        std::istringstream is(inner);
        std::string tok;
        while (std::getline(is, tok, ',')) if (!tok.empty()) idx.push_back(std::stoi(tok));
        std::size_t next = text.find("  [", rb);
        std::string body = text.substr(rb + 2, next == std::string::npos ? next : next - rb - 2);
        out.add_term(idx, parse_laurent(body, nvars, var_names));
        pos = next == std::string::npos ? text.size() : next + 2;
    }
    return out;
}

}  // namespace holoform
