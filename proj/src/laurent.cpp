#include "holoform/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace holoform {

LaurentPoly LaurentPoly::constant(int nvars, Scalar c) {
    LaurentPoly p(nvars);
    p.add_term(ExpVec(nvars, 0), c);
    return p;
}

LaurentPoly LaurentPoly::monomial(int nvars, ExpVec exps, Scalar c) {
    if (static_cast<int>(exps.size()) != nvars)
        throw std::invalid_argument("monomial: exponent vector length mismatch");
    LaurentPoly p(nvars);
    p.add_term(exps, c);
    return p;
}

LaurentPoly LaurentPoly::variable(int nvars, int var, int power) {
    ExpVec e(nvars, 0);
    e.at(var) = power;
    return monomial(nvars, e, Scalar(1));
}

bool LaurentPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    const ExpVec& e = terms_.begin()->first;
    for (int x : e)
        if (x != 0) return false;
    return true;
}

bool LaurentPoly::is_polynomial() const {
    for (const auto& [e, c] : terms_)
        for (int x : e)
            if (x < 0) return false;
    return true;
}

std::optional<Scalar> LaurentPoly::constant_value() const {
    if (!is_constant()) return std::nullopt;
    if (terms_.empty()) return Scalar();
    return terms_.begin()->second;
}

LaurentPoly& LaurentPoly::add_term(const ExpVec& exps, const Scalar& c) {
    if (c.is_zero()) return *this;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(exps, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
    return *this;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, c);
    return out;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, -c);
    return out;
}

LaurentPoly operator-(const LaurentPoly& a) {
    LaurentPoly out(a.nvars_);
    for (const auto& [e, c] : a.terms_) out.terms_.emplace(e, -c);
    return out;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            ExpVec e(ea);
            for (std::size_t j = 0; j < e.size(); ++j) e[j] += eb[j];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

LaurentPoly operator*(const Scalar& c, const LaurentPoly& a) {
    LaurentPoly out(a.nvars_);
    for (const auto& [e, t] : a.terms_) out.add_term(e, c * t);
    return out;
}

LaurentPoly LaurentPoly::derivative(int var) const {
    LaurentPoly out(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        ExpVec d(e);
        d[var] -= 1;
        out.add_term(d, Scalar(Rational(e[var])) * c);
    }
    return out;
}

LaurentPoly LaurentPoly::substitute_monomials(const std::vector<LaurentPoly>& images,
                                              int out_nvars) const {
    LaurentPoly out(out_nvars);
    for (const auto& [e, c] : terms_) {
        ExpVec acc(out_nvars, 0);
        Scalar coef = c;
        for (int j = 0; j < nvars_; ++j) {
            if (e[j] == 0) continue;
            const auto& img = images.at(j).terms();
            if (img.size() != 1)
                throw std::invalid_argument("substitute_monomials: image is not a monomial");
            const auto& [ie, ic] = *img.begin();
            for (int k = 0; k < out_nvars; ++k) acc[k] += ie[k] * e[j];
            // integer powers of the image coefficient
            Scalar pw(1);
            int n = e[j] < 0 ? -e[j] : e[j];
            for (int t = 0; t < n; ++t) pw *= ic;
            coef = e[j] < 0 ? coef / pw : coef * pw;
        }
        out.add_term(acc, coef);
    }
    return out;
}

LaurentPoly LaurentPoly::relabel(const std::vector<int>& perm, int out_nvars) const {
    LaurentPoly out(out_nvars);
    for (const auto& [e, c] : terms_) {
        ExpVec d(out_nvars, 0);
        for (int j = 0; j < nvars_; ++j) d.at(perm[j]) = e[j];
        out.add_term(d, c);
    }
    return out;
}

std::complex<double> LaurentPoly::eval(const std::vector<std::complex<double>>& point) const {
    std::complex<double> out = 0.0;
    for (const auto& [e, c] : terms_) {
        std::complex<double> v = c.to_complex();
        for (int j = 0; j < nvars_; ++j) {
            if (e[j] == 0) continue;
            if (e[j] < 0 && point[j] == std::complex<double>(0.0))
                throw PoleError("pole: variable " + std::to_string(j) +
                                " is zero with negative exponent");
            v *= std::pow(point[j], e[j]);
        }
        out += v;
    }
    return out;
}

Scalar LaurentPoly::eval_exact(const std::vector<Scalar>& point) const {
    Scalar out;
    for (const auto& [e, c] : terms_) {
        Scalar v = c;
        for (int j = 0; j < nvars_; ++j) {
            int n = e[j] < 0 ? -e[j] : e[j];
            if (n == 0) continue;
            if (e[j] < 0 && point[j].is_zero())
                throw PoleError("pole: variable " + std::to_string(j) +
                                " is zero with negative exponent");
            Scalar pw(1);
            for (int t = 0; t < n; ++t) pw *= point[j];
            v = e[j] < 0 ? v / pw : v * pw;
        }
        out += v;
    }
    return out;
}

std::vector<std::string> default_var_names(int nvars) {
    std::vector<std::string> names;
    names.reserve(nvars);
    for (int j = 0; j < nvars; ++j) names.push_back("z" + std::to_string(j));
    return names;
}

std::string LaurentPoly::str(const std::vector<std::string>& var_names) const {
    if (terms_.empty()) return "0";
    std::vector<std::string> names = var_names.empty() ? default_var_names(nvars_) : var_names;
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::string cs = c.str();
        bool wrap = !c.is_real() || (c.re != 0 && c.im != 0);
        if (!first) os << " + ";
        first = false;
        if (wrap) os << "(" << cs << ")";
        else os << cs;
        for (int j = 0; j < nvars_; ++j) {
            if (e[j] == 0) continue;
            os << "*" << names[j];
            if (e[j] != 1) os << "^" << e[j];
        }
    }
    return os.str();
}

LaurentPoly parse_laurent(const std::string& text, int nvars,
                          const std::vector<std::string>& var_names) {
    std::vector<std::string> names = var_names.empty() ? default_var_names(nvars) : var_names;
    LaurentPoly out(nvars);
    if (text == "0") return out;
    // Split on " + " (the canonical separator).
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t next = text.find(" + ", pos);
        std::string term = text.substr(pos, next == std::string::npos ? next : next - pos);
        pos = next == std::string::npos ? text.size() : next + 3;
        // term: coeff[*name[^exp]]*...
        std::size_t star = term.find('*');
        std::string cs = term.substr(0, star);
        Scalar c;
        if (cs.size() >= 2 && cs.front() == '(' && cs.back() == ')')
            c = parse_scalar(cs.substr(1, cs.size() - 2));
        else
            c = parse_scalar(cs);
        ExpVec e(nvars, 0);
        while (star != std::string::npos) {
            std::size_t vstart = star + 1;
            std::size_t vend = term.find_first_of("*^", vstart);
            std::string vn = term.substr(vstart, vend == std::string::npos ? vend : vend - vstart);
            int exp = 1;
            if (vend != std::string::npos && term[vend] == '^') {
                std::size_t estart = vend + 1;
                std::size_t eend = term.find('*', estart);
                exp = std::stoi(term.substr(estart, eend == std::string::npos ? eend : eend - estart));
                star = eend;
            } else {
                star = vend;
            }
            int idx = -1;
            for (int j = 0; j < nvars; ++j)
                if (names[j] == vn) { idx = j; break; }
            if (idx < 0) throw std::invalid_argument("unknown variable '" + vn + "'");
            e[idx] += exp;
        }
        out.add_term(e, c);
    }
    return out;
}

}  // namespace holoform
