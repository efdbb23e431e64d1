#include "holoform/scalar.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace holoform {

namespace {

std::string rational_str(const Rational& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << "/" << denominator(r);
    return os.str();
}

// Parses "p" or "p/q" starting at pos; advances pos past the rational.
Rational parse_rational_at(const std::string& s, std::size_t& pos) {
    bool neg = false;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        neg = s[pos] == '-';
        ++pos;
    }
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw std::invalid_argument("expected rational in '" + s + "'");
    Integer num(s.substr(start, pos - start));
    if (neg) num = -num;
    Integer den = 1;
    if (pos < s.size() && s[pos] == '/') {
        ++pos;
        std::size_t dstart = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == dstart) throw std::invalid_argument("expected denominator in '" + s + "'");
        den = Integer(s.substr(dstart, pos - dstart));
    }
    return Rational(num, den);
}

}  // namespace

std::string Scalar::str() const {
    if (is_zero()) return "0";
    std::string out;
    if (re != 0) out += rational_str(re);
    if (im != 0) {
        if (im > 0 && !out.empty()) out += "+";
        if (im == -1) out += "-";
        else if (im != 1) out += rational_str(im);
        out += "i";
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

Scalar parse_scalar(const std::string& text) {
    if (text == "0") return Scalar();
    std::size_t pos = 0;
    Rational re = 0, im = 0;
    // Up to two signed terms; a term ending in 'i' is imaginary.
    for (int term = 0; term < 2 && pos < text.size(); ++term) {
        Rational sign = 1;
        std::size_t peek = pos;
        if (text[peek] == '+' || text[peek] == '-') {
            if (text[peek] == '-') sign = -1;
            ++peek;
        }
        if (peek < text.size() && text[peek] == 'i') {  // bare "i" / "+i" / "-i"
            im += sign;
            pos = peek + 1;
            continue;
        }
        Rational mag = parse_rational_at(text, pos);  // consumes the sign itself
        if (pos < text.size() && text[pos] == 'i') {
            ++pos;
            im += mag;
        } else {
            re += mag;
        }
    }
    if (pos != text.size()) throw std::invalid_argument("trailing characters in scalar '" + text + "'");
    return Scalar(re, im);
}

}  // namespace holoform
