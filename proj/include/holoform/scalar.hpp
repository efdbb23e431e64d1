#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace holoform {

using Integer  = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Gaussian rational a + b*i with exact rational real and imaginary parts.
/// This is the coefficient field for all symbolic computations; floating
/// point appears only in numeric evaluation outputs.
struct Scalar {
    Rational re;
    Rational im;

    Scalar() = default;
    Scalar(long v) : re(v), im(0) {}
    Scalar(Rational r) : re(std::move(r)), im(0) {}
    Scalar(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static Scalar i() { return Scalar(Rational(0), Rational(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    Scalar conj() const { return Scalar(re, -im); }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        return Scalar(a.re + b.re, a.im + b.im);
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        return Scalar(a.re - b.re, a.im - b.im);
    }
    friend Scalar operator-(const Scalar& a) { return Scalar(-a.re, -a.im); }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        return Scalar(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        Rational n = b.re * b.re + b.im * b.im;  // nonzero unless b == 0
        return Scalar((a.re * b.re + a.im * b.im) / n,
                      (a.im * b.re - a.re * b.im) / n);
    }
    Scalar& operator+=(const Scalar& b) { *this = *this + b; return *this; }
    Scalar& operator-=(const Scalar& b) { *this = *this - b; return *this; }
    Scalar& operator*=(const Scalar& b) { *this = *this * b; return *this; }
    Scalar& operator/=(const Scalar& b) { *this = *this / b; return *this; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    std::complex<double> to_complex() const {
        return { static_cast<double>(re), static_cast<double>(im) };
    }

    /// Canonical rendering, e.g. "3/2", "-1", "i", "1/2-2i".
    std::string str() const;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Parses the canonical rendering produced by Scalar::str().
/// Throws std::invalid_argument on malformed input.
Scalar parse_scalar(const std::string& text);

}  // namespace holoform
