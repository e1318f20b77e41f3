#pragma once

#include "superkit/rational.hpp"

#include <complex>
#include <string>

namespace superkit {

/// Gaussian rational: re + im*i with exact rational parts.
struct ComplexScalar {
    Rational re{0};
    Rational im{0};

    ComplexScalar() = default;
    ComplexScalar(Rational r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
    ComplexScalar(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    ComplexScalar(long r, long i) : re(r), im(i) {}

    static ComplexScalar zero() { return {}; }
    static ComplexScalar one() { return {Rational(1)}; }
    static ComplexScalar i() { return {Rational(0), Rational(1)}; }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    ComplexScalar conj() const { return {re, -im}; }

    friend ComplexScalar operator+(const ComplexScalar& a, const ComplexScalar& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend ComplexScalar operator-(const ComplexScalar& a, const ComplexScalar& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend ComplexScalar operator-(const ComplexScalar& a) { return {-a.re, -a.im}; }
    friend ComplexScalar operator*(const ComplexScalar& a, const ComplexScalar& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend ComplexScalar operator/(const ComplexScalar& a, const ComplexScalar& b);

    ComplexScalar& operator+=(const ComplexScalar& o) { return *this = *this + o; }
    ComplexScalar& operator-=(const ComplexScalar& o) { return *this = *this - o; }
    ComplexScalar& operator*=(const ComplexScalar& o) { return *this = *this * o; }

    bool operator==(const ComplexScalar& o) const { return re == o.re && im == o.im; }
    bool operator!=(const ComplexScalar& o) const { return !(*this == o); }

    /// |z|^2 as an exact rational.
    Rational norm_sq() const { return re * re + im * im; }

    std::complex<double> to_complex() const { return {to_double(re), to_double(im)}; }

    /// Integer power (negative exponents require z != 0).
    ComplexScalar pow(long e) const;

    std::string str() const;
};

/// Parses "a", "bi", "a+bi", "a-bi" with rational a, b ("i" and "-i" allowed).
ComplexScalar parse_complex(const std::string& s);

}  // namespace superkit
