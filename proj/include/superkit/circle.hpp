#pragma once

#include "superkit/complexq.hpp"

#include <map>
#include <optional>
#include <string>

namespace superkit {

/// Finite Fourier sum  sum_k c_k e^{i k phi}  with exact coefficients.
class CircleFn {
public:
    using Terms = std::map<long, ComplexScalar>;

    CircleFn() = default;
    CircleFn(const ComplexScalar& c) {  // NOLINT(google-explicit-constructor)
        add_term(0, c);
    }

    static CircleFn zero() { return {}; }
    static CircleFn one() { return CircleFn(ComplexScalar::one()); }
    /// c * e^{i k phi}
    static CircleFn harmonic(const ComplexScalar& c, long k) {
        CircleFn u;
        u.add_term(k, c);
        return u;
    }
    static CircleFn cos_n(long n);
    static CircleFn sin_n(long n);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(long k, const ComplexScalar& c);
    ComplexScalar coeff(long k) const;

    friend CircleFn operator+(const CircleFn& a, const CircleFn& b);
    friend CircleFn operator-(const CircleFn& a, const CircleFn& b);
    friend CircleFn operator-(const CircleFn& a);
    friend CircleFn operator*(const CircleFn& a, const CircleFn& b);
    CircleFn& operator+=(const CircleFn& o) { return *this = *this + o; }
    CircleFn& operator-=(const CircleFn& o) { return *this = *this - o; }
    CircleFn& operator*=(const CircleFn& o) { return *this = *this * o; }
    bool operator==(const CircleFn& o) const { return terms_ == o.terms_; }
    bool operator!=(const CircleFn& o) const { return !(*this == o); }

    CircleFn scaled(const ComplexScalar& c) const;

    /// conj: k -> -k with conjugated coefficients.
    CircleFn conj() const;
    bool is_real() const { return conj() == *this; }
    bool is_imaginary() const { return conj() == -*this; }

    /// d/dphi: e^{ik phi} -> ik e^{ik phi}.
    CircleFn d_phi() const;

    CircleFn real_part() const;
    CircleFn imag_part() const;

    /// Mean value over the circle: (1/2pi) * integral = constant coefficient.
    ComplexScalar mean() const { return coeff(0); }

    /// Evaluate at phi with z0 = e^{i phi0} an exact unit Gaussian rational.
    ComplexScalar eval_at_unit(const ComplexScalar& z0) const;

    /// Numerical evaluation at an arbitrary angle.
    std::complex<double> eval(double phi) const;

    double max_coeff_abs() const;

    std::string str() const;

private:
    Terms terms_;
};

}  // namespace superkit
