#pragma once

#include "superkit/complexq.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>

namespace superkit {

class CircleFn;

/// Invertible monomial coordinate change y = c * x^e with c != 0 and e = +/-1.
/// This is the class of reduced transition maps the library accepts; it is
/// closed under composition and inversion and pulls Laurent sums back to
/// Laurent sums.
struct MonomialMap {
    ComplexScalar coeff{ComplexScalar::one()};
    int exponent{1};

    MonomialMap() = default;
    MonomialMap(ComplexScalar c, int e);

    static MonomialMap identity() { return {}; }

    MonomialMap inverse() const;
    /// (g.compose(f))(x) = g(f(x)).
    MonomialMap compose(const MonomialMap& inner) const;

    bool operator==(const MonomialMap& o) const {
        return coeff == o.coeff && exponent == o.exponent;
    }
};

/// Finite Laurent sum  sum_{(m,n)} c_{mn} y^m ybar^n  with exact coefficients.
/// Zero coefficients are never stored.
class LaurentFn {
public:
    using Key = std::pair<long, long>;  // (m, n) exponents of y, ybar
    using Terms = std::map<Key, ComplexScalar>;

    LaurentFn() = default;
    LaurentFn(const ComplexScalar& c) {  // NOLINT(google-explicit-constructor)
        add_term(0, 0, c);
    }

    static LaurentFn zero() { return {}; }
    static LaurentFn one() { return LaurentFn(ComplexScalar::one()); }
    /// c * y^m * ybar^n
    static LaurentFn monomial(const ComplexScalar& c, long m, long n = 0) {
        LaurentFn u;
        u.add_term(m, n, c);
        return u;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// True when no ybar appears (all n = 0).
    bool is_holomorphic() const;
    /// Nonzero single-term functions are exactly the units of the Laurent ring.
    bool is_monomial() const { return terms_.size() == 1; }

    void add_term(long m, long n, const ComplexScalar& c);
    ComplexScalar coeff(long m, long n) const;

    friend LaurentFn operator+(const LaurentFn& a, const LaurentFn& b);
    friend LaurentFn operator-(const LaurentFn& a, const LaurentFn& b);
    friend LaurentFn operator-(const LaurentFn& a);
    friend LaurentFn operator*(const LaurentFn& a, const LaurentFn& b);
    LaurentFn& operator+=(const LaurentFn& o) { return *this = *this + o; }
    LaurentFn& operator-=(const LaurentFn& o) { return *this = *this - o; }
    LaurentFn& operator*=(const LaurentFn& o) { return *this = *this * o; }
    bool operator==(const LaurentFn& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentFn& o) const { return !(*this == o); }

    LaurentFn scaled(const ComplexScalar& c) const;

    /// conj: swaps y <-> ybar and conjugates coefficients. An involution.
    LaurentFn conj() const;

    enum class Var { Y, YBar };
    /// Wirtinger derivative d/dy or d/dybar.
    LaurentFn diff(Var which) const;

    /// Substitution y -> map(x), ybar -> conj(map)(xbar). A ring homomorphism.
    LaurentFn pullback(const MonomialMap& map) const;

    /// Division by a unit (single-term) Laurent function.
    LaurentFn div_by_monomial(const LaurentFn& unit) const;

    /// Restriction to |y| = 1: y = e^{i phi}, ybar = e^{-i phi}.
    CircleFn restrict_to_circle() const;

    /// Real/imaginary part as functions: u = re(u) + i*im(u) with both parts
    /// conj-invariant.
    LaurentFn real_part() const;
    LaurentFn imag_part() const;

    /// Evaluate at an exact point (y0 with ybar0 = conj given separately).
    ComplexScalar eval(const ComplexScalar& y0, const ComplexScalar& ybar0) const;

    /// Largest coefficient magnitude, as a double (0 for the zero function).
    double max_coeff_abs() const;

    std::string str() const;

private:
    Terms terms_;
};

}  // namespace superkit
