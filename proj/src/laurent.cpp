#include "superkit/laurent.hpp"

#include "superkit/circle.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace superkit {

MonomialMap::MonomialMap(ComplexScalar c, int e) : coeff(std::move(c)), exponent(e) {
    if (coeff.is_zero()) throw std::invalid_argument("monomial map needs a nonzero coefficient");
    if (e != 1 && e != -1)
        throw std::invalid_argument("monomial map exponent must be +1 or -1");
}

MonomialMap MonomialMap::inverse() const {
    // y = c x   -> x = (1/c) y;   y = c x^{-1} -> x = c y^{-1}
    if (exponent == 1) return {ComplexScalar::one() / coeff, 1};
    return {coeff, -1};
}

MonomialMap MonomialMap::compose(const MonomialMap& inner) const {
    return {coeff * inner.coeff.pow(exponent), exponent * inner.exponent};
}

bool LaurentFn::is_holomorphic() const {
    for (const auto& [key, c] : terms_)
        if (key.second != 0) return false;
    return true;
}

void LaurentFn::add_term(long m, long n, const ComplexScalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find({m, n});
    if (it == terms_.end()) {
        terms_.emplace(Key{m, n}, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ComplexScalar LaurentFn::coeff(long m, long n) const {
    auto it = terms_.find({m, n});
    return it == terms_.end() ? ComplexScalar::zero() : it->second;
}

LaurentFn operator+(const LaurentFn& a, const LaurentFn& b) {
    LaurentFn r = a;
    for (const auto& [k, c] : b.terms_) r.add_term(k.first, k.second, c);
    return r;
}

LaurentFn operator-(const LaurentFn& a, const LaurentFn& b) {
    LaurentFn r = a;
    for (const auto& [k, c] : b.terms_) r.add_term(k.first, k.second, -c);
    return r;
}

LaurentFn operator-(const LaurentFn& a) {
    LaurentFn r;
    for (const auto& [k, c] : a.terms_) r.add_term(k.first, k.second, -c);
    return r;
}

LaurentFn operator*(const LaurentFn& a, const LaurentFn& b) {
    LaurentFn r;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_)
            r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
}

LaurentFn LaurentFn::scaled(const ComplexScalar& c) const {
    LaurentFn r;
    for (const auto& [k, v] : terms_) r.add_term(k.first, k.second, v * c);
    return r;
}

LaurentFn LaurentFn::conj() const {
    LaurentFn r;
    for (const auto& [k, v] : terms_) r.add_term(k.second, k.first, v.conj());
    return r;
}

LaurentFn LaurentFn::diff(Var which) const {
    LaurentFn r;
    for (const auto& [k, v] : terms_) {
        if (which == Var::Y) {
            r.add_term(k.first - 1, k.second, v * ComplexScalar(Rational(k.first)));
        } else {
            r.add_term(k.first, k.second - 1, v * ComplexScalar(Rational(k.second)));
        }
    }
    return r;
}

LaurentFn LaurentFn::pullback(const MonomialMap& map) const {
    LaurentFn r;
    const ComplexScalar cbar = map.coeff.conj();
    for (const auto& [k, v] : terms_) {
        ComplexScalar c = v * map.coeff.pow(k.first) * cbar.pow(k.second);
        r.add_term(map.exponent * k.first, map.exponent * k.second, c);
    }
    return r;
}

LaurentFn LaurentFn::div_by_monomial(const LaurentFn& unit) const {
    if (!unit.is_monomial())
        throw std::domain_error("divisor is not a unit of the Laurent ring");
    const auto& [key, c] = *unit.terms().begin();
    LaurentFn r;
    for (const auto& [k, v] : terms_)
        r.add_term(k.first - key.first, k.second - key.second, v / c);
    return r;
}

CircleFn LaurentFn::restrict_to_circle() const {
    CircleFn r;
    for (const auto& [k, v] : terms_) r.add_term(k.first - k.second, v);
    return r;
}

LaurentFn LaurentFn::real_part() const {
    LaurentFn half = (*this + conj());
    ComplexScalar c(Rational(1, 2));
    return half.scaled(c);
}

LaurentFn LaurentFn::imag_part() const {
    LaurentFn diff = (*this - conj());
    ComplexScalar c = ComplexScalar(Rational(1, 2)) / ComplexScalar::i();
    return diff.scaled(c);
}

ComplexScalar LaurentFn::eval(const ComplexScalar& y0, const ComplexScalar& ybar0) const {
    ComplexScalar acc;
    for (const auto& [k, v] : terms_) acc += v * y0.pow(k.first) * ybar0.pow(k.second);
    return acc;
}

double LaurentFn::max_coeff_abs() const {
    double best = 0.0;
    for (const auto& [k, v] : terms_) best = std::max(best, std::abs(v.to_complex()));
    return best;
}

std::string LaurentFn::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << v.str() << ")";
        if (k.first != 0) os << "*y^" << k.first;
        if (k.second != 0) os << "*yb^" << k.second;
    }
    return os.str();
}

}  // namespace superkit
