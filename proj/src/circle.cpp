#include "superkit/circle.hpp"

#include <cmath>
#include <sstream>

namespace superkit {

CircleFn CircleFn::cos_n(long n) {
    // cos n*phi = (e^{in phi} + e^{-in phi}) / 2
    CircleFn u;
    ComplexScalar half{Rational(1, 2)};
    u.add_term(n, half);
    u.add_term(-n, half);
    return u;
}

CircleFn CircleFn::sin_n(long n) {
    // sin n*phi = (e^{in phi} - e^{-in phi}) / 2i
    CircleFn u;
    ComplexScalar c = ComplexScalar(Rational(1, 2)) / ComplexScalar::i();
    u.add_term(n, c);
    u.add_term(-n, -c);
    return u;
}

void CircleFn::add_term(long k, const ComplexScalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ComplexScalar CircleFn::coeff(long k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? ComplexScalar::zero() : it->second;
}

CircleFn operator+(const CircleFn& a, const CircleFn& b) {
    CircleFn r = a;
    for (const auto& [k, c] : b.terms_) r.add_term(k, c);
    return r;
}

CircleFn operator-(const CircleFn& a, const CircleFn& b) {
    CircleFn r = a;
    for (const auto& [k, c] : b.terms_) r.add_term(k, -c);
    return r;
}

CircleFn operator-(const CircleFn& a) {
    CircleFn r;
    for (const auto& [k, c] : a.terms_) r.add_term(k, -c);
    return r;
}

CircleFn operator*(const CircleFn& a, const CircleFn& b) {
    CircleFn r;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) r.add_term(ka + kb, ca * cb);
    return r;
}

CircleFn CircleFn::scaled(const ComplexScalar& c) const {
    CircleFn r;
    for (const auto& [k, v] : terms_) r.add_term(k, v * c);
    return r;
}

CircleFn CircleFn::conj() const {
    CircleFn r;
    for (const auto& [k, v] : terms_) r.add_term(-k, v.conj());
    return r;
}

CircleFn CircleFn::d_phi() const {
    CircleFn r;
    for (const auto& [k, v] : terms_)
        r.add_term(k, v * ComplexScalar(Rational(0), Rational(k)));
    return r;
}

CircleFn CircleFn::real_part() const {
    return (*this + conj()).scaled(ComplexScalar(Rational(1, 2)));
}

CircleFn CircleFn::imag_part() const {
    ComplexScalar c = ComplexScalar(Rational(1, 2)) / ComplexScalar::i();
    return (*this - conj()).scaled(c);
}

ComplexScalar CircleFn::eval_at_unit(const ComplexScalar& z0) const {
    ComplexScalar acc;
    for (const auto& [k, v] : terms_) acc += v * z0.pow(k);
    return acc;
}

std::complex<double> CircleFn::eval(double phi) const {
    std::complex<double> acc{0.0, 0.0};
    for (const auto& [k, v] : terms_) {
        std::complex<double> rot{std::cos(k * phi), std::sin(k * phi)};
        acc += v.to_complex() * rot;
    }
    return acc;
}

double CircleFn::max_coeff_abs() const {
    double best = 0.0;
    for (const auto& [k, v] : terms_) best = std::max(best, std::abs(v.to_complex()));
    return best;
}

std::string CircleFn::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << v.str() << ")";
        if (k != 0) os << "*e^(" << k << "i phi)";
    }
    return os.str();
}

}  // namespace superkit
