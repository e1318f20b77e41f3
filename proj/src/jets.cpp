#include "superkit/jets.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace superkit {

const char* field_name_str(FieldName f) {
    switch (f) {
        case FieldName::Phi: return "phi";
        case FieldName::Psi1: return "psi1";
        case FieldName::Psi2: return "psi2";
        case FieldName::F: return "F";
    }
    return "?";
}

std::string JetSymbol::str() const {
    std::string s = field_name_str(field);
    if (bar) s += "_bar";
    for (int i = 0; i < order; ++i) s += "'";
    return s;
}

void JetPolynomial::add_term(JetMonomial mono, const CircleFn& c) {
    if (c.is_zero()) return;
    std::sort(mono.begin(), mono.end());
    auto it = terms_.find(mono);
    if (it == terms_.end()) {
        terms_.emplace(std::move(mono), c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

JetPolynomial operator+(const JetPolynomial& a, const JetPolynomial& b) {
    JetPolynomial r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
}

JetPolynomial operator-(const JetPolynomial& a, const JetPolynomial& b) {
    JetPolynomial r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
    return r;
}

JetPolynomial operator-(const JetPolynomial& a) {
    JetPolynomial r;
    for (const auto& [m, c] : a.terms_) r.add_term(m, -c);
    return r;
}

JetPolynomial operator*(const JetPolynomial& a, const JetPolynomial& b) {
    JetPolynomial r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            JetMonomial m = ma;
            m.insert(m.end(), mb.begin(), mb.end());
            r.add_term(std::move(m), ca * cb);
        }
    return r;
}

JetPolynomial JetPolynomial::times_fn(const CircleFn& c) const {
    JetPolynomial r;
    for (const auto& [m, v] : terms_) r.add_term(m, v * c);
    return r;
}

JetPolynomial JetPolynomial::scaled(const ComplexScalar& c) const {
    JetPolynomial r;
    for (const auto& [m, v] : terms_) r.add_term(m, v.scaled(c));
    return r;
}

int JetPolynomial::max_order() const {
    int best = 0;
    for (const auto& [m, v] : terms_)
        for (const auto& s : m) best = std::max(best, s.order);
    return best;
}

JetPolynomial JetPolynomial::partial(const JetSymbol& s) const {
    JetPolynomial r;
    for (const auto& [m, c] : terms_) {
        long count = static_cast<long>(std::count(m.begin(), m.end(), s));
        if (count == 0) continue;
        JetMonomial reduced = m;
        reduced.erase(std::find(reduced.begin(), reduced.end(), s));
        r.add_term(std::move(reduced), c.scaled(ComplexScalar(Rational(count))));
    }
    return r;
}

JetPolynomial JetPolynomial::total_derivative() const {
    JetPolynomial r;
    for (const auto& [m, c] : terms_) {
        r.add_term(m, c.d_phi());
        for (size_t i = 0; i < m.size(); ++i) {
            JetMonomial bumped = m;
            bumped[i].order += 1;
            r.add_term(std::move(bumped), c);
        }
    }
    return r;
}

std::string JetPolynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "[" << c.str() << "]";
        for (const auto& s : m) os << "*" << s.str();
    }
    return os.str();
}

const CircleFn& CircleField::component(FieldName f) const {
    switch (f) {
        case FieldName::Phi: return phi;
        case FieldName::Psi1: return psi1;
        case FieldName::Psi2: return psi2;
        case FieldName::F: return F;
    }
    throw std::logic_error("bad field name");
}

CircleFn CircleField::symbol_value(const JetSymbol& s) const {
    CircleFn v = component(s.field);
    if (s.bar) v = v.conj();
    for (int i = 0; i < s.order; ++i) v = v.d_phi();
    return v;
}

CircleFn evaluate(const JetPolynomial& p, const CircleField& f) {
    CircleFn acc;
    for (const auto& [m, c] : p.terms()) {
        CircleFn term = c;
        for (const auto& s : m) term *= f.symbol_value(s);
        acc += term;
    }
    return acc;
}

std::string VarKey::str() const {
    std::string s = "delta ";
    s += field_name_str(field);
    if (bar) s += "_bar";
    return s;
}

bool VariationForm::is_zero() const {
    for (const auto& [k, p] : coeffs)
        if (!p.is_zero()) return false;
    return true;
}

void VariationForm::add(const VarKey& k, const JetPolynomial& p) {
    auto it = coeffs.find(k);
    if (it == coeffs.end()) {
        if (!p.is_zero()) coeffs.emplace(k, p);
        return;
    }
    it->second += p;
    if (it->second.is_zero()) coeffs.erase(it);
}

VariationForm VariationForm::operator+(const VariationForm& o) const {
    VariationForm r = *this;
    for (const auto& [k, p] : o.coeffs) r.add(k, p);
    return r;
}

VariationForm VariationForm::operator-(const VariationForm& o) const {
    VariationForm r = *this;
    for (const auto& [k, p] : o.coeffs) r.add(k, -p);
    return r;
}

VariationForm VariationForm::times_fn(const CircleFn& c) const {
    VariationForm r;
    for (const auto& [k, p] : coeffs) r.add(k, p.times_fn(c));
    return r;
}

VariationForm VariationForm::scaled(const ComplexScalar& c) const {
    VariationForm r;
    for (const auto& [k, p] : coeffs) r.add(k, p.scaled(c));
    return r;
}

VariationForm euler_lagrange_variation(const JetPolynomial& p) {
    if (p.max_order() >= 2)
        throw std::invalid_argument("euler_lagrange_variation expects a first-order integrand");
    VariationForm v;
    for (int fi = 0; fi < 4; ++fi)
        for (int barI = 0; barI < 2; ++barI) {
            FieldName f = static_cast<FieldName>(fi);
            bool bar = barI == 1;
            JetPolynomial coeff = p.partial(JetSymbol{f, bar, 0}) -
                                  p.partial(JetSymbol{f, bar, 1}).total_derivative();
            v.add(VarKey{f, bar}, coeff);
        }
    return v;
}

Reality parse_reality(const std::string& s) {
    if (s == "real") return Reality::Real;
    if (s == "imaginary" || s == "imag") return Reality::Imaginary;
    if (s == "zero") return Reality::Zero;
    if (s == "free") return Reality::Free;
    throw std::invalid_argument("unknown reality tag '" + s + "'");
}

const char* reality_str(Reality r) {
    switch (r) {
        case Reality::Real: return "real";
        case Reality::Imaginary: return "imaginary";
        case Reality::Zero: return "zero";
        case Reality::Free: return "free";
    }
    return "?";
}

JetPolynomial substitute_reality(const JetPolynomial& p, const RealityAssignment& r) {
    JetPolynomial out;
    for (const auto& [m, c] : p.terms()) {
        bool dead = false;
        int sign = 1;
        JetMonomial mono;
        mono.reserve(m.size());
        for (const auto& s : m) {
            switch (r[s.field]) {
                case Reality::Zero: dead = true; break;
                case Reality::Real: mono.push_back({s.field, false, s.order}); break;
                case Reality::Imaginary:
                    if (s.bar) sign = -sign;
                    mono.push_back({s.field, false, s.order});
                    break;
                case Reality::Free: mono.push_back(s); break;
            }
            if (dead) break;
        }
        if (dead) continue;
        out.add_term(std::move(mono), sign < 0 ? -c : c);
    }
    return out;
}

ConstraintResult vanishing_under_constraints(const VariationForm& v, const RealityAssignment& r) {
    ConstraintResult res;
    for (const auto& [k, p] : v.coeffs) {
        JetPolynomial coeff = substitute_reality(p, r);
        switch (r[k.field]) {
            case Reality::Zero: continue;  // variation killed
            case Reality::Real: res.residual.add(VarKey{k.field, false}, coeff); break;
            case Reality::Imaginary:
                res.residual.add(VarKey{k.field, false}, k.bar ? -coeff : coeff);
                break;
            case Reality::Free: res.residual.add(k, coeff); break;
        }
    }
    res.vanishes = res.residual.is_zero();
    return res;
}

std::map<VarKey, CircleFn> evaluate(const VariationForm& v, const CircleField& f) {
    std::map<VarKey, CircleFn> out;
    for (const auto& [k, p] : v.coeffs) {
        CircleFn val = evaluate(p, f);
        if (!val.is_zero()) out[k] = val;
    }
    return out;
}

bool satisfies(const CircleField& f, const RealityAssignment& r) {
    for (int fi = 0; fi < 4; ++fi) {
        FieldName name = static_cast<FieldName>(fi);
        const CircleFn& v = f.component(name);
        switch (r[name]) {
            case Reality::Real:
                if (!v.is_real()) return false;
                break;
            case Reality::Imaginary:
                if (!v.is_imaginary()) return false;
                break;
            case Reality::Zero:
                if (!v.is_zero()) return false;
                break;
            case Reality::Free: break;
        }
    }
    return true;
}

}  // namespace superkit
