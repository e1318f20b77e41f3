#pragma once

#include "superkit/circle.hpp"
#include "superkit/laurent.hpp"

#include <array>
#include <compare>
#include <map>
#include <string>
#include <vector>

namespace superkit {

enum class FieldName : int { Phi = 0, Psi1 = 1, Psi2 = 2, F = 3 };

const char* field_name_str(FieldName f);

/// One jet symbol: a component field, possibly conjugated, with 0, 1 or 2
/// phi-derivatives applied.
struct JetSymbol {
    FieldName field;
    bool bar = false;
    int order = 0;

    auto operator<=>(const JetSymbol&) const = default;
    std::string str() const;
};

/// Commutative product of jet symbols, kept sorted.
using JetMonomial = std::vector<JetSymbol>;

/// Polynomial in jet symbols with circle-function coefficients. The component
/// fields commute, so monomials are plain multisets.
class JetPolynomial {
public:
    using Terms = std::map<JetMonomial, CircleFn>;

    JetPolynomial() = default;
    JetPolynomial(const CircleFn& c) { add_term({}, c); }  // NOLINT

    static JetPolynomial symbol(FieldName f, bool bar, int order = 0) {
        JetPolynomial p;
        p.add_term({JetSymbol{f, bar, order}}, CircleFn::one());
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(JetMonomial mono, const CircleFn& c);

    friend JetPolynomial operator+(const JetPolynomial& a, const JetPolynomial& b);
    friend JetPolynomial operator-(const JetPolynomial& a, const JetPolynomial& b);
    friend JetPolynomial operator-(const JetPolynomial& a);
    friend JetPolynomial operator*(const JetPolynomial& a, const JetPolynomial& b);
    JetPolynomial& operator+=(const JetPolynomial& o) { return *this = *this + o; }
    JetPolynomial& operator-=(const JetPolynomial& o) { return *this = *this - o; }
    bool operator==(const JetPolynomial& o) const { return terms_ == o.terms_; }

    JetPolynomial times_fn(const CircleFn& c) const;
    JetPolynomial scaled(const ComplexScalar& c) const;

    int max_order() const;

    /// Formal partial derivative with respect to one symbol.
    JetPolynomial partial(const JetSymbol& s) const;

    /// Total derivative d/dphi: hits coefficients and raises jet orders.
    JetPolynomial total_derivative() const;

    std::string str() const;

private:
    Terms terms_;
};

/// Circle restrictions of the components of a field on one chart.
struct CircleField {
    CircleFn phi, psi1, psi2, F;

    const CircleFn& component(FieldName f) const;
    CircleFn symbol_value(const JetSymbol& s) const;
};

CircleFn evaluate(const JetPolynomial& p, const CircleField& f);

// --- variations ----------------------------------------------------------------

/// Variation direction delta f or delta fbar.
struct VarKey {
    FieldName field;
    bool bar = false;
    auto operator<=>(const VarKey&) const = default;
    std::string str() const;
};

/// First variation: sum over keys of coefficient * delta(key), derivatives of
/// variations already removed by parts.
struct VariationForm {
    std::map<VarKey, JetPolynomial> coeffs;

    bool is_zero() const;
    VariationForm operator+(const VariationForm& o) const;
    VariationForm operator-(const VariationForm& o) const;
    VariationForm times_fn(const CircleFn& c) const;
    VariationForm scaled(const ComplexScalar& c) const;
    void add(const VarKey& k, const JetPolynomial& p);
};

/// delta P / delta f = dP/df - D(dP/df') for every field and its conjugate,
/// treated as independent. Rejects P of jet order >= 2.
VariationForm euler_lagrange_variation(const JetPolynomial& p);

enum class Reality { Real, Imaginary, Zero, Free };

Reality parse_reality(const std::string& s);
const char* reality_str(Reality r);

/// Per-field reality constraints. Real identifies fbar with f (and the
/// variations likewise), Imaginary with the negation, Zero kills both.
struct RealityAssignment {
    std::array<Reality, 4> of{Reality::Free, Reality::Free, Reality::Free, Reality::Free};

    Reality operator[](FieldName f) const { return of[static_cast<int>(f)]; }
    Reality& operator[](FieldName f) { return of[static_cast<int>(f)]; }
};

JetPolynomial substitute_reality(const JetPolynomial& p, const RealityAssignment& r);

struct ConstraintResult {
    bool vanishes = false;
    VariationForm residual;
};

/// Imposes the identifications on both coefficients and variation symbols and
/// collects the independent variations that remain.
ConstraintResult vanishing_under_constraints(const VariationForm& v, const RealityAssignment& r);

/// Evaluate the (constrained) coefficients at a concrete field.
std::map<VarKey, CircleFn> evaluate(const VariationForm& v, const CircleField& f);

/// True when the concrete components satisfy the declared constraints.
bool satisfies(const CircleField& f, const RealityAssignment& r);

}  // namespace superkit
