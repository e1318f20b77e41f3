#include "superkit/paper_forms.hpp"

namespace superkit::paper {

namespace {
const ComplexScalar kI = ComplexScalar::i();
const ComplexScalar kTwo{Rational(2)};

JetPolynomial sym(FieldName f, bool bar, int ord = 0) {
    return JetPolynomial::symbol(f, bar, ord);
}
}  // namespace

CircleFn sinh_i(long n) { return CircleFn::sin_n(n).scaled(kI); }
CircleFn cosh_i(long n) { return CircleFn::cos_n(n); }

G2L eq41(const SplitModelSpec& spec, int a) { return printed_cocycle_form(spec, a); }

G2L eq43(const SplitModelSpec& spec) {
    ComplexScalar pref = spec.lambda1 * spec.lambda2.conj();
    G2L g;
    g.c0 = LaurentFn::monomial(pref, spec.k1, spec.k2);
    LaurentFn soul;
    soul.add_term(spec.k1, spec.k2 - 1, pref * ComplexScalar(Rational(spec.k2)));
    soul.add_term(spec.k1 - 1, spec.k2, -(pref * ComplexScalar(Rational(spec.k1))));
    g.c12 = soul;
    return g;
}

GrassmannElement<CircleFn> eq44(const SplitModelSpec& spec) {
    ComplexScalar pref = spec.lambda1 * spec.lambda2.conj();
    GrassmannElement<CircleFn> g;
    g.c0 = CircleFn(pref);
    g.c12 = CircleFn::sin_n(1).scaled(-(kTwo * kI) * pref);
    return g;
}

CircleFn eq45_R0(long k1) { return CircleFn::cos_n(2 * (k1 - 1)); }

CircleFn eq45_R12(long k1) {
    long kt = k1 - 1;
    CircleFn inner = CircleFn::cos_n(1) * CircleFn::cos_n(2 * kt).scaled(ComplexScalar(Rational(kt))) -
                     CircleFn::sin_n(1) * CircleFn::sin_n(2 * kt);
    return inner.scaled(-kTwo);
}

CircleFn eq46_I0(long k1) { return CircleFn::sin_n(2 * (k1 - 1)); }

CircleFn eq46_I12(long k1) {
    long kt = k1 - 1;
    CircleFn inner = CircleFn::cos_n(1) * CircleFn::sin_n(2 * kt).scaled(ComplexScalar(Rational(kt))) +
                     CircleFn::sin_n(1) * CircleFn::cos_n(2 * kt);
    return inner.scaled(-kTwo);
}

JetPolynomial eps_ell_displayed() {
    return sym(FieldName::Psi1, false) * sym(FieldName::Psi2, true) -
           sym(FieldName::Psi1, true) * sym(FieldName::Psi2, false);
}

JetPolynomial eps_m_displayed() {
    return sym(FieldName::Psi1, false) * sym(FieldName::Psi2, true) +
           sym(FieldName::Psi1, true) * sym(FieldName::Psi2, false);
}

JetPolynomial m_top_displayed() {
    JetPolynomial psi_part = sym(FieldName::Psi2, true) * sym(FieldName::Psi1, false, 1) -
                             sym(FieldName::Psi1, true) * sym(FieldName::Psi2, false, 1) +
                             sym(FieldName::Psi2, false) * sym(FieldName::Psi1, true, 1) -
                             sym(FieldName::Psi1, false) * sym(FieldName::Psi2, true, 1);
    JetPolynomial f_part = sym(FieldName::F, false) * sym(FieldName::Phi, true, 1) -
                           sym(FieldName::Phi, false, 1) * sym(FieldName::F, true);
    return psi_part.scaled(ComplexScalar(Rational(1, 2))) + f_part;
}

VariationForm weighted_variation(const CircleFn& r12, const CircleFn& i12, const CircleFn& i0) {
    VariationForm dl = euler_lagrange_variation(eps_ell_displayed());
    VariationForm dm = euler_lagrange_variation(eps_m_displayed());
    VariationForm dM = euler_lagrange_variation(m_top_displayed());
    return dl.times_fn(r12) + dm.times_fn(i12).scaled(kI) + dM.times_fn(i0).scaled(kI);
}

VariationForm eq48_displayed() {
    CircleFn e3 = CircleFn::harmonic(kTwo, 3);
    CircleFn em3 = CircleFn::harmonic(kTwo, -3);
    CircleFn is2 = CircleFn::sin_n(2).scaled(kI);

    auto coeff = [](const CircleFn& c0, FieldName f, bool bar, const CircleFn& c1) {
        return sym(f, bar).times_fn(c0) + sym(f, bar, 1).times_fn(c1);
    };

    VariationForm v;
    v.add({FieldName::Psi1, false}, -coeff(e3, FieldName::Psi2, true, is2));
    v.add({FieldName::Psi1, true}, coeff(em3, FieldName::Psi2, false, -is2));
    v.add({FieldName::Psi2, false}, coeff(em3, FieldName::Psi1, true, is2));
    v.add({FieldName::Psi2, true}, -coeff(e3, FieldName::Psi1, false, -is2));
    return v;
}

VariationForm eq410_displayed() {
    CircleFn sh = sinh_i(3).scaled(ComplexScalar(Rational(4)));
    CircleFn is2 = CircleFn::sin_n(2).scaled(kTwo * kI);
    VariationForm v;
    v.add({FieldName::Psi1, false}, sym(FieldName::Psi2, false).times_fn(-sh));
    v.add({FieldName::Psi2, false},
          -(sym(FieldName::Psi1, false).times_fn(sh) - sym(FieldName::Psi1, false, 1).times_fn(is2)));
    return v;
}

VariationForm eq411_displayed() {
    CircleFn ch = cosh_i(3).scaled(ComplexScalar(Rational(4)));
    CircleFn is2 = CircleFn::sin_n(2).scaled(kTwo * kI);
    VariationForm v;
    v.add({FieldName::Psi1, false}, sym(FieldName::Psi2, false).times_fn(-ch));
    v.add({FieldName::Psi2, false},
          -(sym(FieldName::Psi1, false).times_fn(ch) + sym(FieldName::Psi1, false, 1).times_fn(is2)));
    return v;
}

}  // namespace superkit::paper
