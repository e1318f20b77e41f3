#include "superkit/consistency.hpp"

#include "superkit/paper_forms.hpp"

#include <sstream>
#include <stdexcept>

namespace superkit {

namespace {

const ComplexScalar kI = ComplexScalar::i();
const ComplexScalar kHalf{Rational(1, 2)};

JetPolynomial sym(FieldName f, bool bar, int ord = 0) {
    return JetPolynomial::symbol(f, bar, ord);
}

void require_maximal(const SplitModelSpec& spec) {
    MaximalityVerdict v = classify_maximal(spec);
    if (!v.maximal) {
        std::string why;
        for (const auto& r : v.reasons) why += (why.empty() ? "" : "; ") + r;
        throw std::domain_error("model is not maximally superconformal: " + why);
    }
}

Superfield ensure_global(const Superfield& field, const Atlas& atlas) {
    bool all = true;
    for (const auto& chart : atlas.charts)
        if (!field.has(chart)) all = false;
    if (all) {
        if (!is_global(field, atlas))
            throw std::invalid_argument("field components are not related by transport");
        return field;
    }
    for (const auto& chart : atlas.charts)
        if (field.has(chart)) return make_global(field.on(chart), chart, atlas);
    throw std::invalid_argument("field has no components on any chart of the atlas");
}

std::string fn_diff(const char* label, const CircleFn& computed, const CircleFn& displayed) {
    std::ostringstream os;
    os << label << ": computed - displayed = " << (computed - displayed).str();
    return os.str();
}

}  // namespace

GComponents g_components(const SplitModelSpec& spec, ConjugationPolicy policy,
                         PushforwardConvention conv) {
    require_maximal(spec);
    G2L g1 = closed_form_cocycle(spec, 1, conv);
    G2L g2 = closed_form_cocycle(spec, 2, conv);
    G2L G = hermitian_pair(g1, g2, policy);

    CircleFn body = G.c0.restrict_to_circle();
    CircleFn soul = G.c12.restrict_to_circle();

    GComponents out;
    out.R0 = body.real_part();
    out.I0 = body.imag_part();
    out.R12 = soul.real_part();
    out.I12 = soul.imag_part();

    out.paper_R0 = paper::eq45_R0(spec.k1);
    out.paper_R12 = paper::eq45_R12(spec.k1);
    out.paper_I0 = paper::eq46_I0(spec.k1);
    out.paper_I12 = paper::eq46_I12(spec.k1);

    if (out.R0 != out.paper_R0) out.paper_diff.push_back(fn_diff("R0", out.R0, out.paper_R0));
    if (out.R12 != out.paper_R12)
        out.paper_diff.push_back(fn_diff("R12", out.R12, out.paper_R12));
    if (out.I0 != out.paper_I0) out.paper_diff.push_back(fn_diff("I0", out.I0, out.paper_I0));
    if (out.I12 != out.paper_I12)
        out.paper_diff.push_back(fn_diff("I12", out.I12, out.paper_I12));
    return out;
}

NonexistenceReport nonexistence_check(const SplitModelSpec& spec, ConjugationPolicy policy,
                                      PushforwardConvention conv) {
    GComponents gc = g_components(spec, policy, conv);
    NonexistenceReport rep;
    rep.imaginary_part_vanishes = gc.I0.is_zero() && gc.I12.is_zero();
    if (rep.imaginary_part_vanishes) return rep;

    if (spec.k1 == 1) {
        // I12 = +/- 2 sin(phi); witness at phi = pi/2, i.e. e^{i phi} = i.
        rep.component = "I12";
        rep.witness_phi = "pi/2";
        rep.witness_value = gc.I12.eval_at_unit(ComplexScalar::i());
        return rep;
    }
    // I0 = sin(2(k1-1) phi): all frequencies are multiples of 2(k1-1), so the
    // witness phi = pi/(4(k1-1)) evaluates exactly through w = e^{i pi/2} = i.
    long base = 2 * (spec.k1 - 1);
    rep.component = "I0";
    {
        std::ostringstream os;
        os << "pi/" << 2 * base;
        rep.witness_phi = os.str();
    }
    ComplexScalar acc;
    for (const auto& [k, c] : gc.I0.terms()) {
        if (k % base != 0) throw std::logic_error("unexpected frequency in I0");
        acc += c * ComplexScalar::i().pow(k / base);
    }
    rep.witness_value = acc;
    return rep;
}

JetPolynomial jets_eps_ell() {
    JetPolynomial p = sym(FieldName::Psi1, false) * sym(FieldName::Psi2, true) -
                      sym(FieldName::Psi1, true) * sym(FieldName::Psi2, false);
    return p.scaled(kHalf);
}

JetPolynomial jets_eps_m() {
    JetPolynomial p = sym(FieldName::Psi1, false) * sym(FieldName::Psi2, true) +
                      sym(FieldName::Psi1, true) * sym(FieldName::Psi2, false);
    return p.scaled(kHalf);
}

JetPolynomial jets_m_top() {
    JetPolynomial psi_part = sym(FieldName::Psi2, true) * sym(FieldName::Psi1, false, 1) -
                             sym(FieldName::Psi1, true) * sym(FieldName::Psi2, false, 1) +
                             sym(FieldName::Psi2, false) * sym(FieldName::Psi1, true, 1) -
                             sym(FieldName::Psi1, false) * sym(FieldName::Psi2, true, 1);
    JetPolynomial f_part = sym(FieldName::F, false) * sym(FieldName::Phi, true, 1) -
                           sym(FieldName::Phi, false, 1) * sym(FieldName::F, true);
    return psi_part.scaled(kHalf) + f_part;
}

DifferenceResult component_difference(const SplitModelSpec& spec, const Superfield& field,
                                      ConjugationPolicy policy, PushforwardConvention conv,
                                      bool force) {
    require_maximal(spec);
    Atlas atlas = build_projective_atlas(spec);
    Superfield global = ensure_global(field, atlas);

    DifferenceResult out;
    out.good_residual = good_field_residual(global, atlas, policy);
    out.good = true;
    for (const auto& [key, u] : out.good_residual)
        if (!u.is_zero()) out.good = false;
    if (!out.good && !force)
        throw std::domain_error("field is not good for the Lagrangian (pass force to proceed)");

    GComponents gc = g_components(spec, policy, conv);
    out.rhs = jets_eps_ell().times_fn(gc.R12) + jets_eps_m().times_fn(gc.I12).scaled(kI) +
              jets_m_top().times_fn(gc.I0).scaled(kI);
    return out;
}

CircleField circle_field(const Superfield& field) {
    const FieldComponents& f = field.on("V");
    return {f.phi.restrict_to_circle(), f.psi1.restrict_to_circle(),
            f.psi2.restrict_to_circle(), f.F.restrict_to_circle()};
}

bool necessary_conditions(const CircleField& f) {
    CircleFn dphi = f.phi.d_phi();
    bool both_real = dphi.is_real() && f.F.is_real();
    bool both_imag = dphi.is_imaginary() && f.F.is_imaginary();
    return both_real || both_imag;
}

ClassificationResult consistency_classify(const SplitModelSpec& spec, const Superfield& field,
                                          const RealityAssignment& declared,
                                          ConjugationPolicy policy, PushforwardConvention conv,
                                          bool force) {
    Atlas atlas = build_projective_atlas(spec);
    Superfield global = ensure_global(field, atlas);
    CircleField cf = circle_field(global);

    ClassificationResult res;
    res.assignment = declared;
    // Components that vanish identically carry no variation: promote to Zero.
    for (int i = 0; i < 4; ++i) {
        FieldName f = static_cast<FieldName>(i);
        if (cf.component(f).is_zero()) res.assignment[f] = Reality::Zero;
    }
    if (!satisfies(cf, res.assignment))
        throw std::invalid_argument("field does not satisfy its declared reality assignment");

    DifferenceResult diff = component_difference(spec, global, policy, conv, force);
    res.good = diff.good;
    for (const auto& [key, u] : diff.good_residual)
        res.good_residual_norm = std::max(res.good_residual_norm, u.max_coeff_abs());

    res.necessary_ok = necessary_conditions(cf);

    VariationForm var = euler_lagrange_variation(diff.rhs);
    ConstraintResult constrained = vanishing_under_constraints(var, res.assignment);
    res.residual = evaluate(constrained.residual, cf);
    res.consistent = res.residual.empty();
    return res;
}

CircleFn DeltaOperator::apply(const CircleFn& u) const {
    CircleFn shift = CircleFn::harmonic(ComplexScalar(Rational(2)), -m);
    CircleFn grad = CircleFn::harmonic(ComplexScalar::one(), -1) * CircleFn::sin_n(n);
    return shift * u + grad * u.d_phi();
}

CircleFn DeltaOperator::apply_conj(const CircleFn& u) const {
    CircleFn shift = CircleFn::harmonic(ComplexScalar(Rational(2)), m);
    CircleFn grad = CircleFn::harmonic(ComplexScalar::one(), 1) * CircleFn::sin_n(n);
    return shift * u + grad * u.d_phi();
}

Prop45Result prop45_check(const Superfield& field) {
    CircleField cf = circle_field(field);
    Prop45Result r;
    r.delta1_zero = DeltaOperator{3, 2}.apply_conj(cf.psi1).is_zero();
    r.delta2_zero = DeltaOperator{-3, 2}.apply_conj(cf.psi2).is_zero();
    r.necessary_ok = necessary_conditions(cf);
    r.passes = r.delta1_zero && r.delta2_zero && r.necessary_ok;
    return r;
}

namespace {

const char* reality_short(Reality r) {
    switch (r) {
        case Reality::Real: return "Re";
        case Reality::Imaginary: return "Im";
        default: return "?";
    }
}

/// The displayed specialisations fix the psi sector only.
RealityAssignment psi_only(const RealityAssignment& declared) {
    RealityAssignment r;
    r[FieldName::Psi1] = declared[FieldName::Psi1];
    r[FieldName::Psi2] = declared[FieldName::Psi2];
    return r;
}

}  // namespace

Prop46Result prop46_type_analysis(const SplitModelSpec& spec, const Superfield& field,
                                  const RealityAssignment& declared, ConjugationPolicy policy,
                                  PushforwardConvention conv) {
    Reality t1 = declared[FieldName::Psi1];
    Reality t2 = declared[FieldName::Psi2];
    auto is_type = [](Reality r) { return r == Reality::Real || r == Reality::Imaginary; };
    if (!is_type(t1) || !is_type(t2))
        throw std::invalid_argument("psi components need a declared (Re/Im) type");

    Prop46Result out;
    out.type = std::string("(") + reality_short(t1) + "," + reality_short(t2) + ")";

    CircleField cf = circle_field(ensure_global(field, build_projective_atlas(spec)));
    out.necessary_ok = necessary_conditions(cf);

    // Displayed-form chain: weight the density variations by the displayed
    // circle components, then impose the type.
    VariationForm weighted = paper::weighted_variation(
        paper::eq45_R12(spec.k1), paper::eq46_I12(spec.k1), paper::eq46_I0(spec.k1));
    ConstraintResult spec_form = vanishing_under_constraints(weighted, psi_only(declared));

    auto lead = [&](FieldName var, FieldName in) {
        auto it = spec_form.residual.coeffs.find(VarKey{var, false});
        if (it == spec_form.residual.coeffs.end()) return CircleFn::zero();
        JetPolynomial p = it->second.partial(JetSymbol{in, false, 0});
        // Constant (jet-free) part of the partial derivative.
        for (const auto& [m, c] : p.terms())
            if (m.empty()) return c;
        return CircleFn::zero();
    };
    out.lead_dpsi1 = lead(FieldName::Psi1, FieldName::Psi2);
    out.lead_dpsi2 = lead(FieldName::Psi2, FieldName::Psi1);

    if (spec.k1 == 2 && t2 == Reality::Real) {
        const VariationForm& displayed =
            (t1 == Reality::Real) ? paper::eq410_displayed() : paper::eq411_displayed();
        VariationForm delta = spec_form.residual - displayed;
        for (const auto& [k, p] : delta.coeffs) {
            if (p.is_zero()) continue;
            out.display_diff.push_back(k.str() + " differs by " + p.str());
        }
    }

    // Honest verdict and which stratum rescues consistency.
    ClassificationResult direct =
        consistency_classify(spec, field, declared, policy, conv, /*force=*/true);
    out.consistent = direct.consistent;
    if (direct.consistent) {
        if (cf.psi2.is_zero())
            out.must_vanish = "psi2";
        else if (cf.psi1.is_zero())
            out.must_vanish = "psi1";
        else
            out.must_vanish = "none";
        return out;
    }

    auto zeroed = [&](FieldName which) {
        Superfield copy = field;
        for (auto& [chart, comp] : copy.charts) {
            if (which == FieldName::Psi1) comp.psi1 = LaurentFn::zero();
            if (which == FieldName::Psi2) comp.psi2 = LaurentFn::zero();
        }
        // Keep only one chart; the global extension is rebuilt consistently.
        Superfield seeded;
        seeded.charts["V"] = copy.on("V");
        return consistency_classify(spec, seeded, declared, policy, conv, /*force=*/true)
            .consistent;
    };
    bool psi2_fixes = zeroed(FieldName::Psi2);
    bool psi1_fixes = zeroed(FieldName::Psi1);
    if (psi2_fixes)
        out.must_vanish = "psi2";
    else if (psi1_fixes)
        out.must_vanish = "psi1";
    else
        out.must_vanish = "both";
    return out;
}

}  // namespace superkit
