#include "superkit/paper_check.hpp"

#include "superkit/paper_forms.hpp"

#include <sstream>
#include <stdexcept>

namespace superkit {

namespace {

const long kLo = -5, kHi = 7;

std::string g2_diff(const G2L& computed, const G2L& displayed) {
    G2L d = computed - displayed;
    std::ostringstream os;
    os << "computed - displayed: body " << d.c0.str() << ", eta^12 " << d.c12.str();
    return os.str();
}

SplitModelSpec maximal_spec(long k1) {
    SplitModelSpec s;
    s.k1 = k1;
    s.k2 = 2 - k1;
    return s;  // lambda = (i, i), det = -1
}

/// Diagonal cocycle entries straight from the pushforward machinery.
std::array<G2L, 2> computed_cocycle(const SplitModelSpec& spec, PushforwardConvention conv) {
    Atlas atlas = build_projective_atlas(spec);
    PushforwardResult pf = pushforward_superconformal(atlas.transition("U", "V"),
                                                      atlas.transition("V", "U"), conv);
    if (!pf.zero_residual()) throw std::logic_error("unexpected pushforward residual");
    return {pf.coeffs[0][0], pf.coeffs[1][1]};
}

}  // namespace

const IdentityCheck& PaperCheckReport::check(const std::string& id) const {
    for (const auto& c : checks)
        if (c.id == id) return c;
    throw std::out_of_range("no check with id " + id);
}

std::vector<std::string> PaperCheckReport::mismatched_ids() const {
    std::vector<std::string> out;
    for (const auto& c : checks)
        if (!c.match) out.push_back(c.id);
    return out;
}

PaperCheckReport paper_check(ConjugationPolicy policy, PushforwardConvention conv) {
    PaperCheckReport rep;
    rep.policy = policy;
    rep.convention = conv;

    // --- the diagonal cocycle across the maximal family ----------------------
    IdentityCheck eq41{"eq_4.1", true, {}};
    for (long k1 = kLo; k1 <= kHi; ++k1) {
        SplitModelSpec spec = maximal_spec(k1);
        auto g = computed_cocycle(spec, conv);
        for (int a = 1; a <= 2; ++a) {
            G2L shown = paper::eq41(spec, a);
            if (g[a - 1] != shown) {
                eq41.match = false;
                std::ostringstream os;
                os << "k1=" << k1 << " a=" << a << ": " << g2_diff(g[a - 1], shown);
                eq41.diff.push_back(os.str());
            }
            // The closed form must agree with the machinery in either case.
            if (g[a - 1] != closed_form_cocycle(spec, a, conv))
                throw std::logic_error("closed form diverged from pushforward");
        }
    }
    if (!eq41.match) {
        eq41.diff.push_back(
            "soul sign flipped: the displayed form corresponds to the column ordering");
    }
    rep.checks.push_back(std::move(eq41));

    // --- hermitian product --------------------------------------------------
    IdentityCheck eq43{"eq_4.3", true, {}};
    for (long k1 = kLo; k1 <= kHi; ++k1) {
        SplitModelSpec spec = maximal_spec(k1);
        G2L G = hermitian_pair(closed_form_cocycle(spec, 1, conv),
                               closed_form_cocycle(spec, 2, conv), policy);
        G2L shown = paper::eq43(spec);
        if (G != shown) {
            eq43.match = false;
            std::ostringstream os;
            os << "k1=" << k1 << ": " << g2_diff(G, shown);
            eq43.diff.push_back(os.str());
        }
    }
    rep.checks.push_back(std::move(eq43));

    // --- circle restriction at k1 = k2 = 1 -----------------------------------
    IdentityCheck eq44{"eq_4.4", true, {}};
    {
        SplitModelSpec spec = maximal_spec(1);
        G2L G = hermitian_pair(closed_form_cocycle(spec, 1, conv),
                               closed_form_cocycle(spec, 2, conv), policy);
        GrassmannElement<CircleFn> circle{G.c0.restrict_to_circle(), CircleFn::zero(),
                                          CircleFn::zero(), G.c12.restrict_to_circle()};
        GrassmannElement<CircleFn> shown = paper::eq44(spec);
        if (circle != shown) {
            eq44.match = false;
            CircleFn d = circle.c12 - shown.c12;
            eq44.diff.push_back("eta^12 component: computed - displayed = " + d.str() +
                                " (sign of the 2 i sin(phi) term)");
        }
    }
    rep.checks.push_back(std::move(eq44));

    // --- real/imaginary components across the family -------------------------
    IdentityCheck eq45{"eq_4.5", true, {}};
    IdentityCheck eq46{"eq_4.6", true, {}};
    for (long k1 = kLo; k1 <= kHi; ++k1) {
        if (k1 == 1) continue;  // the k1 = 1 case is eq_4.4
        GComponents gc = g_components(maximal_spec(k1), policy, conv);
        if (gc.R0 != gc.paper_R0 || gc.R12 != gc.paper_R12) {
            eq45.match = false;
            std::ostringstream os;
            os << "k1=" << k1 << ": R12 computed - displayed = "
               << (gc.R12 - gc.paper_R12).str();
            eq45.diff.push_back(os.str());
        }
        if (gc.I0 != gc.paper_I0 || gc.I12 != gc.paper_I12) {
            eq46.match = false;
            std::ostringstream os;
            os << "k1=" << k1 << ": I12 computed - displayed = "
               << (gc.I12 - gc.paper_I12).str();
            eq46.diff.push_back(os.str());
        }
    }
    if (!eq45.match)
        eq45.diff.push_back(
            "soul frequency: recomputation carries e^{i(2 k1 - 1) phi} where the display "
            "carries e^{i(2 k1 - 3) phi}");
    if (!eq46.match)
        eq46.diff.push_back(
            "soul frequency: recomputation carries e^{i(2 k1 - 1) phi} where the display "
            "carries e^{i(2 k1 - 3) phi}");
    rep.checks.push_back(std::move(eq45));
    rep.checks.push_back(std::move(eq46));

    // --- the type-analysis index ----------------------------------------------
    IdentityCheck p46{"prop_4.6", true, {}};
    {
        SplitModelSpec spec = maximal_spec(2);
        FieldComponents seed;
        LaurentFn real_psi;
        real_psi.add_term(1, 0, ComplexScalar::one());
        real_psi.add_term(0, 1, ComplexScalar::one());
        seed.psi1 = real_psi;                 // restricts to 2 cos(phi), real
        seed.psi2 = LaurentFn::one();         // real, nonzero
        Superfield field;
        field.charts["V"] = seed;
        RealityAssignment decl;
        decl[FieldName::Psi1] = Reality::Real;
        decl[FieldName::Psi2] = Reality::Real;
        Prop46Result r = prop46_type_analysis(spec, field, decl, policy, conv);
        if (r.must_vanish != "psi1") {
            p46.match = false;
            p46.diff.push_back("statement names eps*D_1 Phi (psi1); the computation forces " +
                               r.must_vanish + " to vanish");
        }
    }
    rep.checks.push_back(std::move(p46));

    // --- informational recomputations -----------------------------------------
    {
        // Appendix pushforward formulas correspond to the chain-rule ordering.
        SplitModelSpec spec = maximal_spec(1);
        auto g_chain = computed_cocycle(spec, PushforwardConvention::ChainRule);
        auto g_col = computed_cocycle(spec, PushforwardConvention::JacobianColumn);
        bool flip = true;
        for (int a = 0; a < 2; ++a) {
            if (g_chain[a].c0 != g_col[a].c0) flip = false;
            if (!(g_chain[a].c12 + g_col[a].c12).is_zero()) flip = false;
        }
        rep.notes.push_back(std::string("appendix pushforward: chain-rule ordering matches the "
                                        "appendix formulas; the printed closed form matches the "
                                        "column ordering (souls differ by sign: ") +
                            (flip ? "verified" : "NOT verified") + ")");
    }
    {
        // The displayed difference variation for the (2,0) model equals the
        // density variations weighted by the displayed circle components.
        VariationForm derived = paper::weighted_variation(paper::eq45_R12(2), paper::eq46_I12(2),
                                                          paper::eq46_I0(2));
        // Drop the phi/F slots which the display omits under the necessary
        // conditions.
        VariationForm psi_part;
        for (const auto& [k, p] : derived.coeffs)
            if (k.field == FieldName::Psi1 || k.field == FieldName::Psi2) psi_part.add(k, p);
        bool ok = (psi_part - paper::eq48_displayed()).is_zero();
        rep.notes.push_back(std::string("eq 4.8: displayed coefficients ") +
                            (ok ? "reproduced" : "NOT reproduced") +
                            " by weighting the density variations with the displayed components");
    }
    {
        RealityAssignment rr;
        rr[FieldName::Psi1] = Reality::Real;
        rr[FieldName::Psi2] = Reality::Real;
        VariationForm spec_rr =
            vanishing_under_constraints(
                paper::weighted_variation(paper::eq45_R12(2), paper::eq46_I12(2),
                                          paper::eq46_I0(2)),
                rr)
                .residual;
        VariationForm d410 = spec_rr - paper::eq410_displayed();
        std::ostringstream os;
        os << "eq 4.10: specialisation minus display =";
        for (const auto& [k, p] : d410.coeffs)
            if (!p.is_zero()) os << "  [" << k.str() << "] " << p.str();
        rep.notes.push_back(os.str());

        RealityAssignment ir = rr;
        ir[FieldName::Psi1] = Reality::Imaginary;
        VariationForm spec_ir =
            vanishing_under_constraints(
                paper::weighted_variation(paper::eq45_R12(2), paper::eq46_I12(2),
                                          paper::eq46_I0(2)),
                ir)
                .residual;
        VariationForm d411 = spec_ir - paper::eq411_displayed();
        std::ostringstream os2;
        os2 << "eq 4.11: specialisation minus display =";
        for (const auto& [k, p] : d411.coeffs)
            if (!p.is_zero()) os2 << "  [" << k.str() << "] " << p.str();
        rep.notes.push_back(os2.str());
    }
    rep.notes.push_back(
        "normalisation: the displayed eps*l and eps*m drop the overall 1/2 of the density "
        "definitions while the displayed M keeps it; comparisons here follow the display");
    rep.notes.push_back(
        "variation list: the displayed variation of M carries psi1' delta psibar1 where the "
        "recomputation yields psi1' delta psibar2");
    rep.notes.push_back(
        "delta-operator rewrite: the displayed rewrite carries e^{-i phi} sin(2 phi) where the "
        "difference variation carries i sin(2 phi)");
    return rep;
}

const char* policy_str(ConjugationPolicy p) {
    return p == ConjugationPolicy::Fix ? "fix" : "negate";
}

const char* convention_str(PushforwardConvention c) {
    return c == PushforwardConvention::ChainRule ? "chain" : "column";
}

ConjugationPolicy parse_policy(const std::string& s) {
    if (s == "fix") return ConjugationPolicy::Fix;
    if (s == "negate") return ConjugationPolicy::Negate;
    throw std::invalid_argument("policy must be 'fix' or 'negate'");
}

PushforwardConvention parse_convention(const std::string& s) {
    if (s == "chain") return PushforwardConvention::ChainRule;
    if (s == "column") return PushforwardConvention::JacobianColumn;
    throw std::invalid_argument("convention must be 'chain' or 'column'");
}

}  // namespace superkit
