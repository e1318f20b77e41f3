#pragma once

#include "superkit/atlas.hpp"

#include <map>
#include <string>
#include <vector>

namespace superkit {

/// Component fields of Phi = phi + psi_a eta^a + F eta^1^eta^2 on one chart.
struct FieldComponents {
    LaurentFn phi, psi1, psi2, F;

    G2L as_element() const { return {phi, psi1, psi2, F}; }
    bool is_zero() const {
        return phi.is_zero() && psi1.is_zero() && psi2.is_zero() && F.is_zero();
    }
    FieldComponents scaled(const ComplexScalar& c) const {
        return {phi.scaled(c), psi1.scaled(c), psi2.scaled(c), F.scaled(c)};
    }
    friend FieldComponents operator+(const FieldComponents& a, const FieldComponents& b) {
        return {a.phi + b.phi, a.psi1 + b.psi1, a.psi2 + b.psi2, a.F + b.F};
    }
};

struct Superfield {
    std::map<std::string, FieldComponents> charts;

    const FieldComponents& on(const std::string& chart) const;
    bool has(const std::string& chart) const { return charts.count(chart) != 0; }
};

using Density = Grassmann4<LaurentFn>;

/// Chartwise densities tagged with the odd volume marker [dX dtheta^1 dtheta^2].
struct DensityCochain {
    std::map<std::string, Density> parts;
};

/// Chartwise one-form coefficients, tagged with dy on each chart.
struct FormCochain {
    std::map<std::string, LaurentFn> parts;
};

/// One-form coefficients on ordered overlaps.
using OverlapForm = std::map<std::pair<std::string, std::string>, LaurentFn>;
using OverlapDensity = std::map<std::pair<std::string, std::string>, Density>;

// --- superconformal derivatives ----------------------------------------------

/// D_a = d/deta^a - eta^{other} d/dY acting on Grassmann-valued functions.
G2L apply_D_element(int a, const G2L& u);

/// D_a Phi for component fields (prime = d/dy):
///   D_1 Phi = psi1 + (F - phi') eta^2 + psi1' eta^12
///   D_2 Phi = psi2 - (F + phi') eta^1 - psi2' eta^12
G2L apply_D(int a, const FieldComponents& f);

/// (1/2)(D_1 D_2 + D_2 D_1) Phi + dPhi/dY; identically zero.
G2L bracket_check(const FieldComponents& f);

// --- densities -----------------------------------------------------------------

/// l = (1/2) e^{ab} <D_a Phi, D_b Phi>, with the pairing taken in the
/// conjugation-split frame (barred generators kept separate).
Density superparticle_density(const FieldComponents& f, ConjugationPolicy policy);

/// m = (1/2) s^{ab} <D_a Phi, D_b Phi>, s^{12} = s^{21} = 1.
Density m_density(const FieldComponents& f, ConjugationPolicy policy);

DensityCochain lagrangian_cochain(const Superfield& field, const Atlas& atlas,
                                  ConjugationPolicy policy);
DensityCochain m_cochain(const Superfield& field, const Atlas& atlas,
                         ConjugationPolicy policy);

/// Top odd coefficient (after identifying the barred frame), one form per chart.
FormCochain berezin_integral(const DensityCochain& d);

LaurentFn berezin_top_of(const Density& d);
G2L collapsed(const Density& d);

// --- transport ------------------------------------------------------------------

/// Components on t.from of the field given on t.to (split transitions only).
FieldComponents transport_field(const FieldComponents& on_to, const TransitionData& t);

/// Extends components given on `seed` chart to every chart of the atlas.
Superfield make_global(const FieldComponents& seed, const std::string& seed_chart,
                       const Atlas& atlas);

/// Exact equality of components with their transports around every pair.
bool is_global(const Superfield& field, const Atlas& atlas);

/// Density on t.to of the density given on t.from: coefficients through the
/// reduced map, unbarred generators through zeta, barred through conj(zeta),
/// times Ber J of the inverse transition. Split transitions only.
Density transport_density(const Density& on_from, const TransitionData& t,
                          const TransitionData& t_inv);

/// (delta L)_{UV} = L_V - transport(L_U) on each ordered overlap.
OverlapDensity coboundary_super(const DensityCochain& l, const Atlas& atlas);

/// (delta_red L)_{UV} = L_V - f_VU^* L_U (pullback of one-forms).
OverlapForm coboundary_reduced(const FormCochain& l, const Atlas& atlas);

/// Berezin of the super coboundary minus the reduced coboundary of the
/// Berezin, per ordered overlap. Identically zero exactly when the field is
/// good for the superparticle Lagrangian on this atlas.
OverlapForm good_field_residual(const Superfield& field, const Atlas& atlas,
                                ConjugationPolicy policy);

// --- global Lagrangian ------------------------------------------------------------

struct GlobalLagrangianReport {
    /// G_{UV} = g_{UV,1} conj(g_{UV,2}) per ordered pair.
    std::map<std::pair<std::string, std::string>, G2L> G;
    bool real = false;
};

/// Requires a maximally superconformal atlas (diagonal cocycle, zero residual).
GlobalLagrangianReport global_lagrangian_check(const Atlas& atlas, ConjugationPolicy policy,
                                               PushforwardConvention conv);

struct CompatibilityReport {
    bool compatible = true;
    /// Largest coefficient magnitude of rho_* L_U(Phi) - h L_V(Phi) over the
    /// probe family.
    double max_residual = 0.0;
    std::string witness;  // description of the first failing probe field
};

/// Checks rho_* L_U(Phi) = h L_V(Phi) over a spanning family of quadratic
/// field monomials on the two-chart atlas.
CompatibilityReport compatibility_check(const G2L& h, const Atlas& atlas,
                                        ConjugationPolicy policy);

/// Component-wise real and imaginary parts of an even Grassmann element.
G2L g2_real_part(const G2L& g);
G2L g2_imag_part(const G2L& g);

}  // namespace superkit
