#pragma once

#include "superkit/lagrangian.hpp"
#include "superkit/jets.hpp"

#include <optional>
#include <string>
#include <vector>

namespace superkit {

// --- cocycle hermitian product on the circle -----------------------------------

struct GComponents {
    /// Component-wise real/imaginary split of G = g_1 conj(g_2) restricted to
    /// |y| = 1: G = (R0 + i I0) + (R12 + i I12) eta^12.
    CircleFn R0, R12, I0, I12;
    /// The displayed closed forms (normalised to lambda = (i, i)).
    CircleFn paper_R0, paper_R12, paper_I0, paper_I12;
    /// Nonempty where computed and displayed components differ.
    std::vector<std::string> paper_diff;
};

/// Requires a maximal spec (k1 + k2 = 2, det lambda = -1).
GComponents g_components(const SplitModelSpec& spec, ConjugationPolicy policy,
                         PushforwardConvention conv);

struct NonexistenceReport {
    bool imaginary_part_vanishes = false;
    std::string component;   // "I12" for k1 = 1, otherwise "I0"
    std::string witness_phi; // description of the witness angle
    ComplexScalar witness_value;
};

/// Exhibits the nonvanishing imaginary part of G, with an exact witness.
NonexistenceReport nonexistence_check(const SplitModelSpec& spec, ConjugationPolicy policy,
                                      PushforwardConvention conv);

// --- component Lagrangian difference -------------------------------------------

/// The three density integrands as jet polynomials (prime = d/dphi):
///   eps_ell = (1/2)(psi1 psibar2 - psibar1 psi2)
///   eps_m   = (1/2)(psi1 psibar2 + psibar1 psi2)
///   m_top   = (1/2)(psibar2 psi1' - psibar1 psi2' + psi2 psibar1' - psi1 psibar2')
///             + (F phibar' - phi' Fbar)
JetPolynomial jets_eps_ell();
JetPolynomial jets_eps_m();
JetPolynomial jets_m_top();

struct DifferenceResult {
    /// R12 eps_ell + i I12 eps_m + i I0 m_top
    JetPolynomial rhs;
    bool good = false;
    OverlapForm good_residual;
};

/// Right-hand side of the chartwise difference of component Lagrangians.
/// Rejects fields outside the good locus unless `force` is set.
DifferenceResult component_difference(const SplitModelSpec& spec, const Superfield& field,
                                      ConjugationPolicy policy, PushforwardConvention conv,
                                      bool force);

// --- classification --------------------------------------------------------------

struct ClassificationResult {
    bool consistent = false;
    bool good = false;
    double good_residual_norm = 0.0;
    bool necessary_ok = false;
    /// Effective assignment after promoting identically-zero components.
    RealityAssignment assignment;
    /// Evaluated nonzero variation coefficients (empty when consistent).
    std::map<VarKey, CircleFn> residual;
};

/// Varies the assembled difference and tests identical vanishing at the given
/// field under its reality constraints. Components that vanish identically
/// have their variations killed, following the stratified argument.
ClassificationResult consistency_classify(const SplitModelSpec& spec, const Superfield& field,
                                          const RealityAssignment& declared,
                                          ConjugationPolicy policy, PushforwardConvention conv,
                                          bool force);

/// Circle restriction of the chart-"V" components.
CircleField circle_field(const Superfield& field);

/// Prop 4.4-style necessary check: phi' and F both real, or both imaginary.
bool necessary_conditions(const CircleField& f);

// --- the Delta operator ------------------------------------------------------------

/// u |-> 2 e^{-i m phi} u + e^{-i phi} sin(n phi) du/dphi
struct DeltaOperator {
    long m = 0, n = 0;

    CircleFn apply(const CircleFn& u) const;
    /// The conjugated operator: 2 e^{+i m phi} u + e^{+i phi} sin(n phi) u'.
    CircleFn apply_conj(const CircleFn& u) const;
};

struct Prop45Result {
    bool delta1_zero = false;  // conj(Delta_{(3,2)}) psi1 == 0
    bool delta2_zero = false;  // conj(Delta_{(-3,2)}) psi2 == 0
    bool necessary_ok = false;
    bool passes = false;
};

/// Sufficient conditions for consistency on the (2, 0) model.
Prop45Result prop45_check(const Superfield& field);

// --- type analysis on the (2, 0) model ----------------------------------------------

struct Prop46Result {
    std::string type;  // e.g. "(Re,Re)"
    bool necessary_ok = false;
    bool consistent = false;
    /// Component the residual computation forces to vanish ("psi1", "psi2",
    /// "none" when already consistent, "both" when neither stratum suffices).
    std::string must_vanish;
    /// Leading coefficients of the weighted-variation specialisation:
    /// coefficient of psi2 in the delta psi1 slot and of psi1 in delta psi2.
    CircleFn lead_dpsi1, lead_dpsi2;
    /// Differences against the displayed specialised forms, when any.
    std::vector<std::string> display_diff;
};

Prop46Result prop46_type_analysis(const SplitModelSpec& spec, const Superfield& field,
                                  const RealityAssignment& declared, ConjugationPolicy policy,
                                  PushforwardConvention conv);

}  // namespace superkit
