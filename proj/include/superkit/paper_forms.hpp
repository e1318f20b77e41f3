#pragma once

#include "superkit/atlas.hpp"
#include "superkit/jets.hpp"

namespace superkit::paper {

// Closed forms of the displayed identities for the standard two-chart model,
// kept verbatim so they can be diffed against recomputation. The circle forms
// fix lambda1 = lambda2 = i, which is how they are displayed.

/// Displayed diagonal cocycle entry (same as printed_cocycle_form).
G2L eq41(const SplitModelSpec& spec, int a);

/// Displayed hermitian product of the cocycle entries:
///   lambda1 conj(lambda2) y^{k1} ybar^{k2} (1 + (k2 ybar^{-1} - k1 y^{-1}) eta^12)
G2L eq43(const SplitModelSpec& spec);

/// Displayed circle restriction for k1 = k2 = 1:  1 - 2i sin(phi) eta^12
/// (times lambda1 conj(lambda2)).
GrassmannElement<CircleFn> eq44(const SplitModelSpec& spec);

/// Displayed real/imaginary components for k1 + k2 = 2, lambda = (i, i),
/// written with kt = k1 - 1:
///   R0  =  cos(2 kt phi)
///   R12 = -2 (kt cos(phi) cos(2 kt phi) - sin(phi) sin(2 kt phi))
///   I0  =  sin(2 kt phi)
///   I12 = -2 (kt cos(phi) sin(2 kt phi) + sin(phi) cos(2 kt phi))
CircleFn eq45_R0(long k1);
CircleFn eq45_R12(long k1);
CircleFn eq46_I0(long k1);
CircleFn eq46_I12(long k1);

// Component densities in the displayed normalisation: the 1/2 prefactor is
// dropped from eps*l and eps*m but kept in the jet part of M.
JetPolynomial eps_ell_displayed();
JetPolynomial eps_m_displayed();
JetPolynomial m_top_displayed();

/// The variation procedure behind the displayed difference variations: vary
/// the three densities first, then weight by the cocycle components,
///   R12 * delta(eps_l) + i I12 * delta(eps_m) + i I0 * delta(M).
VariationForm weighted_variation(const CircleFn& r12, const CircleFn& i12, const CircleFn& i0);

/// The displayed variation for the (2, 0) model (coefficients of eq. form):
///   - (2 e^{3i phi} psibar2 + i sin(2 phi) psibar2') delta psi1
///   + (2 e^{-3i phi} psi2  - i sin(2 phi) psi2')    delta psibar1
///   + (2 e^{-3i phi} psibar1 + i sin(2 phi) psibar1') delta psi2
///   - (2 e^{3i phi} psi1  - i sin(2 phi) psi1')     delta psibar2
VariationForm eq48_displayed();

/// Displayed type-(Re,Re) specialisation:
///   -4 sinh(3i phi) psi2 delta psi1 - (4 sinh(3i phi) psi1 - 2i sin(2 phi) psi1') delta psi2
VariationForm eq410_displayed();

/// Displayed type-(Im,Re) specialisation:
///   -4 cosh(3i phi) psi2 delta psi1 - (4 cosh(3i phi) psi1 + 2i sin(2 phi) psi1') delta psi2
VariationForm eq411_displayed();

/// sinh(n i phi) = i sin(n phi) and cosh(n i phi) = cos(n phi) as circle fns.
CircleFn sinh_i(long n);
CircleFn cosh_i(long n);

}  // namespace superkit::paper
