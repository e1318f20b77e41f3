#pragma once

#include "superkit/grassmann.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace superkit {

using G2L = GrassmannElement<LaurentFn>;
using Mat2L = std::array<std::array<LaurentFn, 2>, 2>;
using Mat2G2 = std::array<std::array<G2L, 2>, 2>;

/// Super transition between an ordered pair of charts:
///   Y      = f(X) + alpha(X) theta^1^theta^2
///   eta^a  = zeta^a_b(X) theta^b
/// All component functions are holomorphic in the source coordinate and
/// det(zeta) must be a unit of the Laurent ring.
struct TransitionData {
    std::string from, to;
    MonomialMap f;
    LaurentFn alpha;
    Mat2L zeta;  // zeta[a][b]

    TransitionData() = default;
    TransitionData(std::string from_, std::string to_, MonomialMap f_, LaurentFn alpha_,
                   Mat2L zeta_);

    LaurentFn f_deriv() const;
    LaurentFn det_zeta() const;
    /// Inverse transition, computed exactly.
    TransitionData inverse() const;
    /// Composite transition: source of `inner`, target of `this`.
    TransitionData compose(const TransitionData& inner) const;
};

struct Atlas {
    std::vector<std::string> charts;
    std::map<std::pair<std::string, std::string>, TransitionData> transitions;
    /// Declared triple overlaps (ordered triples U, V, W).
    std::vector<std::array<std::string, 3>> triples;

    const TransitionData& transition(const std::string& from, const std::string& to) const;
    void add_transition(TransitionData t);
    /// Registers t and its exact inverse.
    void add_transition_pair(const TransitionData& t);
    /// All ordered pairs with a stored transition.
    std::vector<std::pair<std::string, std::string>> pairs() const;
};

/// Two-chart model over the projective line: degrees (-k1, -k2), frame
/// scalings lambda1, lambda2, and an optional odd-even mixing term alpha.
struct SplitModelSpec {
    long k1 = 1, k2 = 1;
    ComplexScalar lambda1 = ComplexScalar::i();
    ComplexScalar lambda2 = ComplexScalar::i();
    LaurentFn alpha;  // zero for the split model

    ComplexScalar det_lambda() const { return lambda1 * lambda2; }
};

/// Charts "U", "V" with y = 1/x, eta^a = lambda_a x^{-k_a} theta^a (+ alpha).
Atlas build_projective_atlas(const SplitModelSpec& spec);

// --- Berezinians ------------------------------------------------------------

/// Blocks of the super Jacobian d(Y, eta)/d(X, theta); odd blocks carry their
/// theta-linear content as Grassmann elements over the source chart.
struct SuperJacobian {
    G2L a;                    // dY/dX
    std::array<G2L, 2> b;     // dY/dtheta^b
    std::array<G2L, 2> c;     // deta^a/dX
    Mat2L d;                  // deta^a/dtheta^b
};

SuperJacobian super_jacobian(const TransitionData& t);

/// Ber J = det(A - B D^{-1} C) / det D. Throws "degenerate odd block" when
/// det D is not a unit.
G2L berezinian(const SuperJacobian& j);
G2L berezinian(const TransitionData& t);

// --- Superconformal pushforward ---------------------------------------------

/// Component-ordering convention for pushing vector fields through a super
/// coordinate change. The two orderings differ by the Koszul sign picked up
/// when an odd coefficient crosses an odd Jacobian entry, which flips the
/// sign of the eta^12 part of the resulting cocycle.
///
///   ChainRule      acts on coordinate functions, (rho_* D)(h) = D(h o rho);
///                  this is the functorial pushforward.
///   JacobianColumn pushes the coefficient column through the Jacobian matrix
///                  written to the left, with no Koszul correction.
enum class PushforwardConvention { ChainRule, JacobianColumn };

struct PushforwardResult {
    /// coeffs[b][a]: candidate coefficient of the target derivation b for
    /// source derivation a, read off the d/deta part, in target coordinates.
    Mat2G2 coeffs;
    /// residual[a][c]: mismatch of the d/dy part against the candidate
    /// coefficients, per eta^c component. Zero iff the pushforward closes.
    std::array<std::array<LaurentFn, 2>, 2> residual;
    /// For diagonal zeta: the two solvability defects det(zeta)-f'+/-alpha
    /// (expressed in target coordinates) and their difference, which equals
    /// 2*alpha when the model is otherwise superconformal.
    std::optional<std::array<LaurentFn, 3>> alpha_obstruction;

    bool zero_residual() const;
    bool diagonal() const;
};

PushforwardResult pushforward_superconformal(const TransitionData& t,
                                             const TransitionData& t_inv,
                                             PushforwardConvention conv);

// --- Cocycles ----------------------------------------------------------------

struct SuperconformalCocycle {
    /// entries[(from,to)][b][a] in target coordinates.
    std::map<std::pair<std::string, std::string>, Mat2G2> entries;
    bool diagonal = false;

    /// Diagonal entry g_{UV,a} (a in {1,2}); requires diagonal flag.
    const G2L& diag(const std::string& from, const std::string& to, int a) const;
};

struct CocycleFailure {
    std::pair<std::string, std::string> pair;
    std::array<std::array<LaurentFn, 2>, 2> residual;
};

struct CocycleOutcome {
    std::optional<SuperconformalCocycle> cocycle;
    std::vector<CocycleFailure> failures;
    bool ok() const { return failures.empty() && cocycle.has_value(); }
};

CocycleOutcome superconformal_cocycle(const Atlas& atlas, PushforwardConvention conv);

/// Re-express a Grassmann-valued function living on t.to in t.from
/// coordinates (body through f, soul through det zeta, alpha corrections
/// included).
G2L express_via(const G2L& g, const TransitionData& t);

struct TripleResidual {
    std::array<std::string, 3> triple;
    int a;  // 1 or 2
    G2L value;
};

/// g_{UV,a} g_{VW,a} - g_{UW,a} over each declared triple, all expressed in
/// the W chart. Requires a diagonal cocycle defined on all pairs.
std::vector<TripleResidual> check_cocycle_condition(const SuperconformalCocycle& g,
                                                    const Atlas& atlas);

// --- Classification -----------------------------------------------------------

struct MaximalityVerdict {
    bool maximal = false;
    std::vector<std::string> reasons;  // failed clauses, empty when maximal
};

/// maximal iff alpha = 0, zeta diagonal, k1 + k2 = 2 and det(lambda) = -1.
MaximalityVerdict classify_maximal(const SplitModelSpec& spec);

/// Closed form of the diagonal cocycle entry g_{UV,a}(y) for the standard
/// two-chart model, per pushforward convention:
///   lambda_a y^{k_a}  -/+  (-1)^{a-1} k_a lambda_a (lambda1 lambda2)^{-1}
///                           y^{k_a+1-k1-k2} eta^12
/// (minus for ChainRule, plus for JacobianColumn).
G2L closed_form_cocycle(const SplitModelSpec& spec, int a, PushforwardConvention conv);

/// The displayed closed form for maximal models:
///   lambda_a y^{k_a} - (-1)^{a-1} k_a lambda_a y^{k_a-1} eta^12.
/// Coincides with the JacobianColumn form when k1+k2 = 2, det lambda = -1.
G2L printed_cocycle_form(const SplitModelSpec& spec, int a);

}  // namespace superkit
