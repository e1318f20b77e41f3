#include "superkit/atlas.hpp"

#include <sstream>
#include <stdexcept>

namespace superkit {

namespace {

void require_holomorphic(const LaurentFn& u, const char* what) {
    if (!u.is_holomorphic())
        throw std::invalid_argument(std::string(what) + " must be holomorphic");
}

/// u(X) with X = f(y-body) + soul*eta^12, for holomorphic u. Exact nilpotent
/// Taylor expansion: u(f) + u'(f)*soul*eta^12.
G2L substitute_even(const LaurentFn& u, const MonomialMap& f, const LaurentFn& soul) {
    G2L r = G2L::scalar(u.pullback(f));
    if (!soul.is_zero()) r.c12 = u.diff(LaurentFn::Var::Y).pullback(f) * soul;
    return r;
}

}  // namespace

TransitionData::TransitionData(std::string from_, std::string to_, MonomialMap f_,
                               LaurentFn alpha_, Mat2L zeta_)
    : from(std::move(from_)), to(std::move(to_)), f(f_), alpha(std::move(alpha_)),
      zeta(std::move(zeta_)) {
    require_holomorphic(alpha, "alpha");
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) require_holomorphic(zeta[a][b], "zeta");
    LaurentFn det = det_zeta();
    if (!det.is_monomial())
        throw std::invalid_argument("det zeta is not a unit of the Laurent ring");
}

LaurentFn TransitionData::f_deriv() const {
    LaurentFn r;
    ComplexScalar c = f.coeff * ComplexScalar(Rational(f.exponent));
    r.add_term(f.exponent - 1, 0, c);
    return r;
}

LaurentFn TransitionData::det_zeta() const {
    return zeta[0][0] * zeta[1][1] - zeta[0][1] * zeta[1][0];
}

TransitionData TransitionData::inverse() const {
    MonomialMap finv = f.inverse();
    // zeta_inv = adj(zeta)/det, entries re-expressed in the target coordinate.
    LaurentFn det = det_zeta();
    Mat2L zinv;
    zinv[0][0] = zeta[1][1].div_by_monomial(det).pullback(finv);
    zinv[0][1] = (-zeta[0][1]).div_by_monomial(det).pullback(finv);
    zinv[1][0] = (-zeta[1][0]).div_by_monomial(det).pullback(finv);
    zinv[1][1] = zeta[0][0].div_by_monomial(det).pullback(finv);

    // X = finv(Y) + alpha_inv(Y) eta^12 with
    // alpha_inv = -(alpha o finv) det(zeta_inv) / (f' o finv).
    LaurentFn alpha_inv;
    if (!alpha.is_zero()) {
        LaurentFn det_inv = zinv[0][0] * zinv[1][1] - zinv[0][1] * zinv[1][0];
        LaurentFn fp = f_deriv().pullback(finv);
        alpha_inv = -(alpha.pullback(finv) * det_inv).div_by_monomial(fp);
    }
    return {to, from, finv, alpha_inv, zinv};
}

TransitionData TransitionData::compose(const TransitionData& inner) const {
    if (inner.to != from)
        throw std::invalid_argument("transition composition chart mismatch");
    if (!alpha.is_zero() || !inner.alpha.is_zero())
        throw std::invalid_argument("composition of non-split transitions unsupported");
    Mat2L z;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            LaurentFn acc;
            for (int c = 0; c < 2; ++c) acc += zeta[a][c].pullback(inner.f) * inner.zeta[c][b];
            z[a][b] = acc;
        }
    return {inner.from, to, f.compose(inner.f), LaurentFn::zero(), z};
}

const TransitionData& Atlas::transition(const std::string& from, const std::string& to) const {
    auto it = transitions.find({from, to});
    if (it == transitions.end())
        throw std::out_of_range("no transition " + from + " -> " + to);
    return it->second;
}

void Atlas::add_transition(TransitionData t) {
    transitions[{t.from, t.to}] = std::move(t);
}

void Atlas::add_transition_pair(const TransitionData& t) {
    TransitionData inv = t.inverse();
    add_transition(t);
    add_transition(std::move(inv));
}

std::vector<std::pair<std::string, std::string>> Atlas::pairs() const {
    std::vector<std::pair<std::string, std::string>> r;
    r.reserve(transitions.size());
    for (const auto& [key, t] : transitions) r.push_back(key);
    return r;
}

Atlas build_projective_atlas(const SplitModelSpec& spec) {
    if (spec.lambda1.is_zero() || spec.lambda2.is_zero())
        throw std::invalid_argument("lambda scalings must be nonzero");
    Atlas atlas;
    atlas.charts = {"U", "V"};
    Mat2L zeta;
    zeta[0][0] = LaurentFn::monomial(spec.lambda1, -spec.k1);
    zeta[1][1] = LaurentFn::monomial(spec.lambda2, -spec.k2);
    TransitionData uv("U", "V", MonomialMap(ComplexScalar::one(), -1), spec.alpha, zeta);
    atlas.add_transition_pair(uv);
    return atlas;
}

SuperJacobian super_jacobian(const TransitionData& t) {
    SuperJacobian j;
    j.a = G2L::scalar(t.f_deriv());
    if (!t.alpha.is_zero()) j.a.c12 = t.alpha.diff(LaurentFn::Var::Y);
    // dY/dtheta^1 = alpha theta^2, dY/dtheta^2 = -alpha theta^1
    j.b[0] = G2L::eta2(t.alpha);
    j.b[1] = G2L::eta1(-t.alpha);
    for (int a = 0; a < 2; ++a) {
        j.c[a] = G2L::eta1(t.zeta[a][0].diff(LaurentFn::Var::Y)) +
                 G2L::eta2(t.zeta[a][1].diff(LaurentFn::Var::Y));
        for (int b = 0; b < 2; ++b) j.d[a][b] = t.zeta[a][b];
    }
    return j;
}

G2L berezinian(const SuperJacobian& j) {
    LaurentFn det = j.d[0][0] * j.d[1][1] - j.d[0][1] * j.d[1][0];
    if (!det.is_monomial()) throw std::domain_error("degenerate odd block");
    // D^{-1} = adj / det
    Mat2L dinv;
    dinv[0][0] = j.d[1][1].div_by_monomial(det);
    dinv[0][1] = (-j.d[0][1]).div_by_monomial(det);
    dinv[1][0] = (-j.d[1][0]).div_by_monomial(det);
    dinv[1][1] = j.d[0][0].div_by_monomial(det);

    G2L schur = j.a;
    for (int b = 0; b < 2; ++b)
        for (int a = 0; a < 2; ++a) schur = schur - j.b[b] * G2L::scalar(dinv[b][a]) * j.c[a];

    return {schur.c0.div_by_monomial(det), schur.c1.div_by_monomial(det),
            schur.c2.div_by_monomial(det), schur.c12.div_by_monomial(det)};
}

G2L berezinian(const TransitionData& t) { return berezinian(super_jacobian(t)); }

bool PushforwardResult::zero_residual() const {
    for (const auto& row : residual)
        for (const auto& u : row)
            if (!u.is_zero()) return false;
    return true;
}

bool PushforwardResult::diagonal() const {
    return coeffs[0][1].is_zero() && coeffs[1][0].is_zero();
}

PushforwardResult pushforward_superconformal(const TransitionData& t,
                                             const TransitionData& t_inv,
                                             PushforwardConvention conv) {
    PushforwardResult out;
    const LaurentFn det_vu = t_inv.det_zeta();
    const LaurentFn fprime = t.f_deriv();

    for (int a = 0; a < 2; ++a) {
        // Soul sign from the theta ordering: the functorial chain rule gives
        // +theta^12 for a=1 and -theta^12 for a=2; the column convention
        // flips both.
        int s = (a == 0) ? 1 : -1;
        if (conv == PushforwardConvention::JacobianColumn) s = -s;

        for (int b = 0; b < 2; ++b) {
            G2L g = substitute_even(t.zeta[b][a], t_inv.f, t_inv.alpha);
            LaurentFn soul = t.zeta[b][a].diff(LaurentFn::Var::Y).pullback(t_inv.f) * det_vu;
            if (s < 0) soul = -soul;
            g.c12 += soul;
            out.coeffs[b][a] = g;
        }

        // d/dY part of the pushforward: a=1 carries (alpha - f') theta^2,
        // a=2 carries -(f' + alpha) theta^1.
        LaurentFn factor = (a == 0) ? (t.alpha - fprime) : (-(fprime + t.alpha));
        int tloc = (a == 0) ? 1 : 0;  // which theta appears
        std::array<LaurentFn, 2> lhs;
        for (int c = 0; c < 2; ++c)
            lhs[c] = factor.pullback(t_inv.f) * t_inv.zeta[tloc][c];

        // D_{V,b} = d/deta^b - eta^{sigma(b)} d/dY with sigma swapping 1,2:
        // the candidate coefficients contribute -body(g^b_a) eta^{sigma(b)}.
        std::array<LaurentFn, 2> rhs;
        rhs[1] = -out.coeffs[0][a].c0;  // b=1 pairs with eta^2
        rhs[0] = -out.coeffs[1][a].c0;  // b=2 pairs with eta^1
        for (int c = 0; c < 2; ++c) out.residual[a][c] = lhs[c] - rhs[c];
    }

    // Diagonal solvability defects, normalised so their difference isolates
    // the odd-even mixing term.
    if (t.zeta[0][1].is_zero() && t.zeta[1][0].is_zero()) {
        LaurentFn det_uv = t.det_zeta().pullback(t_inv.f);
        LaurentFn fp = fprime.pullback(t_inv.f);
        LaurentFn al = t.alpha.pullback(t_inv.f);
        std::array<LaurentFn, 3> ob;
        ob[0] = det_uv - fp + al;
        ob[1] = det_uv - fp - al;
        ob[2] = ob[0] - ob[1];  // = 2 alpha
        out.alpha_obstruction = ob;
    }
    return out;
}

const G2L& SuperconformalCocycle::diag(const std::string& from, const std::string& to,
                                       int a) const {
    const auto& m = entries.at({from, to});
    return m[a - 1][a - 1];
}

CocycleOutcome superconformal_cocycle(const Atlas& atlas, PushforwardConvention conv) {
    CocycleOutcome out;
    SuperconformalCocycle g;
    g.diagonal = true;
    for (const auto& key : atlas.pairs()) {
        const TransitionData& t = atlas.transition(key.first, key.second);
        const TransitionData& tinv = atlas.transition(key.second, key.first);
        PushforwardResult pf = pushforward_superconformal(t, tinv, conv);
        if (!pf.zero_residual()) {
            out.failures.push_back({key, pf.residual});
            continue;
        }
        if (!pf.diagonal()) g.diagonal = false;
        g.entries[key] = pf.coeffs;
    }
    if (out.failures.empty()) out.cocycle = std::move(g);
    return out;
}

G2L express_via(const G2L& g, const TransitionData& t) {
    if (!g.c1.is_zero() || !g.c2.is_zero())
        throw std::invalid_argument("express_via expects an even element");
    G2L r = substitute_even(g.c0, t.f, t.alpha);
    r.c12 += g.c12.pullback(t.f) * t.det_zeta();
    return r;
}

std::vector<TripleResidual> check_cocycle_condition(const SuperconformalCocycle& g,
                                                    const Atlas& atlas) {
    if (!g.diagonal) throw std::invalid_argument("cocycle condition check needs a diagonal cocycle");
    std::vector<TripleResidual> out;
    for (const auto& tri : atlas.triples) {
        const auto& [u, v, w] = tri;
        const TransitionData& t_wv = atlas.transition(w, v);
        for (int a = 1; a <= 2; ++a) {
            G2L guv = g.diag(u, v, a);
            G2L gvw = g.diag(v, w, a);
            G2L guw = g.diag(u, w, a);
            G2L res = express_via(guv, t_wv) * gvw - guw;
            out.push_back({tri, a, res});
        }
    }
    return out;
}

MaximalityVerdict classify_maximal(const SplitModelSpec& spec) {
    MaximalityVerdict v;
    if (!spec.alpha.is_zero()) v.reasons.push_back("alpha != 0");
    if (spec.k1 + spec.k2 != 2) v.reasons.push_back("k1 + k2 != 2");
    if (spec.det_lambda() != -ComplexScalar::one()) v.reasons.push_back("det lambda != -1");
    v.maximal = v.reasons.empty();
    return v;
}

G2L closed_form_cocycle(const SplitModelSpec& spec, int a, PushforwardConvention conv) {
    const ComplexScalar& lam = (a == 1) ? spec.lambda1 : spec.lambda2;
    long k = (a == 1) ? spec.k1 : spec.k2;
    ComplexScalar det_inv = ComplexScalar::one() / spec.det_lambda();
    ComplexScalar soul = ComplexScalar(Rational(k)) * lam * det_inv;
    // soul coefficient = sgn * k * lambda_a / det(lambda) with
    // sgn = -(-1)^{a-1} for ChainRule and +(-1)^{a-1} for JacobianColumn.
    int sign = (a == 1) ? 1 : -1;
    if (conv == PushforwardConvention::ChainRule) sign = -sign;
    if (sign < 0) soul = -soul;
    G2L g = G2L::scalar(LaurentFn::monomial(lam, k));
    g.c12 = LaurentFn::monomial(soul, k + 1 - spec.k1 - spec.k2);
    return g;
}

G2L printed_cocycle_form(const SplitModelSpec& spec, int a) {
    const ComplexScalar& lam = (a == 1) ? spec.lambda1 : spec.lambda2;
    long k = (a == 1) ? spec.k1 : spec.k2;
    ComplexScalar soul = ComplexScalar(Rational(k)) * lam;
    if (a == 1) soul = -soul;  // -(-1)^{a-1}
    G2L g = G2L::scalar(LaurentFn::monomial(lam, k));
    g.c12 = LaurentFn::monomial(soul, k - 1);
    return g;
}

}  // namespace superkit
