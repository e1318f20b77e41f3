#include "superkit/lagrangian.hpp"

#include <sstream>
#include <stdexcept>

namespace superkit {

namespace {
const ComplexScalar kHalf{Rational(1, 2)};
const ComplexScalar kI = ComplexScalar::i();

void require_split(const TransitionData& t) {
    if (!t.alpha.is_zero()) throw std::domain_error("non-split transport unsupported");
}
}  // namespace

const FieldComponents& Superfield::on(const std::string& chart) const {
    auto it = charts.find(chart);
    if (it == charts.end()) throw std::out_of_range("no components on chart " + chart);
    return it->second;
}

G2L apply_D_element(int a, const G2L& u) {
    LaurentFn u0p = u.c0.diff(LaurentFn::Var::Y);
    LaurentFn u1p = u.c1.diff(LaurentFn::Var::Y);
    LaurentFn u2p = u.c2.diff(LaurentFn::Var::Y);
    if (a == 1) {
        // d/deta^1(u) = u1 + u12 eta^2 ; -eta^2 du/dY = -u0' eta^2 + u1' eta^12
        return {u.c1, LaurentFn::zero(), u.c12 - u0p, u1p};
    }
    if (a == 2) {
        // d/deta^2(u) = u2 - u12 eta^1 ; -eta^1 du/dY = -u0' eta^1 - u2' eta^12
        return {u.c2, -u.c12 - u0p, LaurentFn::zero(), -u2p};
    }
    throw std::invalid_argument("derivation index must be 1 or 2");
}

G2L apply_D(int a, const FieldComponents& f) { return apply_D_element(a, f.as_element()); }

G2L bracket_check(const FieldComponents& f) {
    G2L u = f.as_element();
    G2L anti = apply_D_element(1, apply_D_element(2, u)) +
               apply_D_element(2, apply_D_element(1, u));
    G2L du{u.c0.diff(LaurentFn::Var::Y), u.c1.diff(LaurentFn::Var::Y),
           u.c2.diff(LaurentFn::Var::Y), u.c12.diff(LaurentFn::Var::Y)};
    return anti.scaled(kHalf) + du;
}

Density superparticle_density(const FieldComponents& f, ConjugationPolicy policy) {
    Density a = lift(apply_D(1, f));
    Density b = lift(apply_D(2, f));
    Density l = a * grassmann4_conj(b, policy) - b * grassmann4_conj(a, policy);
    return l.scaled(kHalf);
}

Density m_density(const FieldComponents& f, ConjugationPolicy policy) {
    Density a = lift(apply_D(1, f));
    Density b = lift(apply_D(2, f));
    Density m = a * grassmann4_conj(b, policy) + b * grassmann4_conj(a, policy);
    return m.scaled(kHalf);
}

DensityCochain lagrangian_cochain(const Superfield& field, const Atlas& atlas,
                                  ConjugationPolicy policy) {
    DensityCochain d;
    for (const auto& chart : atlas.charts)
        d.parts[chart] = superparticle_density(field.on(chart), policy);
    return d;
}

DensityCochain m_cochain(const Superfield& field, const Atlas& atlas,
                         ConjugationPolicy policy) {
    DensityCochain d;
    for (const auto& chart : atlas.charts) d.parts[chart] = m_density(field.on(chart), policy);
    return d;
}

G2L collapsed(const Density& d) { return collapse(d); }

LaurentFn berezin_top_of(const Density& d) { return collapse(d).c12; }

FormCochain berezin_integral(const DensityCochain& d) {
    FormCochain f;
    for (const auto& [chart, dens] : d.parts) f.parts[chart] = berezin_top_of(dens);
    return f;
}

FieldComponents transport_field(const FieldComponents& on_to, const TransitionData& t) {
    require_split(t);
    FieldComponents r;
    r.phi = on_to.phi.pullback(t.f);
    // psi_b eta^b = psi_b zeta^b_c theta^c
    for (int c = 0; c < 2; ++c) {
        LaurentFn acc;
        acc += on_to.psi1.pullback(t.f) * t.zeta[0][c];
        acc += on_to.psi2.pullback(t.f) * t.zeta[1][c];
        if (c == 0)
            r.psi1 = acc;
        else
            r.psi2 = acc;
    }
    r.F = on_to.F.pullback(t.f) * t.det_zeta();
    return r;
}

Superfield make_global(const FieldComponents& seed, const std::string& seed_chart,
                       const Atlas& atlas) {
    Superfield out;
    out.charts[seed_chart] = seed;
    for (const auto& chart : atlas.charts) {
        if (chart == seed_chart) continue;
        out.charts[chart] = transport_field(seed, atlas.transition(chart, seed_chart));
    }
    return out;
}

bool is_global(const Superfield& field, const Atlas& atlas) {
    for (const auto& [key, t] : atlas.transitions) {
        if (!field.has(key.first) || !field.has(key.second)) return false;
        FieldComponents expect = transport_field(field.on(key.second), t);
        const FieldComponents& got = field.on(key.first);
        if (!(expect.phi == got.phi && expect.psi1 == got.psi1 && expect.psi2 == got.psi2 &&
              expect.F == got.F))
            return false;
    }
    return true;
}

Density transport_density(const Density& on_from, const TransitionData& t,
                          const TransitionData& t_inv) {
    require_split(t);
    require_split(t_inv);

    // Coefficients through the reduced map.
    Density mapped;
    for (int i = 0; i < 16; ++i) mapped.c[i] = on_from.c[i].pullback(t_inv.f);

    // theta^b -> zeta^b_{VU,c} eta^c,  conjugated weights on the barred frame.
    std::array<Density, 4> images;
    for (unsigned b = 0; b < 2; ++b) {
        Density img, img_bar;
        for (unsigned c = 0; c < 2; ++c) {
            img = img + Density::generator(c, t_inv.zeta[b][c]);
            img_bar = img_bar + Density::generator(c + 2, t_inv.zeta[b][c].conj());
        }
        images[b] = img;
        images[b + 2] = img_bar;
    }
    Density sub = substitute_generators(mapped, images);

    G2L ber = berezinian(t_inv);
    if (!ber.c1.is_zero() || !ber.c2.is_zero() || !ber.c12.is_zero())
        throw std::domain_error("non-split transport unsupported");
    return sub * Density::scalar(ber.c0);
}

OverlapDensity coboundary_super(const DensityCochain& l, const Atlas& atlas) {
    OverlapDensity out;
    for (const auto& key : atlas.pairs()) {
        const TransitionData& t = atlas.transition(key.first, key.second);
        const TransitionData& tinv = atlas.transition(key.second, key.first);
        Density moved = transport_density(l.parts.at(key.first), t, tinv);
        out[key] = l.parts.at(key.second) - moved;
    }
    return out;
}

OverlapForm coboundary_reduced(const FormCochain& l, const Atlas& atlas) {
    OverlapForm out;
    for (const auto& key : atlas.pairs()) {
        const TransitionData& tinv = atlas.transition(key.second, key.first);
        // f_VU^*(c dx) = (c o f_VU) f_VU' dy
        LaurentFn pulled = l.parts.at(key.first).pullback(tinv.f) * tinv.f_deriv();
        out[key] = l.parts.at(key.second) - pulled;
    }
    return out;
}

OverlapForm good_field_residual(const Superfield& field, const Atlas& atlas,
                                ConjugationPolicy policy) {
    DensityCochain l = lagrangian_cochain(field, atlas, policy);
    FormCochain reduced = berezin_integral(l);
    OverlapDensity super_cob = coboundary_super(l, atlas);
    OverlapForm red_cob = coboundary_reduced(reduced, atlas);
    OverlapForm out;
    for (const auto& [key, dens] : super_cob)
        out[key] = berezin_top_of(dens) - red_cob.at(key);
    return out;
}

G2L g2_real_part(const G2L& g) {
    return {g.c0.real_part(), g.c1.real_part(), g.c2.real_part(), g.c12.real_part()};
}

G2L g2_imag_part(const G2L& g) {
    return {g.c0.imag_part(), g.c1.imag_part(), g.c2.imag_part(), g.c12.imag_part()};
}

GlobalLagrangianReport global_lagrangian_check(const Atlas& atlas, ConjugationPolicy policy,
                                               PushforwardConvention conv) {
    CocycleOutcome oc = superconformal_cocycle(atlas, conv);
    if (!oc.ok() || !oc.cocycle->diagonal)
        throw std::domain_error("atlas is not maximally superconformal");
    GlobalLagrangianReport rep;
    rep.real = true;
    for (const auto& [key, mat] : oc.cocycle->entries) {
        G2L g = hermitian_pair(mat[0][0], mat[1][1], policy);
        if (!g2_imag_part(g).is_zero()) rep.real = false;
        rep.G[key] = g;
    }
    return rep;
}

CompatibilityReport compatibility_check(const G2L& h, const Atlas& atlas,
                                        ConjugationPolicy policy) {
    CompatibilityReport rep;
    if (atlas.charts.size() != 2)
        throw std::invalid_argument("compatibility probe expects the two-chart atlas");
    const std::string& u = atlas.charts[0];
    const std::string& v = atlas.charts[1];
    const TransitionData& t = atlas.transition(u, v);
    const TransitionData& tinv = atlas.transition(v, u);

    std::vector<std::pair<std::string, FieldComponents>> probes;
    auto add = [&probes](const std::string& name, FieldComponents f) {
        probes.emplace_back(name, std::move(f));
    };
    std::vector<std::pair<std::string, FieldComponents>> basis;
    for (long k = -1; k <= 1; ++k) {
        LaurentFn mono = LaurentFn::monomial(ComplexScalar::one(), k);
        std::ostringstream tag;
        tag << "y^" << k;
        basis.emplace_back("phi=" + tag.str(), FieldComponents{mono, {}, {}, {}});
        basis.emplace_back("psi1=" + tag.str(), FieldComponents{{}, mono, {}, {}});
        basis.emplace_back("psi2=" + tag.str(), FieldComponents{{}, {}, mono, {}});
        basis.emplace_back("F=" + tag.str(), FieldComponents{{}, {}, {}, mono});
    }
    for (const auto& [n, f] : basis) add(n, f);
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j) {
            add(basis[i].first + " + " + basis[j].first, basis[i].second + basis[j].second);
            add(basis[i].first + " + i*" + basis[j].first,
                basis[i].second + basis[j].second.scaled(kI));
        }

    for (const auto& [name, seed] : probes) {
        Superfield field = make_global(seed, v, atlas);
        Density lu = superparticle_density(field.on(u), policy);
        Density lv = superparticle_density(field.on(v), policy);
        G2L moved = collapse(transport_density(lu, t, tinv));
        G2L residual = moved - h * collapse(lv);
        double mag = std::max(std::max(residual.c0.max_coeff_abs(), residual.c1.max_coeff_abs()),
                              std::max(residual.c2.max_coeff_abs(), residual.c12.max_coeff_abs()));
        if (mag > 0 && rep.compatible) {
            rep.compatible = false;
            rep.witness = name;
        }
        rep.max_residual = std::max(rep.max_residual, mag);
    }
    return rep;
}

}  // namespace superkit
