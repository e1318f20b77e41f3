#pragma once

#include "superkit/circle.hpp"
#include "superkit/laurent.hpp"

#include <array>
#include <string>

namespace superkit {

/// Sign convention for complex conjugation on the top odd form.
///   Fix:    conj is an order-preserving ring map, conj(eta^12) = +eta^12
///   Negate: conj is order-reversing,               conj(eta^12) = -eta^12
enum class ConjugationPolicy { Fix, Negate };

/// Rank-2 Grassmann algebra element over a coefficient ring R:
///   c0 + c1*eta1 + c2*eta2 + c12*eta1^eta2
template <class R>
struct GrassmannElement {
    R c0{}, c1{}, c2{}, c12{};

    GrassmannElement() = default;
    GrassmannElement(R a0, R a1, R a2, R a12)
        : c0(std::move(a0)), c1(std::move(a1)), c2(std::move(a2)), c12(std::move(a12)) {}

    static GrassmannElement scalar(const R& v) { return {v, R{}, R{}, R{}}; }
    static GrassmannElement eta1(const R& v) { return {R{}, v, R{}, R{}}; }
    static GrassmannElement eta2(const R& v) { return {R{}, R{}, v, R{}}; }
    static GrassmannElement top(const R& v) { return {R{}, R{}, R{}, v}; }

    bool is_zero() const {
        return c0.is_zero() && c1.is_zero() && c2.is_zero() && c12.is_zero();
    }

    friend GrassmannElement operator+(const GrassmannElement& a, const GrassmannElement& b) {
        return {a.c0 + b.c0, a.c1 + b.c1, a.c2 + b.c2, a.c12 + b.c12};
    }
    friend GrassmannElement operator-(const GrassmannElement& a, const GrassmannElement& b) {
        return {a.c0 - b.c0, a.c1 - b.c1, a.c2 - b.c2, a.c12 - b.c12};
    }
    friend GrassmannElement operator-(const GrassmannElement& a) {
        return {-a.c0, -a.c1, -a.c2, -a.c12};
    }
    friend GrassmannElement operator*(const GrassmannElement& a, const GrassmannElement& b) {
        return {a.c0 * b.c0,
                a.c0 * b.c1 + a.c1 * b.c0,
                a.c0 * b.c2 + a.c2 * b.c0,
                a.c0 * b.c12 + a.c12 * b.c0 + a.c1 * b.c2 - a.c2 * b.c1};
    }
    bool operator==(const GrassmannElement& o) const {
        return c0 == o.c0 && c1 == o.c1 && c2 == o.c2 && c12 == o.c12;
    }
    bool operator!=(const GrassmannElement& o) const { return !(*this == o); }

    GrassmannElement scaled(const ComplexScalar& s) const {
        R f{s};
        return {c0 * f, c1 * f, c2 * f, c12 * f};
    }
};

template <class R>
GrassmannElement<R> grassmann_conj(const GrassmannElement<R>& a, ConjugationPolicy policy) {
    R t = a.c12.conj();
    if (policy == ConjugationPolicy::Negate) t = -t;
    return {a.c0.conj(), a.c1.conj(), a.c2.conj(), t};
}

/// <a, b> = a * conj(b)
template <class R>
GrassmannElement<R> hermitian_pair(const GrassmannElement<R>& a, const GrassmannElement<R>& b,
                                   ConjugationPolicy policy) {
    return a * grassmann_conj(b, policy);
}

template <class R>
const R& body(const GrassmannElement<R>& a) {
    return a.c0;
}

template <class R>
const R& berezin_top(const GrassmannElement<R>& a) {
    return a.c12;
}

inline GrassmannElement<CircleFn> restrict_to_circle(const GrassmannElement<LaurentFn>& a) {
    return {a.c0.restrict_to_circle(), a.c1.restrict_to_circle(), a.c2.restrict_to_circle(),
            a.c12.restrict_to_circle()};
}

// ---------------------------------------------------------------------------
// Rank-4 refinement: exterior algebra on eta1, eta2, etabar1, etabar2.
//
// Hermitian pairings of superfield derivatives produce terms in the conjugate
// odd frame. Keeping the barred generators separate is what makes density
// transport well defined (eta transports with zeta, etabar with conj(zeta));
// the familiar rank-2 expressions are recovered by the quotient etabar -> eta.
// ---------------------------------------------------------------------------

/// Basis monomials are indexed by bitmask: bit0 = eta1, bit1 = eta2,
/// bit2 = etabar1, bit3 = etabar2, generators in increasing bit order.
template <class R>
struct Grassmann4 {
    std::array<R, 16> c{};

    static constexpr unsigned kEta1 = 1u, kEta2 = 2u, kBar1 = 4u, kBar2 = 8u;

    Grassmann4() = default;

    static Grassmann4 scalar(const R& v) {
        Grassmann4 g;
        g.c[0] = v;
        return g;
    }
    static Grassmann4 generator(unsigned bit, const R& v) {
        Grassmann4 g;
        g.c[1u << bit] = v;
        return g;
    }

    bool is_zero() const {
        for (const auto& v : c)
            if (!v.is_zero()) return false;
        return true;
    }

    friend Grassmann4 operator+(const Grassmann4& a, const Grassmann4& b) {
        Grassmann4 r;
        for (int i = 0; i < 16; ++i) r.c[i] = a.c[i] + b.c[i];
        return r;
    }
    friend Grassmann4 operator-(const Grassmann4& a, const Grassmann4& b) {
        Grassmann4 r;
        for (int i = 0; i < 16; ++i) r.c[i] = a.c[i] - b.c[i];
        return r;
    }
    friend Grassmann4 operator-(const Grassmann4& a) {
        Grassmann4 r;
        for (int i = 0; i < 16; ++i) r.c[i] = -a.c[i];
        return r;
    }

    /// Koszul sign for merging disjoint monomials m * n in canonical order.
    static int merge_sign(unsigned m, unsigned n) {
        int swaps = 0;
        for (unsigned j = 0; j < 4; ++j) {
            if (!(n & (1u << j))) continue;
            for (unsigned i = j + 1; i < 4; ++i)
                if (m & (1u << i)) ++swaps;
        }
        return (swaps % 2 == 0) ? 1 : -1;
    }

    friend Grassmann4 operator*(const Grassmann4& a, const Grassmann4& b) {
        Grassmann4 r;
        for (unsigned m = 0; m < 16; ++m) {
            if (a.c[m].is_zero()) continue;
            for (unsigned n = 0; n < 16; ++n) {
                if (m & n) continue;
                if (b.c[n].is_zero()) continue;
                R term = a.c[m] * b.c[n];
                if (merge_sign(m, n) < 0) term = -term;
                r.c[m | n] = r.c[m | n] + term;
            }
        }
        return r;
    }

    bool operator==(const Grassmann4& o) const { return c == o.c; }
    bool operator!=(const Grassmann4& o) const { return !(*this == o); }

    Grassmann4 scaled(const ComplexScalar& s) const {
        Grassmann4 r;
        R f{s};
        for (int i = 0; i < 16; ++i) r.c[i] = c[i] * f;
        return r;
    }
};

/// Embed a rank-2 element on the unbarred generators.
template <class R>
Grassmann4<R> lift(const GrassmannElement<R>& a) {
    Grassmann4<R> g;
    g.c[0] = a.c0;
    g.c[1] = a.c1;
    g.c[2] = a.c2;
    g.c[3] = a.c12;
    return g;
}

namespace detail {

/// Sign of the permutation sorting `seq` ascending (entries distinct).
inline int sort_sign(std::array<unsigned, 4>& seq, int len) {
    int swaps = 0;
    for (int i = 0; i < len; ++i)
        for (int j = i + 1; j < len; ++j)
            if (seq[i] > seq[j]) ++swaps;
    return (swaps % 2 == 0) ? 1 : -1;
}

}  // namespace detail

/// Antilinear involution eta^a <-> etabar^a. Fix keeps generator order,
/// Negate reverses it; both square to the identity.
template <class R>
Grassmann4<R> grassmann4_conj(const Grassmann4<R>& a, ConjugationPolicy policy) {
    Grassmann4<R> r;
    for (unsigned m = 0; m < 16; ++m) {
        if (a.c[m].is_zero()) continue;
        std::array<unsigned, 4> seq{};
        int len = 0;
        for (unsigned b = 0; b < 4; ++b)
            if (m & (1u << b)) seq[len++] = b ^ 2u;  // swap eta <-> etabar
        if (policy == ConjugationPolicy::Negate) {
            for (int i = 0; i < len / 2; ++i) std::swap(seq[i], seq[len - 1 - i]);
        }
        std::array<unsigned, 4> sorted = seq;
        int sign = detail::sort_sign(sorted, len);
        unsigned target = 0;
        for (int i = 0; i < len; ++i) target |= 1u << seq[i];
        R v = a.c[m].conj();
        if (sign < 0) v = -v;
        r.c[target] = r.c[target] + v;
    }
    return r;
}

/// Quotient etabar^a -> eta^a (an algebra map onto the rank-2 algebra).
template <class R>
GrassmannElement<R> collapse(const Grassmann4<R>& a) {
    GrassmannElement<R> r;
    for (unsigned m = 0; m < 16; ++m) {
        if (a.c[m].is_zero()) continue;
        unsigned eta = m & 3u;
        unsigned bar = (m >> 2) & 3u;
        if (eta & bar) continue;  // eta^a eta^a = 0 after identification
        int sign = Grassmann4<R>::merge_sign(eta, bar);
        unsigned target = eta | bar;
        R v = a.c[m];
        if (sign < 0) v = -v;
        switch (target) {
            case 0: r.c0 = r.c0 + v; break;
            case 1: r.c1 = r.c1 + v; break;
            case 2: r.c2 = r.c2 + v; break;
            case 3: r.c12 = r.c12 + v; break;
            default: break;
        }
    }
    return r;
}

/// Substitute each odd generator by a linear combination of generators
/// (coefficients already expressed in the target chart). `images[b]` is the
/// image of generator bit b.
template <class R>
Grassmann4<R> substitute_generators(const Grassmann4<R>& a,
                                    const std::array<Grassmann4<R>, 4>& images) {
    Grassmann4<R> r;
    for (unsigned m = 0; m < 16; ++m) {
        if (a.c[m].is_zero()) continue;
        Grassmann4<R> term = Grassmann4<R>::scalar(a.c[m]);
        for (unsigned b = 0; b < 4; ++b)
            if (m & (1u << b)) term = term * images[b];
        r = r + term;
    }
    return r;
}

}  // namespace superkit
