#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "indpoly/engine.hpp"
#include "indpoly/roots.hpp"

namespace indpoly {

enum class Relation {
    Equivalent,
    FirstStrictlyLess,   // H < G
    SecondStrictlyLess,  // G < H
    Incomparable,
};

struct CompareResult {
    Relation relation;
    // for Incomparable: two points where I(H)-I(G) takes opposite signs;
    // for strict relations: the sample points certifying sign constancy
    std::vector<Rat> witnesses;
    IsolatingInterval xi_left;
    IsolatingInterval xi_right;
};

inline bool is_equivalent(const Graph& h, const Graph& g, PolyCache& cache) {
    return independence_poly(h, cache) == independence_poly(g, cache);
}

inline bool is_equivalent(const Graph& h, const Graph& g) {
    return is_equivalent(h, g, global_cache());
}

namespace detail {

// Sample points inside every root-free gap of (xiG, 0), given the isolating
// intervals of D's roots to the right of xi(G). Returns nullopt only in the
// degenerate case of nothing to sample (cannot happen: 0 is a root of D).
inline std::vector<Rat> gap_samples(Rat left, const std::vector<IsolatingInterval>& roots) {
    std::vector<Rat> samples;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (left < roots[i].lo) samples.push_back((left + roots[i].lo) / 2);
        left = roots[i].hi;
    }
    if (left < 0) samples.push_back(left / 2);
    return samples;
}

// True when the root bracketed by iv equals the root of `other` inside it
// (their polynomials share a root in the overlap).
inline bool shares_root(const IsolatingInterval& iv, const Poly& other) {
    Poly g = poly_gcd(iv.poly, other);
    if (g.degree() < 1) return false;
    return sturm_count(sturm_chain(squarefree_part(g)), iv.lo, iv.hi) >= 1;
}

}  // namespace detail

// Exact decision of H <= G in the independence-polynomial order:
// I(H,x) >= I(G,x) for all x in [xi(G), 0].
inline bool is_preceq(const Graph& h, const Graph& g, PolyCache& cache,
                      std::vector<Rat>* transcript = nullptr) {
    if (h.order() < 1 || g.order() < 1)
        throw PreconditionError("comparison requires nonempty graphs");
    Poly ih = independence_poly(h, cache);
    Poly ig = independence_poly(g, cache);
    Poly d = ih - ig;
    if (d.is_zero()) return true;

    // behaviour as x -> 0^-: the lowest nonzero term must be positive there
    int k = 0;
    while (sign_of(d.coeff(k)) == 0) ++k;
    int lowSign = sign_of(d.coeff(k)) * (k % 2 == 0 ? 1 : -1);
    if (lowSign != 1) return false;

    // endpoint: D(xi(G)) = I(H)(xi(G)) since I(G) vanishes there
    IsolatingInterval xiG = xi(g, default_xi_width(), cache);
    if (sign_at_root(ih, xiG) < 0) return false;

    // interior: D must be nonnegative on every gap between its roots in
    // (xi(G), 0]; even-multiplicity touches are fine
    bool dVanishesAtXi = sign_at_root(d, xiG) == 0;
    auto roots = isolate_roots(d, xiG.lo, Rat(0));
    std::vector<IsolatingInterval> kept;
    for (auto& r : roots) {
        // drop the root equal to xi(G) itself (only possible when D(xi)=0
        // and the brackets overlap and the polys share a root there)
        if (dVanishesAtXi && r.lo < xiG.hi && xiG.lo < r.hi &&
            detail::shares_root(r, xiG.poly)) {
            continue;
        }
        // separate from xi(G): refine both brackets until strictly disjoint
        while (!(r.hi <= xiG.lo) && !(xiG.hi < r.lo)) {
            r = refine(r, (r.hi - r.lo) / 4);
            xiG = refine(xiG, (xiG.hi - xiG.lo) / 4);
        }
        if (r.hi <= xiG.lo) continue;  // strictly left of xi(G)
        kept.push_back(std::move(r));
    }
    // make consecutive brackets strictly disjoint so gaps are sampleable
    for (std::size_t i = 0; i + 1 < kept.size(); ++i)
        while (!(kept[i].hi < kept[i + 1].lo)) {
            kept[i] = refine(kept[i], (kept[i].hi - kept[i].lo) / 4);
            kept[i + 1] = refine(kept[i + 1], (kept[i + 1].hi - kept[i + 1].lo) / 4);
        }
    for (const Rat& s : detail::gap_samples(xiG.hi, kept)) {
        if (transcript) transcript->push_back(s);
        if (d.sign_at(s) < 0) return false;
    }
    return true;
}

inline bool is_preceq(const Graph& h, const Graph& g) {
    return is_preceq(h, g, global_cache());
}

inline CompareResult compare(const Graph& h, const Graph& g, PolyCache& cache) {
    Poly ih = independence_poly(h, cache);
    Poly ig = independence_poly(g, cache);
    CompareResult res{Relation::Equivalent,
                      {},
                      xi(h, default_xi_width(), cache),
                      xi(g, default_xi_width(), cache)};
    if (ih == ig) return res;
    std::vector<Rat> transcript;
    if (is_preceq(h, g, cache, &transcript)) {
        res.relation = Relation::FirstStrictlyLess;
        res.witnesses = std::move(transcript);
        return res;
    }
    transcript.clear();
    if (is_preceq(g, h, cache, &transcript)) {
        res.relation = Relation::SecondStrictlyLess;
        res.witnesses = std::move(transcript);
        return res;
    }
    res.relation = Relation::Incomparable;
    // witness points with opposite signs of D = I(H)-I(G): scan -k/64 first
    Poly d = ih - ig;
    std::optional<Rat> pos, neg;
    for (int k = 1; k < 64 && (!pos || !neg); ++k) {
        Rat p = make_rat(-k, 64);
        int s = d.sign_at(p);
        if (s > 0 && !pos) pos = p;
        if (s < 0 && !neg) neg = p;
    }
    if (!pos || !neg) {
        // subdivide: sample every root-free gap of D over (-1, 0)
        for (const Rat& s : detail::gap_samples(Rat(-1), isolate_roots(d, Rat(-1), Rat(0)))) {
            int sg = d.sign_at(s);
            if (sg > 0 && !pos) pos = s;
            if (sg < 0 && !neg) neg = s;
        }
    }
    if (pos && neg) {
        res.witnesses.push_back(*neg);
        res.witnesses.push_back(*pos);
    }
    return res;
}

inline CompareResult compare(const Graph& h, const Graph& g) {
    return compare(h, g, global_cache());
}

}  // namespace indpoly
