#pragma once

#include <algorithm>
#include <vector>

#include "indpoly/engine.hpp"
#include "indpoly/graph.hpp"
#include "indpoly/poly.hpp"

namespace indpoly {

// Certificate that exactly one real root of `poly` (squarefree) lies in
// (lo, hi]. Either the signs at the endpoints differ and are nonzero, or hi
// is the root itself.
struct IsolatingInterval {
    Poly poly;
    Rat lo;
    Rat hi;
};

namespace detail {

inline int interval_root_count(const std::vector<Poly>& chain, const Rat& lo, const Rat& hi) {
    return sturm_count(chain, lo, hi);
}

// Restore the endpoint invariant: poly(lo) != 0, or hi is the exact root.
inline void normalize_interval(IsolatingInterval& iv, const std::vector<Poly>& chain) {
    while (iv.poly.sign_at(iv.lo) == 0) {
        Rat m = (iv.lo + iv.hi) / 2;
        if (iv.poly.sign_at(m) == 0) {
            // the midpoint is the unique root; snap hi onto it
            iv.hi = m;
            iv.lo = (iv.lo + m) / 2;
            return;
        }
        if (interval_root_count(chain, iv.lo, m) == 1)
            iv.hi = m;
        else
            iv.lo = m;
    }
}

}  // namespace detail

// Disjoint isolating intervals, one per distinct real root of P in (a,b],
// ordered by increasing root.
inline std::vector<IsolatingInterval> isolate_roots(const Poly& p, const Rat& a, const Rat& b) {
    if (p.is_zero()) throw PreconditionError("cannot isolate roots of the zero polynomial");
    if (!(a < b)) throw PreconditionError("isolation interval must satisfy a < b");
    Poly sf = squarefree_part(p);
    std::vector<IsolatingInterval> out;
    if (sf.degree() < 1) return out;
    auto chain = sturm_chain(sf);
    std::vector<std::pair<Rat, Rat>> work{{a, b}};
    while (!work.empty()) {
        auto [lo, hi] = work.back();
        work.pop_back();
        int count = detail::interval_root_count(chain, lo, hi);
        if (count == 0) continue;
        if (count == 1) {
            IsolatingInterval iv{sf, lo, hi};
            detail::normalize_interval(iv, chain);
            out.push_back(std::move(iv));
            continue;
        }
        Rat m = (lo + hi) / 2;
        work.push_back({lo, m});
        work.push_back({m, hi});
    }
    std::sort(out.begin(), out.end(),
              [](const IsolatingInterval& x, const IsolatingInterval& y) { return x.lo < y.lo; });
    return out;
}

// Shrink the interval to width <= target around the same root.
inline IsolatingInterval refine(IsolatingInterval iv, const Rat& width) {
    auto chain = sturm_chain(iv.poly);
    while (iv.hi - iv.lo > width) {
        Rat m = (iv.lo + iv.hi) / 2;
        if (detail::interval_root_count(chain, iv.lo, m) == 1)
            iv.hi = m;
        else
            iv.lo = m;
    }
    detail::normalize_interval(iv, chain);
    return iv;
}

inline Rat default_xi_width() {
    Rat w(1);
    w /= Rat(Int("1000000000000"));
    return w;
}

// Largest real independence root of G, certified to width <= `width`.
// Always lies in [-1, 0).
inline IsolatingInterval xi(const Graph& g, const Rat& width, PolyCache& cache) {
    if (g.order() < 1) throw PreconditionError("xi requires a nonempty graph");
    Poly p = independence_poly(g, cache);
    auto roots = isolate_roots(p, Rat(-1), Rat(0));
    if (!roots.empty()) return refine(roots.back(), width);
    // no root in (-1, 0]: the largest real root must be -1 itself
    Poly sf = squarefree_part(p);
    if (sf.sign_at(Rat(-1)) != 0)
        throw InternalError("no independence root found in [-1,0)");
    return IsolatingInterval{sf, Rat(-1) - width, Rat(-1)};
}

inline IsolatingInterval xi(const Graph& g) {
    return xi(g, default_xi_width(), global_cache());
}

// Sign of Q at the root certified by iv: exact, via gcd for the zero case
// and interval shrinking otherwise.
inline int sign_at_root(const Poly& q, const IsolatingInterval& iv) {
    if (q.is_zero()) return 0;
    if (iv.poly.sign_at(iv.hi) == 0) return q.sign_at(iv.hi);  // exact rational root
    Poly g = poly_gcd(iv.poly, q);
    if (g.degree() >= 1 &&
        detail::interval_root_count(sturm_chain(squarefree_part(g)), iv.lo, iv.hi) >= 1)
        return 0;
    // Q does not vanish at the root; shrink until Q is root-free and nonzero
    // over the bracket, then the sign at an endpoint is the sign at the root
    IsolatingInterval t = iv;
    auto chain = sturm_chain(t.poly);
    auto qchain = sturm_chain(squarefree_part(q));
    for (;;) {
        if (q.sign_at(t.lo) != 0 && detail::interval_root_count(qchain, t.lo, t.hi) == 0)
            return q.sign_at(t.lo);
        Rat m = (t.lo + t.hi) / 2;
        if (t.poly.sign_at(m) == 0) return q.sign_at(m);  // landed on the root
        if (detail::interval_root_count(chain, t.lo, m) == 1)
            t.hi = m;
        else
            t.lo = m;
    }
}

}  // namespace indpoly
