#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "indpoly/canonical.hpp"
#include "indpoly/graph.hpp"
#include "indpoly/wellcovered.hpp"

namespace indpoly {

inline Graph make_path(int n) {
    if (n < 1) throw PreconditionError("path requires n >= 1");
    GraphBuilder b(n);
    for (int i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
    return b.take();
}

inline Graph make_star(int n) {
    if (n < 1) throw PreconditionError("star requires n >= 1");
    GraphBuilder b(n);
    for (int i = 1; i < n; ++i) b.add_edge(0, i);
    return b.take();
}

inline Graph make_cycle(int n) {
    if (n < 3) throw PreconditionError("cycle requires n >= 3");
    GraphBuilder b(n);
    for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
    return b.take();
}

inline Graph make_complete(int n) {
    if (n < 1) throw PreconditionError("complete graph requires n >= 1");
    GraphBuilder b(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) b.add_edge(i, j);
    return b.take();
}

inline Graph make_complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw PreconditionError("complete bipartite requires both sides >= 1");
    GraphBuilder g(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
    return g.take();
}

// Triangle 0-1-2 with the path 2-3-4-...-(n-1) hung off vertex 2.
inline Graph make_d(int n) {
    if (n < 4) throw PreconditionError("d_n requires n >= 4");
    GraphBuilder b(n);
    b.add_edge(0, 1);
    b.add_edge(0, 2);
    b.add_edge(1, 2);
    for (int v = 3; v < n; ++v) b.add_edge(v - 1, v);
    return b.take();
}

// Triangle 0-1-2 with n-3 pendant vertices attached to vertex 2.
inline Graph make_u(int n) {
    if (n < 4) throw PreconditionError("u_n requires n >= 4");
    GraphBuilder b(n);
    b.add_edge(0, 1);
    b.add_edge(0, 2);
    b.add_edge(1, 2);
    for (int v = 3; v < n; ++v) b.add_edge(2, v);
    return b.take();
}

// Triangle 0-1-2 with (n-3)/2 pendant paths of length 2 attached to vertex 2.
inline Graph make_m(int n) {
    if (n < 9 || n % 2 == 0) throw PreconditionError("m_n requires odd n >= 9");
    GraphBuilder b(n);
    b.add_edge(0, 1);
    b.add_edge(0, 2);
    b.add_edge(1, 2);
    for (int leg = 0; leg < (n - 3) / 2; ++leg) {
        int mid = 3 + 2 * leg, end = 4 + 2 * leg;
        b.add_edge(2, mid);
        b.add_edge(mid, end);
    }
    return b.take();
}

// Corona G*: a new pendant neighbour for every vertex.
inline Graph corona(const Graph& g) {
    GraphBuilder b(2 * g.order());
    for (auto [u, v] : g.edges()) b.add_edge(u, v);
    for (int v = 0; v < g.order(); ++v) b.add_edge(v, g.order() + v);
    return b.take();
}

// Cycle c_1..c_g with branches P_k* at c_1 and P_l* at c_3, attached at a
// path-end vertex (so the cycle vertex's branch neighbour gets degree 3).
inline Graph make_g_gkl(int g, int k, int l) {
    if (g != 3 && g != 5) throw PreconditionError("g_gkl requires girth 3 or 5");
    if (k < 0 || l < 0 || k + l == 0)
        throw PreconditionError("g_gkl requires k,l >= 0 with k+l > 0");
    GraphBuilder b(g + 2 * (k + l));
    for (int i = 0; i < g; ++i) b.add_edge(i, (i + 1) % g);
    int next = g;
    auto attach_branch = [&](int cycleVertex, int len) {
        // corona of P_len: path vertices next..next+len-1, pendants after
        for (int i = 0; i < len; ++i) {
            if (i > 0) b.add_edge(next + i - 1, next + i);
            b.add_edge(next + i, next + len + i);
        }
        if (len > 0) b.add_edge(cycleVertex, next);
        next += 2 * len;
    };
    attach_branch(0, k);
    attach_branch(2, l);
    return b.take();
}

// Order-2n member of the G_{2n} family: the explicit 10-vertex base, then
// one pendant K_2 chained on per step.
inline Graph make_g2n(int n) {
    if (n < 5) throw PreconditionError("g_2n requires n >= 5");
    // base: path v1..v5 = 0..4, pendant z1=9 at v3, paths x and y
    std::vector<std::pair<int, int>> edges = {{4, 5}, {5, 6}, {4, 3}, {3, 2}, {2, 9},
                                              {2, 1}, {1, 0}, {2, 7}, {7, 8}};
    int vn = 4;  // current v_n
    int order = 10;
    for (int step = 5; step < n; ++step) {
        int a = order, b = order + 1;  // new v and its pendant
        edges.push_back({vn, a});
        edges.push_back({a, b});
        vn = a;
        order += 2;
    }
    return Graph::from_edges(order, edges);
}

inline Graph make_t1() {
    return Graph::from_edges(8, {{0, 1}, {0, 5}, {1, 2}, {1, 3}, {1, 4}, {5, 6}, {5, 7}});
}

inline Graph make_t2() {
    return Graph::from_edges(8, {{0, 1}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {4, 6}, {5, 7}});
}

struct FamilySpec {
    std::string name;
    std::vector<int> params;
};

inline Graph make(const FamilySpec& spec) {
    const auto& p = spec.params;
    auto want = [&](std::size_t count) {
        if (p.size() != count)
            throw PreconditionError("family " + spec.name + " takes " +
                                    std::to_string(count) + " parameter(s)");
    };
    if (spec.name == "path") return want(1), make_path(p[0]);
    if (spec.name == "star") return want(1), make_star(p[0]);
    if (spec.name == "cycle") return want(1), make_cycle(p[0]);
    if (spec.name == "complete") return want(1), make_complete(p[0]);
    if (spec.name == "complete_bipartite") return want(2), make_complete_bipartite(p[0], p[1]);
    if (spec.name == "d_n") return want(1), make_d(p[0]);
    if (spec.name == "u_n") return want(1), make_u(p[0]);
    if (spec.name == "m_n") return want(1), make_m(p[0]);
    if (spec.name == "g_gkl") return want(3), make_g_gkl(p[0], p[1], p[2]);
    if (spec.name == "g_2n") return want(1), make_g2n(p[0]);
    if (spec.name == "t1") return want(0), make_t1();
    if (spec.name == "t2") return want(0), make_t2();
    throw PreconditionError("unknown family: " + spec.name);
}

// "family:params", e.g. "u_n:7", "g_gkl:3,2,1", "t1"
inline FamilySpec parse_family_spec(const std::string& text) {
    FamilySpec spec;
    auto colon = text.find(':');
    spec.name = text.substr(0, colon);
    if (colon != std::string::npos) {
        std::string rest = text.substr(colon + 1);
        std::size_t pos = 0;
        while (pos < rest.size()) {
            auto comma = rest.find(',', pos);
            std::string tok = rest.substr(pos, comma == std::string::npos ? std::string::npos
                                                                          : comma - pos);
            try {
                std::size_t used = 0;
                spec.params.push_back(std::stoi(tok, &used));
                if (used != tok.size()) throw std::invalid_argument(tok);
            } catch (const std::exception&) {
                throw ParseError("bad family parameter: " + tok, pos);
            }
            pos = comma == std::string::npos ? rest.size() : comma + 1;
        }
        if (spec.params.empty()) throw ParseError("empty parameter list", colon);
    }
    return spec;
}

namespace detail {

// Walk from the leaf u through degree-2 vertices; returns the traversed
// path including the terminal vertex (first of degree != 2 after u).
inline std::vector<int> leaf_path(const Graph& g, int u) {
    std::vector<int> path{u};
    int prev = -1, cur = u;
    for (;;) {
        std::uint64_t nb = g.neighbors_mask(cur);
        if (prev >= 0) nb &= ~(std::uint64_t{1} << prev);
        if (nb == 0) return path;  // dead end: no branching vertex exists
        prev = cur;
        cur = std::countr_zero(nb);
        path.push_back(cur);
        if (g.degree(cur) != 2) return path;
    }
}

inline bool on_path(const std::vector<int>& path, int v) {
    for (int p : path)
        if (p == v) return true;
    return false;
}

}  // namespace detail

// G*_{u,v,w} = (G - vw) + uw: u a leaf, v the nearest branching vertex,
// w a neighbour of v off the u-v path.
inline Graph star_swap(const Graph& g, int u, int v, int w) {
    if (u < 0 || u >= g.order() || g.degree(u) != 1)
        throw PreconditionError("u must be a leaf");
    auto path = detail::leaf_path(g, u);
    if (g.degree(path.back()) < 3)
        throw PreconditionError("no vertex of degree >= 3 reachable from u");
    if (path.back() != v)
        throw PreconditionError("v is not the nearest degree->=3 vertex to u");
    if (w == u || !g.adjacent(v, w)) throw PreconditionError("w must be a neighbour of v, not u");
    if (detail::on_path(path, w)) throw PreconditionError("w must not lie on the u-v path");
    return g.without_edge(v, w).with_edge(u, w);
}

namespace detail {

// Well-covered branch induced by x, as a vertex mask including x: x plus
// every tree component C of G-x where C is a forest corona and x attaches
// only at non-leaves of C. Returns 0 when x induces no branch.
inline std::uint64_t branch_mask(const Graph& g, int x) {
    std::uint64_t taken = 0;
    Graph gx = delete_vertex(g, x);
    // map indices of g-x back to g
    std::vector<int> back;
    for (int v = 0; v < g.order(); ++v)
        if (v != x) back.push_back(v);
    for (std::uint64_t cm : component_masks(gx)) {
        std::vector<int> verts = mask_to_vertices(cm);
        bool touchesX = false;
        for (int v : verts)
            if (g.adjacent(back[static_cast<std::size_t>(v)], x)) touchesX = true;
        if (!touchesX) continue;
        Graph comp = delete_vertices(gx, [&] {
            std::vector<int> others;
            for (int v = 0; v < gx.order(); ++v)
                if (!(cm >> v & 1)) others.push_back(v);
            return others;
        }());
        // the component plus x plus a test leaf on x must be a tree whose
        // pendant edges form a perfect matching (well-covered tree test);
        // in particular x joins the component by exactly one edge
        if (comp.size() != comp.order() - 1) continue;
        std::vector<int> keep = mask_to_vertices(cm);
        int attachEdges = 0, attachAt = -1;
        for (std::size_t i = 0; i < keep.size(); ++i)
            if (g.adjacent(back[static_cast<std::size_t>(keep[i])], x)) {
                ++attachEdges;
                attachAt = static_cast<int>(i);
            }
        if (attachEdges != 1) continue;
        GraphBuilder probe(comp.order() + 2);
        for (auto [p, q] : comp.edges()) probe.add_edge(p, q);
        probe.add_edge(comp.order(), attachAt);        // x
        probe.add_edge(comp.order(), comp.order() + 1);  // test leaf
        if (!pendant_edges_perfect_matching(probe.take())) continue;
        for (int v : verts) taken |= std::uint64_t{1} << back[static_cast<std::size_t>(v)];
    }
    if (taken == 0) return 0;
    return taken | (std::uint64_t{1} << x);
}

inline int masked_degree(const Graph& g, std::uint64_t mask, int v) {
    return std::popcount(g.neighbors_mask(v) & mask);
}

// BFS distances within the induced subgraph G[mask].
inline std::vector<int> masked_distances(const Graph& g, std::uint64_t mask, int from) {
    std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
    dist[static_cast<std::size_t>(from)] = 0;
    std::vector<int> queue{from};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int cur = queue[qi];
        for (int nb : mask_to_vertices(g.neighbors_mask(cur) & mask))
            if (dist[static_cast<std::size_t>(nb)] < 0) {
                dist[static_cast<std::size_t>(nb)] = dist[static_cast<std::size_t>(cur)] + 1;
                queue.push_back(nb);
            }
    }
    return dist;
}

}  // namespace detail

// G†_{u,v,w} = (G - vw) + uw inside a well-covered branch.
inline Graph dagger_swap(const Graph& g, int u, int v, int w) {
    // locate the branch: an inducer x whose branch contains u, v and w
    std::uint64_t need =
        (std::uint64_t{1} << u) | (std::uint64_t{1} << v) | (std::uint64_t{1} << w);
    std::uint64_t mask = 0;
    int x = -1;
    for (int cand = 0; cand < g.order() && x < 0; ++cand) {
        std::uint64_t m = detail::branch_mask(g, cand);
        if ((m & need) == need) {
            mask = m;
            x = cand;
        }
    }
    if (x < 0) throw PreconditionError("u, v, w do not lie in a common well-covered branch");
    std::uint64_t inner = mask & ~(std::uint64_t{1} << x);
    int degreeTwo = 0;
    for (int s : mask_to_vertices(inner))
        if (g.degree(s) == 2) ++degreeTwo;
    if (degreeTwo < 2)
        throw PreconditionError("branch needs at least two degree-2 vertices besides its inducer");
    if (g.degree(u) != 2) throw PreconditionError("u must have degree 2");
    auto dist = detail::masked_distances(g, mask, u);
    // v: nearest vertex of G[S]-degree >= 4, else x when none is closer
    int best = -1;
    for (int s : mask_to_vertices(mask))
        if (detail::masked_degree(g, mask, s) >= 4 &&
            (best < 0 || dist[static_cast<std::size_t>(s)] < dist[static_cast<std::size_t>(best)]))
            best = s;
    if (best < 0 || dist[static_cast<std::size_t>(best)] > dist[static_cast<std::size_t>(x)])
        best = x;
    if (v != best &&
        !(best != x && v != x && detail::masked_degree(g, mask, v) >= 4 &&
          dist[static_cast<std::size_t>(v)] == dist[static_cast<std::size_t>(best)]))
        throw PreconditionError("v is not the nearest high-degree vertex of the branch");
    // w: non-leaf neighbour of v inside S, not on the u-x path
    if (!g.adjacent(v, w)) throw PreconditionError("w must be a neighbour of v");
    if (g.degree(w) == 1) throw PreconditionError("w must not be a leaf");
    // the u-x path in the branch (G[S] is a tree): vertices with
    // dist(u,p) + dist(p,x) = dist(u,x)
    auto fromX = detail::masked_distances(g, mask, x);
    if (dist[static_cast<std::size_t>(w)] + fromX[static_cast<std::size_t>(w)] ==
        dist[static_cast<std::size_t>(x)])
        throw PreconditionError("w must not lie on the path from u to the branch inducer");
    return g.without_edge(v, w).with_edge(u, w);
}

// (T u K_2) + au + bv for a well-covered tree T and non-pendant edge uv.
inline Graph build_s4(const Graph& t, int u, int v) {
    if (t.size() != t.order() - 1 || !is_connected(t))
        throw PreconditionError("build_s4 requires a tree");
    if (!pendant_edges_perfect_matching(t))
        throw PreconditionError("build_s4 requires a well-covered tree");
    if (!t.adjacent(u, v)) throw PreconditionError("uv must be an edge of the tree");
    if (t.degree(u) == 1 || t.degree(v) == 1)
        throw PreconditionError("uv must be a non-pendant edge");
    GraphBuilder b(t.order() + 2);
    for (auto [p, q] : t.edges()) b.add_edge(p, q);
    int a = t.order(), bb = t.order() + 1;
    b.add_edge(a, bb);
    b.add_edge(a, u);
    b.add_edge(bb, v);
    return b.take();
}

// One tree of a branch: the tree itself plus the vertex of its corona the
// cycle vertex should join (must be a non-leaf of the corona, i.e. an
// original tree vertex).
struct BranchTree {
    Graph tree;
    int attach;
};

// A C_3 or C_5 with well-covered branches induced by 1 or 2 cycle vertices
// (nonadjacent ones for C_5). branches[i] lists the trees hung from cycle
// vertex i.
inline Graph build_s3_s5(int g, const std::vector<std::vector<BranchTree>>& branches) {
    if (g != 3 && g != 5) throw PreconditionError("cycle length must be 3 or 5");
    if (branches.size() != static_cast<std::size_t>(g))
        throw PreconditionError("need one branch list per cycle vertex");
    std::vector<int> carriers;
    for (int i = 0; i < g; ++i)
        if (!branches[static_cast<std::size_t>(i)].empty()) carriers.push_back(i);
    if (carriers.empty()) throw PreconditionError("at least one branch must be nonempty");
    if (carriers.size() > 2) throw PreconditionError("at most two cycle vertices may carry branches");
    if (g == 5 && carriers.size() == 2) {
        int gap = carriers[1] - carriers[0];
        if (gap == 1 || gap == g - 1)
            throw PreconditionError("branch vertices on a 5-cycle must be nonadjacent");
    }
    int order = g;
    for (const auto& list : branches)
        for (const auto& bt : list) order += 2 * bt.tree.order();
    GraphBuilder b(order);
    for (int i = 0; i < g; ++i) b.add_edge(i, (i + 1) % g);
    int next = g;
    for (int i = 0; i < g; ++i)
        for (const auto& bt : branches[static_cast<std::size_t>(i)]) {
            int n = bt.tree.order();
            if (n < 1) throw PreconditionError("branch trees must be nonempty");
            if (bt.attach < 0 || bt.attach >= 2 * n)
                throw PreconditionError("attachment vertex out of range");
            if (bt.attach >= n)
                throw PreconditionError("attachment must be a non-leaf of the branch corona");
            // corona of the tree: originals at next.., pendants at next+n..
            for (auto [p, q] : bt.tree.edges()) b.add_edge(next + p, next + q);
            for (int vtx = 0; vtx < n; ++vtx) b.add_edge(next + vtx, next + n + vtx);
            b.add_edge(i, next + bt.attach);
            next += 2 * n;
        }
    Graph result = b.take();
    // constructive validation: each carrier must really induce a
    // well-covered branch — its branch subtree plus a test leaf must have
    // pendant edges forming a perfect matching
    for (int x : carriers) {
        std::uint64_t m = detail::branch_mask(result, x);
        if (m == 0) throw PreconditionError("constructed branch is not well-covered");
        GraphBuilder t(std::popcount(m) + 1);
        std::vector<int> verts = mask_to_vertices(m);
        for (std::size_t i = 0; i < verts.size(); ++i)
            for (std::size_t j = i + 1; j < verts.size(); ++j)
                if (result.adjacent(verts[i], verts[j])) t.add_edge(static_cast<int>(i),
                                                                    static_cast<int>(j));
        for (std::size_t i = 0; i < verts.size(); ++i)
            if (verts[i] == x) t.add_edge(static_cast<int>(i), static_cast<int>(verts.size()));
        if (!pendant_edges_perfect_matching(t.take()))
            throw PreconditionError("constructed branch is not well-covered");
    }
    return result;
}

}  // namespace indpoly
