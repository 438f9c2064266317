#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "indpoly/errors.hpp"

namespace indpoly {

inline constexpr int kMaxVertices = 64;

// Finite simple undirected graph on vertices 0..n-1, adjacency stored as one
// 64-bit neighbour mask per vertex. Values are immutable after construction;
// every operation returns a new graph.
class Graph {
public:
    explicit Graph(int n = 0) : n_(n), adj_(static_cast<std::size_t>(check_order(n))) {}

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge_internal(u, v);
        return g;
    }

    int order() const { return n_; }

    int size() const {
        int total = 0;
        for (auto m : adj_) total += std::popcount(m);
        return total / 2;
    }

    bool adjacent(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return (adj_[static_cast<std::size_t>(u)] >> v) & 1u;
    }

    std::uint64_t neighbors_mask(int v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    std::uint64_t closed_neighbors_mask(int v) const {
        return neighbors_mask(v) | (std::uint64_t{1} << v);
    }

    int degree(int v) const { return std::popcount(neighbors_mask(v)); }

    std::uint64_t vertex_mask() const {
        return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n_; ++u) {
            std::uint64_t m = adj_[static_cast<std::size_t>(u)] >> (u + 1) << (u + 1);
            while (m) {
                int v = std::countr_zero(m);
                out.emplace_back(u, v);
                m &= m - 1;
            }
        }
        return out;
    }

    Graph with_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw PreconditionError("add_edge: self-loop");
        if (adjacent(u, v)) throw PreconditionError("add_edge: edge already present");
        Graph g = *this;
        g.add_edge_internal(u, v);
        return g;
    }

    Graph without_edge(int u, int v) const {
        if (!adjacent(u, v)) throw PreconditionError("delete_edge: edge not present");
        Graph g = *this;
        g.adj_[static_cast<std::size_t>(u)] &= ~(std::uint64_t{1} << v);
        g.adj_[static_cast<std::size_t>(v)] &= ~(std::uint64_t{1} << u);
        return g;
    }

    // Induced subgraph on the vertices NOT in `mask`, reindexed in increasing
    // original order.
    Graph without_vertices_mask(std::uint64_t mask) const {
        if (mask & ~vertex_mask())
            throw PreconditionError("delete_vertices: vertex index out of range");
        std::uint64_t keep = vertex_mask() & ~mask;
        std::array<int, kMaxVertices> newIndex{};
        int m = 0;
        for (std::uint64_t k = keep; k;) {
            int v = std::countr_zero(k);
            newIndex[static_cast<std::size_t>(v)] = m++;
            k &= k - 1;
        }
        Graph g(m);
        for (std::uint64_t k = keep; k;) {
            int v = std::countr_zero(k);
            std::uint64_t nb = adj_[static_cast<std::size_t>(v)] & keep;
            while (nb) {
                int w = std::countr_zero(nb);
                if (w > v)
                    g.add_edge_internal(newIndex[static_cast<std::size_t>(v)],
                                        newIndex[static_cast<std::size_t>(w)]);
                nb &= nb - 1;
            }
            k &= k - 1;
        }
        return g;
    }

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    static int check_order(int n) {
        if (n < 0 || n > kMaxVertices)
            throw PreconditionError("graph order must be between 0 and 64");
        return n;
    }

    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw PreconditionError("vertex index out of range");
    }

    void add_edge_internal(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw PreconditionError("self-loop");
        adj_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
        adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    }

    friend class GraphBuilder;

    int n_;
    std::vector<std::uint64_t> adj_;
};

// Mutable construction helper for the generators.
class GraphBuilder {
public:
    explicit GraphBuilder(Graph g) : g_(std::move(g)) {}
    explicit GraphBuilder(int n) : g_(n) {}

    void add_edge(int u, int v) { g_.add_edge_internal(u, v); }
    bool adjacent(int u, int v) const { return g_.adjacent(u, v); }
    const Graph& get() const { return g_; }
    Graph take() { return std::move(g_); }

private:
    Graph g_;
};

inline std::vector<int> mask_to_vertices(std::uint64_t mask) {
    std::vector<int> out;
    while (mask) {
        out.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return out;
}

inline std::uint64_t vertices_to_mask(const std::vector<int>& vs, int n) {
    std::uint64_t mask = 0;
    for (int v : vs) {
        if (v < 0 || v >= n) throw PreconditionError("vertex index out of range");
        mask |= std::uint64_t{1} << v;
    }
    return mask;
}

inline Graph delete_vertices(const Graph& g, const std::vector<int>& s) {
    return g.without_vertices_mask(vertices_to_mask(s, g.order()));
}

inline Graph delete_vertex(const Graph& g, int v) { return delete_vertices(g, {v}); }

inline std::vector<int> closed_neighborhood(const Graph& g, int v) {
    return mask_to_vertices(g.closed_neighbors_mask(v));
}

inline std::vector<int> closed_neighborhood_edge(const Graph& g, int u, int v) {
    if (!g.adjacent(u, v)) throw PreconditionError("closed_neighborhood_edge: not an edge");
    return mask_to_vertices(g.closed_neighbors_mask(u) | g.closed_neighbors_mask(v));
}

inline Graph delete_closed_neighborhood(const Graph& g, int v) {
    return g.without_vertices_mask(g.closed_neighbors_mask(v));
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
    if (a.order() + b.order() > kMaxVertices)
        throw PreconditionError("disjoint union exceeds 64 vertices");
    GraphBuilder g(a.order() + b.order());
    for (auto [u, v] : a.edges()) g.add_edge(u, v);
    for (auto [u, v] : b.edges()) g.add_edge(a.order() + u, a.order() + v);
    return g.take();
}

// Vertex masks of the connected components, in order of smallest member.
inline std::vector<std::uint64_t> component_masks(const Graph& g) {
    std::vector<std::uint64_t> out;
    std::uint64_t seen = 0;
    std::uint64_t all = g.vertex_mask();
    while (seen != all) {
        int start = std::countr_zero(all & ~seen);
        std::uint64_t comp = std::uint64_t{1} << start;
        std::uint64_t frontier = comp;
        while (frontier) {
            std::uint64_t next = 0;
            while (frontier) {
                int v = std::countr_zero(frontier);
                frontier &= frontier - 1;
                next |= g.neighbors_mask(v) & ~comp;
            }
            comp |= next;
            frontier = next;
        }
        out.push_back(comp);
        seen |= comp;
    }
    return out;
}

inline std::vector<Graph> components(const Graph& g) {
    std::vector<Graph> out;
    for (auto mask : component_masks(g))
        out.push_back(g.without_vertices_mask(g.vertex_mask() & ~mask));
    return out;
}

inline bool is_connected(const Graph& g) {
    if (g.order() == 0) return true;
    return component_masks(g).size() == 1;
}

// Shortest cycle length; nullopt for forests.
inline std::optional<int> girth(const Graph& g) {
    int best = -1;
    for (int s = 0; s < g.order(); ++s) {
        std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
        std::vector<int> parent(static_cast<std::size_t>(g.order()), -1);
        std::queue<int> q;
        dist[static_cast<std::size_t>(s)] = 0;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : mask_to_vertices(g.neighbors_mask(u))) {
                if (dist[static_cast<std::size_t>(v)] < 0) {
                    dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                    parent[static_cast<std::size_t>(v)] = u;
                    q.push(v);
                } else if (v != parent[static_cast<std::size_t>(u)]) {
                    int len = dist[static_cast<std::size_t>(u)] +
                              dist[static_cast<std::size_t>(v)] + 1;
                    if (best < 0 || len < best) best = len;
                }
            }
        }
    }
    if (best < 0) return std::nullopt;
    return best;
}

inline int max_degree(const Graph& g) {
    int d = 0;
    for (int v = 0; v < g.order(); ++v) d = std::max(d, g.degree(v));
    return d;
}

inline int min_degree(const Graph& g) {
    if (g.order() == 0) return 0;
    int d = g.degree(0);
    for (int v = 1; v < g.order(); ++v) d = std::min(d, g.degree(v));
    return d;
}

inline std::vector<int> degree_sequence(const Graph& g) {
    std::vector<int> out(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) out[static_cast<std::size_t>(v)] = g.degree(v);
    std::sort(out.begin(), out.end());
    return out;
}

// BFS distances from `from`; -1 for unreachable vertices.
inline std::vector<int> bfs_distances(const Graph& g, int from) {
    std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
    std::queue<int> q;
    dist[static_cast<std::size_t>(from)] = 0;
    q.push(from);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : mask_to_vertices(g.neighbors_mask(u)))
            if (dist[static_cast<std::size_t>(v)] < 0) {
                dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                q.push(v);
            }
    }
    return dist;
}

// A shortest path from `from` to `to` inclusive; empty if unreachable.
inline std::vector<int> shortest_path(const Graph& g, int from, int to) {
    std::vector<int> dist = bfs_distances(g, from);
    if (dist[static_cast<std::size_t>(to)] < 0) return {};
    std::vector<int> path{to};
    int cur = to;
    while (cur != from) {
        for (int v : mask_to_vertices(g.neighbors_mask(cur)))
            if (dist[static_cast<std::size_t>(v)] == dist[static_cast<std::size_t>(cur)] - 1) {
                cur = v;
                break;
            }
        path.push_back(cur);
    }
    std::reverse(path.begin(), path.end());
    return path;
}

// True iff H embeds into G as a (not necessarily induced) subgraph.
// Backtracking search; both graphs capped at 12 vertices.
inline bool subgraph_embedding_exists(const Graph& h, const Graph& g) {
    if (h.order() > 12 || g.order() > 12)
        throw BudgetError("subgraph embedding search limited to 12 vertices");
    if (h.order() > g.order() || h.size() > g.size()) return false;
    // map H vertices in decreasing degree order for earlier pruning
    std::vector<int> hOrder(static_cast<std::size_t>(h.order()));
    for (int i = 0; i < h.order(); ++i) hOrder[static_cast<std::size_t>(i)] = i;
    std::sort(hOrder.begin(), hOrder.end(),
              [&](int a, int b) { return h.degree(a) > h.degree(b); });
    std::vector<int> image(static_cast<std::size_t>(h.order()), -1);
    std::uint64_t used = 0;

    auto rec = [&](auto&& self, std::size_t idx) -> bool {
        if (idx == hOrder.size()) return true;
        int hv = hOrder[idx];
        for (int gv = 0; gv < g.order(); ++gv) {
            if ((used >> gv) & 1u) continue;
            if (g.degree(gv) < h.degree(hv)) continue;
            bool ok = true;
            for (std::size_t j = 0; j < idx && ok; ++j) {
                int hu = hOrder[j];
                if (h.adjacent(hu, hv) && !g.adjacent(image[static_cast<std::size_t>(hu)], gv))
                    ok = false;
            }
            if (!ok) continue;
            image[static_cast<std::size_t>(hv)] = gv;
            used |= std::uint64_t{1} << gv;
            if (self(self, idx + 1)) return true;
            used &= ~(std::uint64_t{1} << gv);
            image[static_cast<std::size_t>(hv)] = -1;
        }
        return false;
    };
    return rec(rec, 0);
}

// ---------------------------------------------------------------------------
// graph6 encoding (the standard ASCII format for undirected graphs)

inline Graph parse_graph6(const std::string& text) {
    if (text.empty()) throw ParseError("empty graph6 input", 0);
    std::size_t i = 0;
    long n;
    if (text[0] == '~') {
        if (text.size() >= 2 && text[1] == '~')
            throw ParseError("graph6 orders above 258047 unsupported", 0);
        if (text.size() < 4) throw ParseError("truncated graph6 header", text.size());
        n = 0;
        for (i = 1; i <= 3; ++i) {
            int c = static_cast<unsigned char>(text[i]) - 63;
            if (c < 0 || c > 63) throw ParseError("graph6 byte out of range", i);
            n = (n << 6) | c;
        }
        i = 4;
    } else {
        int c = static_cast<unsigned char>(text[0]) - 63;
        if (c < 0 || c > 62) throw ParseError("graph6 byte out of range", 0);
        n = c;
        i = 1;
    }
    if (n > kMaxVertices) throw BudgetError("graph6 order exceeds 64 vertices");
    Graph g(static_cast<int>(n));
    long bits = n * (n - 1) / 2;
    long bitIndex = 0;
    GraphBuilder b(std::move(g));
    int cur = 0;
    int curBits = 0;
    std::size_t curPos = 0;
    auto next_bit = [&]() -> int {
        if (curBits == 0) {
            if (i >= text.size()) throw ParseError("graph6 data truncated", i);
            cur = static_cast<unsigned char>(text[i]) - 63;
            if (cur < 0 || cur > 63) throw ParseError("graph6 byte out of range", i);
            curPos = i;
            ++i;
            curBits = 6;
        }
        --curBits;
        return (cur >> curBits) & 1;
    };
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            if (bitIndex++ >= bits) break;
            if (next_bit()) b.add_edge(u, v);
        }
    // padding bits must be zero
    while (curBits > 0) {
        --curBits;
        if ((cur >> curBits) & 1) throw ParseError("nonzero graph6 padding", curPos);
    }
    if (i != text.size()) throw ParseError("trailing bytes after graph6 data", i);
    return b.take();
}

inline std::string render_graph6(const Graph& g) {
    std::string out;
    int n = g.order();
    if (n <= 62) {
        out += static_cast<char>(n + 63);
    } else {
        out += '~';
        out += static_cast<char>(((n >> 12) & 63) + 63);
        out += static_cast<char>(((n >> 6) & 63) + 63);
        out += static_cast<char>((n & 63) + 63);
    }
    int cur = 0;
    int curBits = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            cur = (cur << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++curBits == 6) {
                out += static_cast<char>(cur + 63);
                cur = 0;
                curBits = 0;
            }
        }
    if (curBits > 0) out += static_cast<char>((cur << (6 - curBits)) + 63);
    return out;
}

}  // namespace indpoly
