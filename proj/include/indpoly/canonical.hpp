#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "indpoly/graph.hpp"

namespace indpoly {

inline constexpr int kCanonicalOrderLimit = 32;

namespace detail {

// Ordered partition of the vertex set into colour cells.
struct Partition {
    // cell id per vertex; cells are numbered by their position in the order
    std::vector<int> cell;
    int cells = 0;
};

// Iterated neighbour-colour refinement (1-dimensional Weisfeiler-Leman).
// Cell ids are assigned so that the partition order is canonical given the
// input colouring.
inline void refine(const Graph& g, Partition& p) {
    int n = g.order();
    for (;;) {
        // signature: (old cell, sorted multiset of neighbour cells)
        std::vector<std::pair<std::vector<int>, int>> sigs(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            std::vector<int> s;
            s.push_back(p.cell[static_cast<std::size_t>(v)]);
            for (int u : mask_to_vertices(g.neighbors_mask(v)))
                s.push_back(p.cell[static_cast<std::size_t>(u)]);
            std::sort(s.begin() + 1, s.end());
            sigs[static_cast<std::size_t>(v)] = {std::move(s), v};
        }
        std::map<std::vector<int>, int> ids;
        for (const auto& [s, v] : sigs) ids.emplace(s, 0);
        int next = 0;
        for (auto& [s, id] : ids) id = next++;
        bool changed = next != p.cells;
        for (const auto& [s, v] : sigs) {
            int id = ids[s];
            if (id != p.cell[static_cast<std::size_t>(v)]) changed = true;
            p.cell[static_cast<std::size_t>(v)] = id;
        }
        p.cells = next;
        if (!changed) return;
    }
}

inline Partition initial_partition(const Graph& g) {
    Partition p;
    p.cell.assign(static_cast<std::size_t>(g.order()), 0);
    p.cells = g.order() > 0 ? 1 : 0;
    refine(g, p);
    return p;
}

// Adjacency bits of the relabelled graph in row-major upper-triangle order,
// packed into words; lexicographic comparison of these words decides the
// canonical labelling.
inline std::vector<std::uint64_t> label_string(const Graph& g, const std::vector<int>& perm) {
    int n = g.order();
    std::vector<std::uint64_t> words;
    std::uint64_t cur = 0;
    int bits = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            cur = (cur << 1) |
                  (g.adjacent(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)])
                       ? 1u
                       : 0u);
            if (++bits == 64) {
                words.push_back(cur);
                cur = 0;
                bits = 0;
            }
        }
    if (bits > 0) words.push_back(cur << (64 - bits));
    return words;
}

struct CanonSearch {
    const Graph& g;
    std::vector<std::uint64_t> best;
    std::vector<int> bestPerm;
    bool haveBest = false;

    void run(const Partition& p) {
        int n = g.order();
        // find first non-singleton cell (by cell id order)
        std::vector<std::vector<int>> members(static_cast<std::size_t>(p.cells));
        for (int v = 0; v < n; ++v) members[static_cast<std::size_t>(p.cell[static_cast<std::size_t>(v)])].push_back(v);
        int target = -1;
        for (int c = 0; c < p.cells; ++c)
            if (members[static_cast<std::size_t>(c)].size() > 1) {
                target = c;
                break;
            }
        if (target < 0) {
            // discrete partition: cell order is the labelling
            std::vector<int> perm(static_cast<std::size_t>(n));
            for (int v = 0; v < n; ++v)
                perm[static_cast<std::size_t>(p.cell[static_cast<std::size_t>(v)])] = v;
            auto s = label_string(g, perm);
            if (!haveBest || s < best) {
                best = std::move(s);
                bestPerm = std::move(perm);
                haveBest = true;
            }
            return;
        }
        // swapping two twins is an automorphism, so one representative per
        // twin class of the target cell suffices
        std::vector<int> tried;
        for (int v : members[static_cast<std::size_t>(target)]) {
            bool twinOfTried = false;
            for (int u : tried) {
                std::uint64_t mu = g.neighbors_mask(u) & ~(std::uint64_t{1} << v);
                std::uint64_t mv = g.neighbors_mask(v) & ~(std::uint64_t{1} << u);
                if ((mu & ~(std::uint64_t{1} << u)) == (mv & ~(std::uint64_t{1} << v))) {
                    twinOfTried = true;
                    break;
                }
            }
            if (twinOfTried) continue;
            tried.push_back(v);
            Partition q = p;
            // individualise v: its cell splits into {v} (first) and the rest
            for (int u = 0; u < n; ++u) {
                int c = q.cell[static_cast<std::size_t>(u)];
                if (c > target || (c == target && u != v)) ++q.cell[static_cast<std::size_t>(u)];
            }
            q.cells = p.cells + 1;
            refine(g, q);
            run(q);
        }
    }
};

}  // namespace detail

// Canonical relabelling of G: the lexicographically smallest adjacency
// bit-string over all labellings consistent with colour refinement.
inline Graph canonical_form(const Graph& g) {
    if (g.order() > kCanonicalOrderLimit)
        throw BudgetError("canonical form limited to 32 vertices");
    if (g.order() <= 1) return g;
    detail::CanonSearch search{g};
    search.run(detail::initial_partition(g));
    GraphBuilder b(g.order());
    std::vector<int> inv(static_cast<std::size_t>(g.order()));
    for (int i = 0; i < g.order(); ++i) inv[static_cast<std::size_t>(search.bestPerm[static_cast<std::size_t>(i)])] = i;
    for (auto [u, v] : g.edges())
        b.add_edge(inv[static_cast<std::size_t>(u)], inv[static_cast<std::size_t>(v)]);
    return b.take();
}

// Exact isomorphism-class key: the graph6 encoding of the canonical form.
inline std::string canonical_key(const Graph& g) { return render_graph6(canonical_form(g)); }

inline bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    return canonical_key(a) == canonical_key(b);
}

}  // namespace indpoly
