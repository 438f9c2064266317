#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <unordered_set>
#include <vector>

#include "indpoly/graph.hpp"

namespace indpoly {

struct MaximalSetReport {
    std::map<int, std::uint64_t> size_counts;
    std::vector<int> min_witness;
    std::vector<int> max_witness;

    int min_size() const { return size_counts.begin()->first; }
    int max_size() const { return size_counts.rbegin()->first; }
};

// Enumerate every maximal independent set. Branching: some vertex of the
// lowest free vertex's closed neighbourhood must join the set; duplicates
// are removed by bitmask.
inline MaximalSetReport maximal_independent_sets(const Graph& g) {
    if (g.order() > 22) throw BudgetError("maximal-set enumeration limited to 22 vertices");
    if (g.order() == 0) throw PreconditionError("empty graph has no maximal-set report");
    std::uint64_t all = (std::uint64_t{1} << g.order()) - 1;
    std::unordered_set<std::uint64_t> seen;
    MaximalSetReport report;
    struct Frame {
        std::uint64_t chosen;
        std::uint64_t free;  // vertices not in N[chosen]
    };
    std::vector<Frame> stack{{0, all}};
    while (!stack.empty()) {
        auto [chosen, free] = stack.back();
        stack.pop_back();
        if (free == 0) {
            if (!seen.insert(chosen).second) continue;
            int size = std::popcount(chosen);
            auto [it, fresh] = report.size_counts.emplace(size, 0);
            ++it->second;
            if (report.min_witness.empty() ||
                size < static_cast<int>(report.min_witness.size()))
                report.min_witness = mask_to_vertices(chosen);
            if (size > static_cast<int>(report.max_witness.size()))
                report.max_witness = mask_to_vertices(chosen);
            continue;
        }
        int pivot = std::countr_zero(free);
        std::uint64_t candidates = g.closed_neighbors_mask(pivot) & free;
        while (candidates) {
            int v = std::countr_zero(candidates);
            candidates &= candidates - 1;
            stack.push_back({chosen | (std::uint64_t{1} << v),
                             free & ~g.closed_neighbors_mask(v)});
        }
    }
    return report;
}

inline bool is_well_covered(const Graph& g) {
    auto report = maximal_independent_sets(g);
    return report.size_counts.size() == 1;
}

inline bool is_very_well_covered(const Graph& g) {
    auto report = maximal_independent_sets(g);
    return report.size_counts.size() == 1 && report.max_size() * 2 == g.order();
}

// True iff the pendant edges (edges meeting a degree-1 vertex) form a
// perfect matching of G.
inline bool pendant_edges_perfect_matching(const Graph& g) {
    if (g.order() == 0 || g.order() % 2 != 0) return false;
    std::vector<int> cover(static_cast<std::size_t>(g.order()), 0);
    for (auto [u, v] : g.edges()) {
        if (g.degree(u) != 1 && g.degree(v) != 1) continue;
        ++cover[static_cast<std::size_t>(u)];
        ++cover[static_cast<std::size_t>(v)];
    }
    for (int c : cover)
        if (c != 1) return false;
    return true;
}

}  // namespace indpoly
