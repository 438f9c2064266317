#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "indpoly/canonical.hpp"
#include "indpoly/families.hpp"
#include "indpoly/order.hpp"
#include "indpoly/wellcovered.hpp"

namespace indpoly {

namespace detail {

inline void dedup_push(std::set<std::string>& seen, std::vector<Graph>& out, const Graph& g) {
    std::string key = canonical_key(g);
    if (seen.insert(key).second) out.push_back(parse_graph6(key));
}

}  // namespace detail

// Every free tree of order n, once up to isomorphism. Rooted trees come from
// the Beyer-Hedetniemi level-sequence successor walk; free-tree duplicates
// are removed by canonical key.
inline std::vector<Graph> trees(int n) {
    if (n < 1 || n > 14) throw PreconditionError("tree enumeration supports orders 1..14");
    if (n == 1) return {GraphBuilder(1).take()};
    std::vector<int> level(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) level[static_cast<std::size_t>(i)] = i + 1;  // the path
    std::set<std::string> seen;
    std::vector<Graph> out;
    while (true) {
        GraphBuilder b(n);
        for (int i = 1; i < n; ++i)
            for (int j = i - 1; j >= 0; --j)
                if (level[static_cast<std::size_t>(j)] ==
                    level[static_cast<std::size_t>(i)] - 1) {
                    b.add_edge(i, j);
                    break;
                }
        detail::dedup_push(seen, out, b.take());
        int p = -1;
        for (int i = n - 1; i >= 0; --i)
            if (level[static_cast<std::size_t>(i)] > 2) {
                p = i;
                break;
            }
        if (p < 0) break;
        int q = p - 1;
        while (level[static_cast<std::size_t>(q)] != level[static_cast<std::size_t>(p)] - 1) --q;
        for (int i = p; i < n; ++i)
            level[static_cast<std::size_t>(i)] = level[static_cast<std::size_t>(i - (p - q))];
    }
    return out;
}

// Every connected unicyclic graph of order n, once up to isomorphism:
// each tree plus each non-edge, deduplicated.
inline std::vector<Graph> connected_unicyclic(int n) {
    if (n < 3 || n > 12) throw PreconditionError("unicyclic enumeration supports orders 3..12");
    std::set<std::string> seen;
    std::vector<Graph> out;
    for (const Graph& t : trees(n))
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (!t.adjacent(u, v)) detail::dedup_push(seen, out, t.with_edge(u, v));
    return out;
}

// All connected graphs of order n up to isomorphism, by vertex augmentation:
// every connected graph has a non-cut vertex, so joining a new vertex to each
// nonempty subset of a smaller connected graph reaches everything.
inline std::vector<Graph> connected_graphs(int n) {
    if (n < 1 || n > 8) throw PreconditionError("connected enumeration supports orders 1..8");
    std::vector<Graph> level{GraphBuilder(1).take()};
    for (int k = 2; k <= n; ++k) {
        std::set<std::string> seen;
        std::vector<Graph> next;
        for (const Graph& g : level)
            for (std::uint64_t nbrs = 1; nbrs < (std::uint64_t{1} << (k - 1)); ++nbrs) {
                GraphBuilder b(k);
                for (auto [u, v] : g.edges()) b.add_edge(u, v);
                for (int v : mask_to_vertices(nbrs)) b.add_edge(k - 1, v);
                detail::dedup_push(seen, next, b.take());
            }
        level = std::move(next);
    }
    return level;
}

// Connected graphs with girth at least 6 (acyclic counts), order n <= 12.
// Augmentation as above, but the new vertex's neighbours must be pairwise at
// distance >= 4 so every new cycle has length >= 6.
inline std::vector<Graph> connected_girth_at_least_6(int n) {
    if (n < 1 || n > 12) throw PreconditionError("girth-6 enumeration supports orders 1..12");
    std::vector<Graph> level{GraphBuilder(1).take()};
    for (int k = 2; k <= n; ++k) {
        std::set<std::string> seen;
        std::vector<Graph> next;
        for (const Graph& g : level) {
            std::vector<std::vector<int>> dist;
            for (int v = 0; v < k - 1; ++v) dist.push_back(bfs_distances(g, v));
            // grow neighbour sets vertex by vertex; distances of -1 mean
            // different components, which cannot close a cycle
            std::vector<int> chosen;
            auto attach = [&] {
                GraphBuilder b(k);
                for (auto [u, v] : g.edges()) b.add_edge(u, v);
                for (int v : chosen) b.add_edge(k - 1, v);
                detail::dedup_push(seen, next, b.take());
            };
            auto extend = [&](auto&& self, int from) -> void {
                if (!chosen.empty()) attach();
                for (int v = from; v < k - 1; ++v) {
                    bool ok = true;
                    for (int u : chosen) {
                        int d = dist[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
                        if (d >= 0 && d < 4) ok = false;
                    }
                    if (!ok) continue;
                    chosen.push_back(v);
                    self(self, v + 1);
                    chosen.pop_back();
                }
            };
            extend(extend, 0);
        }
        level = std::move(next);
    }
    return level;
}

// ---- exhaustive family generation at a fixed order ----------------------

// Coronas of connected unicyclic graphs (even order only).
inline std::vector<Graph> ku_members(int order) {
    if (order % 2 != 0 || order < 6) return {};
    std::vector<Graph> out;
    for (const Graph& g : connected_unicyclic(order / 2)) out.push_back(corona(g));
    return out;
}

// (T u K_2) + au + bv over all well-covered trees T of order `order`-2 and
// all non-pendant edges uv of T.
inline std::vector<Graph> s4_members(int order) {
    if (order % 2 != 0 || order < 6) return {};
    std::set<std::string> seen;
    std::vector<Graph> out;
    for (const Graph& t : trees(order - 2)) {
        if (!pendant_edges_perfect_matching(t)) continue;
        for (auto [u, v] : t.edges())
            if (t.degree(u) > 1 && t.degree(v) > 1)
                detail::dedup_push(seen, out, build_s4(t, u, v));
    }
    return out;
}

namespace detail {

// All multisets of branch trees (with attachment choice) whose coronas total
// `budget` vertices; options must be passed sorted so combinations are
// generated without most duplicates (canonical dedup catches the rest).
inline void branch_lists(int budget, std::size_t from, const std::vector<BranchTree>& options,
                         std::vector<BranchTree>& current,
                         const std::function<void(const std::vector<BranchTree>&)>& sink) {
    if (budget == 0) {
        sink(current);
        return;
    }
    for (std::size_t i = from; i < options.size(); ++i) {
        int cost = 2 * options[i].tree.order();
        if (cost > budget) continue;
        current.push_back(options[i]);
        branch_lists(budget - cost, i, options, current, sink);
        current.pop_back();
    }
}

inline std::vector<BranchTree> branch_options(int max_tree_order) {
    std::vector<BranchTree> options;
    for (int t = 1; t <= max_tree_order; ++t)
        for (const Graph& tree : trees(t))
            for (int attach = 0; attach < t; ++attach) options.push_back({tree, attach});
    return options;
}

}  // namespace detail

// All members of S_3 (g=3) or S_5 (g=5) of the given order: a g-cycle with
// one or two (nonadjacent, for g=5) vertices inducing well-covered branches.
inline std::vector<Graph> s3_s5_members(int g, int order) {
    if (g != 3 && g != 5) throw PreconditionError("cycle length must be 3 or 5");
    int total = order - g;
    if (total <= 0 || total % 2 != 0) return {};
    auto options = detail::branch_options(total / 2);
    std::set<std::string> seen;
    std::vector<Graph> out;
    std::vector<BranchTree> scratch;
    int second = g == 3 ? 1 : 2;  // second carrier: any for C_3, nonadjacent for C_5
    detail::branch_lists(total, 0, options, scratch,
                         [&](const std::vector<BranchTree>& list) {
                             std::vector<std::vector<BranchTree>> branches(
                                 static_cast<std::size_t>(g));
                             branches[0] = list;
                             detail::dedup_push(seen, out, build_s3_s5(g, branches));
                         });
    for (int a = 2; a <= total - 2; a += 2) {
        std::vector<std::vector<BranchTree>> first_lists;
        std::vector<BranchTree> buf;
        detail::branch_lists(a, 0, options, buf,
                             [&](const std::vector<BranchTree>& l) { first_lists.push_back(l); });
        for (const auto& lhs : first_lists) {
            std::vector<BranchTree> buf2;
            detail::branch_lists(total - a, 0, options, buf2,
                                 [&](const std::vector<BranchTree>& rhs) {
                                     std::vector<std::vector<BranchTree>> branches(
                                         static_cast<std::size_t>(g));
                                     branches[0] = lhs;
                                     branches[static_cast<std::size_t>(second)] = rhs;
                                     detail::dedup_push(seen, out, build_s3_s5(g, branches));
                                 });
        }
    }
    return out;
}

// The classical catalogue of connected well-covered unicyclic graphs at one
// order: short cycles, S_3, S_4, S_5 and coronas of unicyclic graphs.
inline std::vector<Graph> well_covered_unicyclic_members(int order) {
    std::set<std::string> seen;
    std::vector<Graph> out;
    for (int c : {3, 4, 5, 7})
        if (c == order) detail::dedup_push(seen, out, make_cycle(c));
    for (const Graph& g : s3_s5_members(3, order)) detail::dedup_push(seen, out, g);
    for (const Graph& g : s4_members(order)) detail::dedup_push(seen, out, g);
    for (const Graph& g : s3_s5_members(5, order)) detail::dedup_push(seen, out, g);
    for (const Graph& g : ku_members(order)) detail::dedup_push(seen, out, g);
    return out;
}

// ---- surveys -------------------------------------------------------------

namespace detail {

inline bool is_bipartite(const Graph& g) {
    std::vector<int> colour(static_cast<std::size_t>(g.order()), -1);
    for (int s = 0; s < g.order(); ++s) {
        if (colour[static_cast<std::size_t>(s)] >= 0) continue;
        colour[static_cast<std::size_t>(s)] = 0;
        std::vector<int> queue{s};
        while (!queue.empty()) {
            int u = queue.back();
            queue.pop_back();
            for (int v : mask_to_vertices(g.neighbors_mask(u))) {
                if (colour[static_cast<std::size_t>(v)] < 0) {
                    colour[static_cast<std::size_t>(v)] =
                        1 - colour[static_cast<std::size_t>(u)];
                    queue.push_back(v);
                } else if (colour[static_cast<std::size_t>(v)] ==
                           colour[static_cast<std::size_t>(u)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

inline bool has_triangle(const Graph& g) {
    for (auto [u, v] : g.edges())
        if (g.neighbors_mask(u) & g.neighbors_mask(v)) return true;
    return false;
}

}  // namespace detail

struct SurveyReport {
    std::string family;
    int order = 0;
    std::size_t count = 0;
    bool asserted = true;  // false when the bound is only conjectured
    std::string lower_graph6;  // named extremal graphs ("" if no bound checked)
    std::string upper_graph6;
    std::vector<std::string> lower_equal;  // members sharing the bound polynomial (graph6)
    std::vector<std::string> upper_equal;
    std::vector<std::string> violations;  // "<graph6> lower|upper"
    std::vector<std::size_t> equivalence_class_sizes;
    std::vector<std::vector<std::string>> antichain_examples;
};

enum class SurveyClass {
    Trees,
    Unicyclic,
    WcTrees,
    WcUnicyclicEven,
    WcUnicyclicOdd,
    Bipartite,
    TriangleFree,
};

// Corpus, named bounds and assertion status for one survey class.
struct SurveyPlan {
    std::string family;
    std::vector<Graph> corpus;
    Graph lower;
    Graph upper;
    bool check_upper = true;
    bool asserted = true;
};

inline SurveyPlan survey_plan(SurveyClass cls, int n) {
    SurveyPlan plan{"", {}, GraphBuilder(0).take(), GraphBuilder(0).take(), true, true};
    switch (cls) {
        case SurveyClass::Trees:
            plan.family = "trees";
            plan.corpus = trees(n);
            plan.lower = make_path(n);
            plan.upper = make_star(n);
            break;
        case SurveyClass::Unicyclic:
            plan.family = "unicyclic";
            plan.corpus = connected_unicyclic(n);
            plan.lower = make_cycle(n);
            plan.upper = make_u(n);
            break;
        case SurveyClass::WcTrees: {
            plan.family = "wc_trees";
            if (n % 2 != 0) throw PreconditionError("well-covered trees have even order");
            for (const Graph& t : trees(n))
                if (pendant_edges_perfect_matching(t)) plan.corpus.push_back(t);
            plan.lower = corona(make_path(n / 2));
            plan.upper = corona(make_star(n / 2));
            break;
        }
        case SurveyClass::WcUnicyclicEven: {
            plan.family = "wc_unicyclic_even";
            if (n % 2 != 0 || n < 6)
                throw PreconditionError("even well-covered unicyclic survey needs even order >= 6");
            for (const Graph& g : connected_unicyclic(n))
                if (is_well_covered(g)) plan.corpus.push_back(g);
            plan.lower = corona(make_cycle(n / 2));
            plan.upper = corona(make_u(n / 2));
            break;
        }
        case SurveyClass::WcUnicyclicOdd: {
            plan.family = "wc_unicyclic_odd";
            if (n % 2 != 1 || n < 3)
                throw PreconditionError("odd well-covered unicyclic survey needs odd order >= 3");
            for (const Graph& g : connected_unicyclic(n))
                if (is_well_covered(g)) plan.corpus.push_back(g);
            if (n >= 9) {
                plan.lower = make_g_gkl(3, (n - 3) / 2, 0);
                plan.upper = make_m(n);
            } else {
                plan.lower = make_cycle(n);
                plan.check_upper = false;
            }
            break;
        }
        case SurveyClass::Bipartite:
        case SurveyClass::TriangleFree: {
            bool bip = cls == SurveyClass::Bipartite;
            plan.family = bip ? "bipartite" : "triangle_free";
            plan.asserted = bip;
            for (const Graph& g : connected_graphs(n))
                if (bip ? detail::is_bipartite(g) : !detail::has_triangle(g))
                    plan.corpus.push_back(g);
            plan.lower = make_path(n);
            plan.upper = make_complete_bipartite((n + 1) / 2, n / 2);
            break;
        }
    }
    return plan;
}

inline SurveyReport survey_extremal(SurveyClass cls, int n, PolyCache& cache = global_cache(),
                                    int workers = 1) {
    SurveyPlan plan = survey_plan(cls, n);
    const std::vector<Graph>& corpus = plan.corpus;
    const Graph& lower = plan.lower;
    const Graph& upper = plan.upper;
    bool check_upper = plan.check_upper;
    SurveyReport report;
    report.family = plan.family;
    report.order = n;
    report.asserted = plan.asserted;
    report.count = corpus.size();
    report.lower_graph6 = render_graph6(canonical_form(lower));
    if (check_upper) report.upper_graph6 = render_graph6(canonical_form(upper));
    Poly lower_poly = independence_poly(lower, cache);
    Poly upper_poly = check_upper ? independence_poly(upper, cache) : Poly{};
    // per-graph records are computed into indexed slots (parallelisable) and
    // folded in index order, so the report is identical for any worker count
    struct Record {
        std::string g6, poly;
        bool low_eq = false, up_eq = false, low_ok = true, up_ok = true;
    };
    std::vector<Record> records(corpus.size());
    auto work = [&](std::size_t from, std::size_t step) {
        for (std::size_t i = from; i < corpus.size(); i += step) {
            const Graph& g = corpus[i];
            Record& r = records[i];
            r.g6 = render_graph6(canonical_form(g));
            Poly p = independence_poly(g, cache);
            r.poly = poly_to_string(p);
            r.low_eq = p == lower_poly;
            r.low_ok = is_preceq(lower, g, cache);
            if (check_upper) {
                r.up_eq = p == upper_poly;
                r.up_ok = is_preceq(g, upper, cache);
            }
        }
    };
    if (workers <= 1) {
        work(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back(work, static_cast<std::size_t>(w),
                              static_cast<std::size_t>(workers));
        for (auto& t : pool) t.join();
    }
    std::map<std::string, std::size_t> classes;
    for (const Record& r : records) {
        ++classes[r.poly];
        if (r.low_eq) report.lower_equal.push_back(r.g6);
        if (!r.low_ok) report.violations.push_back(r.g6 + " lower");
        if (r.up_eq) report.upper_equal.push_back(r.g6);
        if (!r.up_ok) report.violations.push_back(r.g6 + " upper");
    }
    for (const auto& [poly, size] : classes) report.equivalence_class_sizes.push_back(size);
    return report;
}

// Group a corpus by exact independence polynomial. Classes are ordered by
// polynomial text; members by canonical key.
inline std::vector<std::vector<Graph>> equivalence_classes(const std::vector<Graph>& graphs,
                                                           PolyCache& cache = global_cache()) {
    std::map<std::string, std::map<std::string, Graph>> buckets;
    for (const Graph& g : graphs) {
        Graph canon = canonical_form(g);
        buckets[poly_to_string(independence_poly(g, cache))].emplace(render_graph6(canon), canon);
    }
    std::vector<std::vector<Graph>> out;
    for (const auto& [poly, members] : buckets) {
        std::vector<Graph> cls;
        for (const auto& [key, g] : members) cls.push_back(g);
        out.push_back(std::move(cls));
    }
    return out;
}

// Pairwise-incomparable sets up to max_size: exact pairwise comparison, then
// backtracking search on the incomparability graph, one example per size.
inline std::vector<std::vector<Graph>> antichains(const std::vector<Graph>& graphs, int max_size,
                                                  PolyCache& cache = global_cache()) {
    if (graphs.size() > 200) throw BudgetError("antichain search limited to 200 graphs");
    std::map<std::string, Graph> sorted;
    for (const Graph& g : graphs) {
        Graph canon = canonical_form(g);
        sorted.emplace(render_graph6(canon), canon);
    }
    std::vector<Graph> corpus;
    for (const auto& [key, g] : sorted) corpus.push_back(g);
    std::size_t m = corpus.size();
    std::vector<std::vector<bool>> incomparable(m, std::vector<bool>(m, false));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            bool inc = compare(corpus[i], corpus[j], cache).relation == Relation::Incomparable;
            incomparable[i][j] = incomparable[j][i] = inc;
        }
    std::vector<std::vector<Graph>> out;
    for (int k = 2; k <= max_size; ++k) {
        std::vector<std::size_t> chosen;
        bool found = false;
        auto search = [&](auto&& self, std::size_t from) -> bool {
            if (static_cast<int>(chosen.size()) == k) return true;
            for (std::size_t v = from; v < m; ++v) {
                bool ok = true;
                for (std::size_t u : chosen)
                    if (!incomparable[u][v]) ok = false;
                if (!ok) continue;
                chosen.push_back(v);
                if (self(self, v + 1)) return true;
                chosen.pop_back();
            }
            return false;
        };
        found = search(search, 0);
        if (!found) break;
        std::vector<Graph> example;
        for (std::size_t v : chosen) example.push_back(corpus[v]);
        out.push_back(std::move(example));
    }
    return out;
}

}  // namespace indpoly
