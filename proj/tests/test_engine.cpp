#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <random>

#include "indpoly/engine.hpp"

using namespace indpoly;

namespace {

Graph path(int n) {
    GraphBuilder b(n);
    for (int i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
    return b.take();
}

Graph cycle(int n) {
    GraphBuilder b(n);
    for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
    return b.take();
}

Graph complete(int n) {
    GraphBuilder b(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) b.add_edge(i, j);
    return b.take();
}

Graph complete_bipartite(int a, int b) {
    GraphBuilder g(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
    return g.take();
}

Graph random_graph(std::mt19937_64& rng, int n, double p) {
    GraphBuilder b(n);
    std::bernoulli_distribution coin(p);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) b.add_edge(i, j);
    return b.take();
}

// greedily extend vertex 0 (if present) to a maximal clique
std::vector<int> some_maximal_clique(const Graph& g) {
    std::vector<int> clique;
    for (int v = 0; v < g.order(); ++v) {
        bool ok = true;
        for (int u : clique)
            if (!g.adjacent(u, v)) ok = false;
        if (ok) clique.push_back(v);
    }
    return clique;
}

// Oracle: independence number by plain branch and bound.
int alpha_oracle(const Graph& g, std::uint64_t remaining) {
    if (remaining == 0) return 0;
    int v = std::countr_zero(remaining);
    std::uint64_t rest = remaining & ~(std::uint64_t{1} << v);
    int without = alpha_oracle(g, rest);
    int with = 1 + alpha_oracle(g, rest & ~g.neighbors_mask(v));
    return std::max(without, with);
}

Graph corona_with_k1(const Graph& g) {
    GraphBuilder b(2 * g.order());
    for (auto [u, v] : g.edges()) b.add_edge(u, v);
    for (int v = 0; v < g.order(); ++v) b.add_edge(v, g.order() + v);
    return b.take();
}

}  // namespace

TEST_CASE("brute force on closed-form graphs") {
    CHECK(independence_poly_bruteforce(complete(1)) == Poly{{Int(1), Int(1)}});
    // 3K_1
    GraphBuilder b(3);
    CHECK(independence_poly_bruteforce(b.take()) == Poly{{Int(1), Int(1)}}.pow(3));
    CHECK(independence_poly_bruteforce(cycle(5)) == Poly{{Int(1), Int(5), Int(5)}});
    CHECK(independence_poly_bruteforce(path(4)) == Poly{{Int(1), Int(4), Int(3)}});
    CHECK_THROWS_AS(independence_poly_bruteforce(path(26)), BudgetError);
}

TEST_CASE("recursive engine matches known polynomials") {
    CHECK(independence_poly(complete(1)) == Poly{{Int(1), Int(1)}});
    CHECK(independence_poly(complete(7)) == Poly{{Int(1), Int(7)}});
    // K_{2,3} = (1+x)^2 + (1+x)^3 - 1
    Poly onePlusX{{Int(1), Int(1)}};
    CHECK(independence_poly(complete_bipartite(2, 3)) == onePlusX.pow(2) + onePlusX.pow(3) - Poly::one());
    // U_6: triangle with three pendant vertices at one corner;
    // I(U_n) = (1+2x)(1+x)^{n-3} + x
    Graph u6 = Graph::from_edges(6, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {2, 5}});
    CHECK(independence_poly(u6) == Poly{{Int(1), Int(2)}} * onePlusX.pow(3) + Poly::x());
    CHECK(independence_poly(path(64)).degree() == 32);
}

TEST_CASE("three code paths agree on random graphs") {
    std::mt19937_64 rng(101);
    PolyCache cache;
    for (int trial = 0; trial < 500; ++trial) {
        int n = 1 + static_cast<int>(rng() % 10);
        Graph g = random_graph(rng, n, 0.2 + 0.06 * static_cast<double>(rng() % 10));
        Poly brute = independence_poly_bruteforce(g);
        CHECK(independence_poly(g, cache) == brute);
        CHECK(independence_poly_clique(g, some_maximal_clique(g), cache) == brute);
        // i_0 = 1, i_1 = n
        CHECK(brute.coeff(0) == 1);
        CHECK(brute.coeff(1) == n);
        // degree is the independence number
        CHECK(brute.degree() == alpha_oracle(g, n == 64 ? ~std::uint64_t{0}
                                                        : (std::uint64_t{1} << n) - 1));
    }
    CHECK(cache.size() > 0);
}

TEST_CASE("clique deletion preconditions") {
    CHECK(independence_poly_clique(complete(3), {0, 1, 2}) == Poly{{Int(1), Int(3)}});
    CHECK_THROWS_AS(independence_poly_clique(path(4), {0, 2}), PreconditionError);
}

TEST_CASE("disjoint union multiplies polynomials") {
    std::mt19937_64 rng(103);
    for (int trial = 0; trial < 50; ++trial) {
        Graph a = random_graph(rng, 1 + static_cast<int>(rng() % 8), 0.4);
        Graph b = random_graph(rng, 1 + static_cast<int>(rng() % 8), 0.4);
        CHECK(independence_poly(disjoint_union(a, b)) == independence_poly(a) * independence_poly(b));
    }
}

TEST_CASE("corona matches the polynomial transform") {
    std::mt19937_64 rng(107);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + static_cast<int>(rng() % 8);
        Graph g = random_graph(rng, n, 0.4);
        CHECK(independence_poly(corona_with_k1(g)) == corona_transform(independence_poly(g), n));
    }
}

TEST_CASE("independence numbers") {
    CHECK(independence_number(complete(9)) == 1);
    CHECK(independence_number(cycle(7)) == 3);
    CHECK(independence_number(complete_bipartite(1, 5)) == 5);
}

TEST_CASE("cache persists to file") {
    std::string file = "cache_test_tmp.tsv";
    std::remove(file.c_str());
    std::mt19937_64 rng(5);
    Graph g = random_graph(rng, 9, 0.3);
    Poly expected;
    {
        PolyCache cache;
        cache.attach_file(file);
        expected = independence_poly(g, cache);
        CHECK(cache.size() > 0);
    }
    {
        PolyCache cache;
        cache.attach_file(file);
        std::uint64_t missesBefore = cache.misses();
        CHECK(independence_poly(g, cache) == expected);
        CHECK(cache.hits() > 0);
        CHECK(cache.misses() == missesBefore);
    }
    std::remove(file.c_str());
}
