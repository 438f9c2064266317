#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "indpoly/roots.hpp"

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

Graph star(int n) {
    GraphBuilder b(n);
    for (int i = 1; i < n; ++i) b.add_edge(0, i);
    return b.take();
}

Graph random_tree(std::mt19937_64& rng, int n) {
    // Pruefer decoding
    if (n <= 1) return GraphBuilder(n).take();
    if (n == 2) return path(2);
    std::vector<int> seq(static_cast<std::size_t>(n - 2));
    for (auto& s : seq) s = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (int s : seq) ++degree[static_cast<std::size_t>(s)];
    GraphBuilder b(n);
    for (int s : seq) {
        for (int leaf = 0; leaf < n; ++leaf)
            if (degree[static_cast<std::size_t>(leaf)] == 1) {
                b.add_edge(leaf, s);
                degree[static_cast<std::size_t>(leaf)] = 0;
                --degree[static_cast<std::size_t>(s)];
                break;
            }
    }
    int u = -1;
    for (int v = 0; v < n; ++v)
        if (degree[static_cast<std::size_t>(v)] == 1) {
            if (u < 0)
                u = v;
            else
                b.add_edge(u, v);
        }
    return b.take();
}

double midpoint(const IsolatingInterval& iv) {
    return (iv.lo.get_d() + iv.hi.get_d()) / 2;
}

bool valid_certificate(const IsolatingInterval& iv) {
    int slo = iv.poly.sign_at(iv.lo);
    int shi = iv.poly.sign_at(iv.hi);
    if (shi == 0) return true;
    return slo != 0 && slo != shi;
}

}  // namespace

TEST_CASE("isolate_roots basic cases") {
    Poly q{{Int(1), Int(4), Int(2)}};
    auto roots = isolate_roots(q, Rat(-2), Rat(0));
    REQUIRE(roots.size() == 2);
    CHECK(valid_certificate(roots[0]));
    CHECK(valid_certificate(roots[1]));
    // roots at -1 -/+ 1/sqrt(2)
    auto r0 = refine(roots[0], make_rat(1, 1000000000));
    auto r1 = refine(roots[1], make_rat(1, 1000000000));
    CHECK_THAT(midpoint(r0), Catch::Matchers::WithinAbs(-1.7071067811, 1e-8));
    CHECK_THAT(midpoint(r1), Catch::Matchers::WithinAbs(-0.2928932188, 1e-8));

    auto single = isolate_roots(Poly{{Int(1), Int(1)}}, Rat(-2), Rat(0));
    REQUIRE(single.size() == 1);
    CHECK(single[0].lo < -1);
    CHECK(-1 <= single[0].hi);

    CHECK(isolate_roots(Poly{{Int(1), Int(1), Int(1)}}, Rat(-2), Rat(0)).empty());
    CHECK_THROWS_AS(isolate_roots(Poly{}, Rat(-1), Rat(0)), PreconditionError);
    CHECK_THROWS_AS(isolate_roots(Poly::one(), Rat(0), Rat(0)), PreconditionError);
}

TEST_CASE("isolate_roots handles repeated and endpoint roots") {
    // (1+x)^2 (1+3x): squarefree part has roots -1 and -1/3
    Poly p = Poly{{Int(1), Int(1)}}.pow(2) * Poly{{Int(1), Int(3)}};
    auto roots = isolate_roots(p, Rat(-1), Rat(0));
    REQUIRE(roots.size() == 1);  // -1 excluded by the half-open interval
    auto all = isolate_roots(p, Rat(-2), Rat(0));
    REQUIRE(all.size() == 2);
    CHECK(all[0].lo < all[0].hi);
    CHECK(all[0].hi <= all[1].lo);
}

TEST_CASE("xi of complete graphs is -1/n") {
    for (int n = 1; n <= 12; ++n) {
        auto iv = xi(complete(n));
        Rat target = make_rat(-1, n);
        CHECK(iv.lo < target);
        CHECK(target <= iv.hi);
        CHECK(iv.hi - iv.lo <= default_xi_width());
        CHECK(valid_certificate(iv));
    }
}

TEST_CASE("xi of edgeless graphs is -1") {
    auto iv = xi(GraphBuilder(4).take());
    CHECK(iv.lo < -1);
    CHECK(-1 <= iv.hi);
    CHECK(iv.poly.sign_at(Rat(-1)) == 0);
}

TEST_CASE("xi decimals for known graphs") {
    CHECK_THAT(midpoint(xi(cycle(4))), Catch::Matchers::WithinAbs(-0.2928932188, 1e-9));
    Graph t1 = Graph::from_edges(
        8, {{0, 1}, {0, 5}, {1, 2}, {1, 3}, {1, 4}, {5, 6}, {5, 7}});
    Graph t2 = Graph::from_edges(
        8, {{0, 1}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {4, 6}, {5, 7}});
    CHECK_THAT(midpoint(xi(t1)), Catch::Matchers::WithinAbs(-0.2451223338, 1e-9));
    CHECK_THAT(midpoint(xi(t2)), Catch::Matchers::WithinAbs(-0.2410859067, 1e-9));
}

TEST_CASE("refine keeps the same root and narrows") {
    Rat tiny(1);
    for (int i = 0; i < 30; ++i) tiny /= 10;
    auto iv = refine(xi(complete(2)), tiny);
    CHECK(iv.hi - iv.lo <= tiny);
    CHECK(iv.lo < make_rat(-1, 2));
    CHECK(make_rat(-1, 2) <= iv.hi);

    auto c5 = refine(xi(cycle(5)), tiny);
    CHECK(valid_certificate(c5));
    auto again = refine(c5, tiny / 1000);
    CHECK(again.lo >= c5.lo - tiny);
    CHECK(again.hi <= c5.hi + tiny);
}

TEST_CASE("sign_at_root") {
    auto k2 = xi(complete(2));  // root -1/2
    CHECK(sign_at_root(Poly{{Int(1), Int(1)}}, k2) == 1);   // 1+x > 0 there
    CHECK(sign_at_root(Poly::x(), k2) == -1);               // x < 0 there
    CHECK(sign_at_root(Poly{{Int(1), Int(2)}}, k2) == 0);   // 1+2x vanishes
    CHECK(sign_at_root(k2.poly * Poly{{Int(5), Int(7)}}, k2) == 0);
    CHECK(sign_at_root(Poly{}, k2) == 0);

    // irrational root: xi(C_4) = -1+1/sqrt(2); test Q = 1+4x+2x^2 shares it
    auto c4 = xi(cycle(4));
    CHECK(sign_at_root(Poly{{Int(1), Int(4), Int(2)}}, c4) == 0);
    CHECK(sign_at_root(Poly{{Int(1), Int(1)}}, c4) == 1);
    CHECK(sign_at_root(Poly{{Int(1), Int(5)}}, c4) == -1);  // 1+5x at -0.2928 < 0
}

TEST_CASE("xi ordering across random trees") {
    std::mt19937_64 rng(211);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 4 + static_cast<int>(rng() % 7);
        Graph t = random_tree(rng, n);
        auto ivp = xi(path(n));
        auto ivt = xi(t);
        auto ivs = xi(star(n));
        // xi(P_n) <= xi(T) <= xi(S_n), up to certificate width
        CHECK(ivp.lo <= ivt.hi);
        CHECK(ivt.lo <= ivs.hi);
    }
}

TEST_CASE("xi lies in [-1,0) for assorted graphs") {
    std::mt19937_64 rng(223);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + static_cast<int>(rng() % 9);
        GraphBuilder b(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng() % 3 == 0) b.add_edge(i, j);
        Graph g = b.take();
        auto iv = xi(g);
        CHECK(iv.hi < 0);
        CHECK(Rat(-1) <= iv.hi);
        CHECK(valid_certificate(iv));
        // the polynomial really has no root to the right of the bracket
        CHECK(isolate_roots(independence_poly(g), iv.hi, Rat(0)).empty());
    }
}
