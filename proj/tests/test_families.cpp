#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "indpoly/engine.hpp"
#include "indpoly/families.hpp"
#include "indpoly/order.hpp"

using namespace indpoly;

TEST_CASE("family dispatch and spec parsing") {
    CHECK(make(parse_family_spec("u_n:7")).order() == 7);
    CHECK(make(parse_family_spec("g_gkl:3,2,1")).order() == 9);
    CHECK(make(parse_family_spec("t1")).order() == 8);
    CHECK(make(parse_family_spec("g_2n:6")).order() == 12);
    CHECK(make(parse_family_spec("complete_bipartite:2,3")).size() == 6);

    CHECK_THROWS_AS(make(parse_family_spec("zigzag:3")), PreconditionError);
    CHECK_THROWS_AS(make(parse_family_spec("u_n:2,3")), PreconditionError);
    CHECK_THROWS_AS(make(parse_family_spec("u_n:3")), PreconditionError);
    CHECK_THROWS_AS(make(parse_family_spec("cycle:2")), PreconditionError);
    CHECK_THROWS_AS(make(parse_family_spec("m_n:10")), PreconditionError);
    CHECK_THROWS_AS(make(parse_family_spec("g_gkl:4,1,1")), PreconditionError);
    CHECK_THROWS_AS(make(parse_family_spec("g_gkl:3,0,0")), PreconditionError);
    CHECK_THROWS_AS(parse_family_spec("u_n:x"), ParseError);
    CHECK_THROWS_AS(parse_family_spec("u_n:"), ParseError);
}

TEST_CASE("structural invariants of the named families") {
    for (int n = 4; n <= 12; ++n) {
        Graph d = make_d(n), u = make_u(n);
        CHECK(d.order() == n);
        CHECK(d.size() == n);
        CHECK(girth(d) == 3);
        CHECK(u.order() == n);
        CHECK(u.size() == n);
        CHECK(max_degree(u) == n - 1);
    }
    for (int n = 9; n <= 15; n += 2) {
        Graph m = make_m(n);
        CHECK(m.order() == n);
        CHECK(girth(m) == 3);
        CHECK(m.degree(2) == 2 + (n - 3) / 2);
    }
    for (int n = 5; n <= 9; ++n) CHECK(make_g2n(n).order() == 2 * n);
    CHECK(make_g_gkl(5, 2, 2).order() == 5 + 2 * 4);
    CHECK(corona(make_path(5)).order() == 10);
}

TEST_CASE("known equivalences involving families") {
    CHECK(is_equivalent(make_u(4), make_cycle(4)));
    CHECK(is_equivalent(make_d(6), make_cycle(6)));
    CHECK(is_equivalent(make_g_gkl(3, 2, 1), make_g_gkl(3, 3, 0)));
    CHECK(independence_poly(make_g2n(5)) ==
          poly_from_string("1 + 10x + 36x^2 + 59x^3 + 45x^4 + 13x^5"));
}

TEST_CASE("u_n closed form") {
    Poly onePlusX{{Int(1), Int(1)}};
    for (int n = 4; n <= 20; ++n)
        CHECK(independence_poly(make_u(n)) ==
              Poly{{Int(1), Int(2)}} * onePlusX.pow(n - 3) + Poly::x());
}

TEST_CASE("g_2n is equivalent to the path corona") {
    for (int n = 5; n <= 12; ++n)
        CHECK(independence_poly(make_g2n(n)) == independence_poly(corona(make_path(n))));
}

TEST_CASE("g_2n recursion drops to the previous member") {
    for (int n = 6; n <= 8; ++n) {
        Graph g = make_g2n(n);
        // removing the newest spine vertex leaves the previous member
        // plus the isolated pendant
        Graph smaller = delete_vertex(g, 2 * n - 2);
        Graph expected = disjoint_union(make_g2n(n - 1), GraphBuilder(1).take());
        CHECK(is_isomorphic(smaller, expected));
    }
}

TEST_CASE("same-order members of the P-branch class are equivalent") {
    for (int order = 5; order <= 17; order += 2) {
        std::vector<Graph> members;
        for (int g : {3, 5}) {
            if ((order - g) % 2 != 0 || order - g <= 0) continue;
            int s = (order - g) / 2;
            for (int k = 0; k <= s; ++k) members.push_back(make_g_gkl(g, k, s - k));
        }
        REQUIRE(members.size() > 1);
        Poly first = independence_poly(members[0]);
        for (std::size_t i = 1; i < members.size(); ++i)
            CHECK(independence_poly(members[i]) == first);
    }
}

TEST_CASE("t1 and t2 edge lists") {
    Graph t1 = make_t1(), t2 = make_t2();
    CHECK(t1.order() == 8);
    CHECK(t2.order() == 8);
    CHECK(t1.size() == 7);
    CHECK(t2.size() == 7);
    CHECK(t1.edges() == std::vector<std::pair<int, int>>(
                            {{0, 1}, {0, 5}, {1, 2}, {1, 3}, {1, 4}, {5, 6}, {5, 7}}));
    CHECK(t2.edges() == std::vector<std::pair<int, int>>(
                            {{0, 1}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {4, 6}, {5, 7}}));
    CHECK(!is_isomorphic(t1, t2));
}

TEST_CASE("star swap") {
    // spider with legs (2,1,1): center 0, legs 0-1-2, 0-3, 0-4
    Graph spider = Graph::from_edges(5, {{0, 1}, {1, 2}, {0, 3}, {0, 4}});
    Graph swapped = star_swap(spider, 3, 0, 1);
    int leaves = 0, before = 0;
    for (int v = 0; v < 5; ++v) {
        if (spider.degree(v) == 1) ++before;
        if (swapped.degree(v) == 1) ++leaves;
    }
    CHECK(leaves == before - 1);
    CHECK(is_isomorphic(swapped, make_path(5)));

    CHECK_THROWS_AS(star_swap(spider, 0, 0, 1), PreconditionError);  // u not a leaf
    CHECK_THROWS_AS(star_swap(spider, 2, 1, 3), PreconditionError);  // v not the branch vertex
    CHECK_THROWS_AS(star_swap(spider, 3, 0, 0), PreconditionError);  // w = path vertex
    CHECK_THROWS_AS(star_swap(make_path(4), 0, 1, 2), PreconditionError);  // no branching vertex
}

TEST_CASE("star swap is order-decreasing on random trees") {
    std::mt19937_64 rng(401);
    int done = 0;
    for (int trial = 0; trial < 400 && done < 200; ++trial) {
        int n = 5 + static_cast<int>(rng() % 5);
        GraphBuilder b(n);
        for (int v = 1; v < n; ++v)
            b.add_edge(v, static_cast<int>(rng() % static_cast<std::uint64_t>(v)));
        Graph t = b.take();
        // find a valid (u, v, w)
        for (int u = 0; u < n; ++u) {
            if (t.degree(u) != 1) continue;
            auto path = detail::leaf_path(t, u);
            int v = path.back();
            if (t.degree(v) < 3) continue;
            int w = -1;
            for (int cand : mask_to_vertices(t.neighbors_mask(v)))
                if (cand != u && !detail::on_path(path, cand)) w = cand;
            if (w < 0) continue;
            Graph s = star_swap(t, u, v, w);
            CHECK(is_preceq(s, t));
            ++done;
            break;
        }
    }
    CHECK(done == 200);
}

TEST_CASE("dagger swap straightens a double branch") {
    // triangle 0-1-2 with two K_2 branches at 0: 3-4 and 5-6
    Graph g = Graph::from_edges(
        7, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
    Graph result = dagger_swap(g, 3, 0, 5);
    CHECK(is_preceq(result, g));
    CHECK(is_isomorphic(result, make_g_gkl(3, 2, 0)));

    CHECK_THROWS_AS(dagger_swap(g, 4, 0, 5), PreconditionError);  // u has degree 1
    CHECK_THROWS_AS(dagger_swap(g, 3, 5, 0), PreconditionError);  // v not nearest
    CHECK_THROWS_AS(dagger_swap(g, 3, 0, 1), PreconditionError);  // w outside the branch
}

TEST_CASE("iterated dagger reaches the single-degree-2 branch form") {
    // 5-cycle with three K_2 branches at vertex 0
    GraphBuilder b(11);
    for (int i = 0; i < 5; ++i) b.add_edge(i, (i + 1) % 5);
    for (int leg = 0; leg < 3; ++leg) {
        b.add_edge(0, 5 + 2 * leg);
        b.add_edge(5 + 2 * leg, 6 + 2 * leg);
    }
    Graph g = b.take();
    // each dagger reduces the count of degree-2 branch vertices
    Graph cur = g;
    int guard = 0;
    for (;;) {
        std::uint64_t mask = detail::branch_mask(cur, 0);
        REQUIRE(mask != 0);
        std::vector<int> deg2;
        for (int v : mask_to_vertices(mask & ~std::uint64_t{1}))
            if (cur.degree(v) == 2) deg2.push_back(v);
        if (deg2.size() < 2) break;
        // pick u = first degree-2 vertex; find matching v and w
        int u = deg2.front();
        auto dist = detail::masked_distances(cur, mask, u);
        int v = -1;
        for (int s : mask_to_vertices(mask))
            if (detail::masked_degree(cur, mask, s) >= 4 &&
                (v < 0 || dist[static_cast<std::size_t>(s)] < dist[static_cast<std::size_t>(v)]))
                v = s;
        if (v < 0 || dist[static_cast<std::size_t>(v)] > dist[0]) v = 0;
        auto fromX = detail::masked_distances(cur, mask, 0);
        int w = -1;
        for (int cand : mask_to_vertices(cur.neighbors_mask(v) & mask))
            if (cur.degree(cand) > 1 &&
                dist[static_cast<std::size_t>(cand)] + fromX[static_cast<std::size_t>(cand)] !=
                    dist[0])
                w = cand;
        REQUIRE(w >= 0);
        Graph next = dagger_swap(cur, u, v, w);
        CHECK(is_preceq(next, cur));
        cur = next;
        REQUIRE(++guard < 10);
    }
    // final branch is a path corona: equivalent to G(5,3,0)
    CHECK(is_equivalent(cur, make_g_gkl(5, 3, 0)));
}

TEST_CASE("build_s4") {
    Graph member = build_s4(make_path(4), 1, 2);
    CHECK(member.order() == 6);
    CHECK(girth(member) == 4);
    CHECK(is_well_covered(member));

    CHECK_THROWS_AS(build_s4(make_path(4), 0, 1), PreconditionError);   // pendant edge
    CHECK_THROWS_AS(build_s4(make_path(3), 0, 1), PreconditionError);   // not well-covered
    CHECK_THROWS_AS(build_s4(make_cycle(4), 0, 1), PreconditionError);  // not a tree
    CHECK_THROWS_AS(build_s4(corona(make_star(3)), 1, 4), PreconditionError);  // pendant uv
}

TEST_CASE("build_s3_s5") {
    Graph k1 = GraphBuilder(1).take();
    // one K_2 branch on a triangle: the G(3,1,0) shape
    Graph a = build_s3_s5(3, {{{k1, 0}}, {}, {}});
    CHECK(a.order() == 5);
    CHECK(is_well_covered(a));
    CHECK(is_isomorphic(a, make_g_gkl(3, 1, 0)));

    // branches on two adjacent triangle vertices are fine
    Graph b = build_s3_s5(3, {{{k1, 0}}, {{make_path(2), 0}}, {}});
    CHECK(b.order() == 3 + 2 + 4);
    CHECK(is_well_covered(b));

    // two branches on nonadjacent C_5 vertices
    Graph c = build_s3_s5(5, {{{k1, 0}}, {}, {{k1, 0}}, {}, {}});
    CHECK(is_well_covered(c));

    CHECK_THROWS_AS(build_s3_s5(5, {{{k1, 0}}, {{k1, 0}}, {}, {}, {}}), PreconditionError);
    CHECK_THROWS_AS(build_s3_s5(3, {{}, {}, {}}), PreconditionError);
    CHECK_THROWS_AS(build_s3_s5(4, {{}, {}, {}, {}}), PreconditionError);
    // attaching at a pendant of the corona is rejected
    CHECK_THROWS_AS(build_s3_s5(3, {{{make_path(2), 2}}, {}, {}}), PreconditionError);
}
