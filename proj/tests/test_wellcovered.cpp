#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "indpoly/families.hpp"
#include "indpoly/wellcovered.hpp"

using namespace indpoly;

namespace {

Graph random_tree(std::mt19937_64& rng, int n) {
    GraphBuilder b(n);
    for (int v = 1; v < n; ++v)
        b.add_edge(v, static_cast<int>(rng() % static_cast<std::uint64_t>(v)));
    return b.take();
}

}  // namespace

TEST_CASE("maximal independent set reports") {
    auto kn = maximal_independent_sets(make_complete(6));
    REQUIRE(kn.size_counts.size() == 1);
    CHECK(kn.size_counts.at(1) == 6);

    auto p5 = maximal_independent_sets(make_path(5));
    REQUIRE(p5.size_counts.size() == 2);
    CHECK(p5.size_counts.at(2) == 3);
    CHECK(p5.size_counts.at(3) == 1);
    CHECK(p5.min_witness.size() == 2);
    CHECK(p5.max_witness.size() == 3);

    auto c7 = maximal_independent_sets(make_cycle(7));
    REQUIRE(c7.size_counts.size() == 1);
    CHECK(c7.size_counts.begin()->first == 3);

    CHECK_THROWS_AS(maximal_independent_sets(make_path(23)), BudgetError);
    CHECK_THROWS_AS(maximal_independent_sets(GraphBuilder(0).take()), PreconditionError);
}

TEST_CASE("maximal set counts cross-checked by brute force") {
    std::mt19937_64 rng(501);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 1 + static_cast<int>(rng() % 9);
        GraphBuilder b(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng() % 3 == 0) b.add_edge(i, j);
        Graph g = b.take();
        // oracle: scan all subsets for maximal independent ones
        std::map<int, std::uint64_t> expected;
        for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
            bool independent = true;
            for (int v = 0; v < n && independent; ++v)
                if ((s >> v & 1) && (g.neighbors_mask(v) & s)) independent = false;
            if (!independent) continue;
            bool maximal = true;
            for (int v = 0; v < n && maximal; ++v)
                if (!(s >> v & 1) && !(g.neighbors_mask(v) & s)) maximal = false;
            if (maximal) ++expected[std::popcount(s)];
        }
        CHECK(maximal_independent_sets(g).size_counts == expected);
    }
}

TEST_CASE("well-covered flags") {
    CHECK(is_well_covered(make_cycle(7)));
    CHECK(!is_very_well_covered(make_cycle(7)));
    CHECK(!is_well_covered(make_path(5)));
    for (int n : {3, 4, 5, 7}) CHECK(is_well_covered(make_cycle(n)));
    CHECK(!is_well_covered(make_cycle(6)));
    CHECK(!is_well_covered(make_cycle(8)));

    std::mt19937_64 rng(503);
    for (int trial = 0; trial < 30; ++trial) {
        Graph t = random_tree(rng, 1 + static_cast<int>(rng() % 8));
        CHECK(is_very_well_covered(corona(t)));
    }
}

TEST_CASE("pendant edge matching") {
    CHECK(pendant_edges_perfect_matching(corona(make_path(4))));
    CHECK(!pendant_edges_perfect_matching(make_path(5)));
    CHECK(!pendant_edges_perfect_matching(make_g2n(5)));
    CHECK(pendant_edges_perfect_matching(make_path(2)));
    CHECK(!pendant_edges_perfect_matching(make_complete(1)));
    CHECK(!pendant_edges_perfect_matching(make_cycle(4)));
}

TEST_CASE("for trees the pendant criterion decides well-coveredness") {
    std::mt19937_64 rng(509);
    for (int trial = 0; trial < 120; ++trial) {
        int n = 2 + static_cast<int>(rng() % 11);
        Graph t = random_tree(rng, n);
        CHECK(is_well_covered(t) == pendant_edges_perfect_matching(t));
    }
}

TEST_CASE("well-covered trees are coronas") {
    std::mt19937_64 rng(521);
    int covered = 0;
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + static_cast<int>(rng() % 5);
        Graph t = corona(random_tree(rng, n));
        REQUIRE(is_well_covered(t));
        ++covered;
    }
    CHECK(covered == 200);
}
