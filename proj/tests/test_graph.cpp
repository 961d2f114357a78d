#include <iap/graph.hpp>
#include <iap/random.hpp>
#include <support/oracles.hpp>

#include <doctest.h>

#include <stdexcept>

#include <set>

using namespace iap;

TEST_CASE("from_edge_list")
{
    std::vector<std::pair<Int, Int>> one{{1, 2}};
    CHECK(from_edge_list(3, one).edge_count() == 1);

    std::vector<std::pair<Int, Int>> repeated{{1, 2}, {2, 1}, {1, 2}};
    auto g = from_edge_list(3, repeated);
    CHECK(g.edge_count() == 1);
    CHECK(g.adjacent(2, 1));
    CHECK_FALSE(g.adjacent(1, 3));

    std::vector<std::pair<Int, Int>> loop{{2, 2}};
    auto h = from_edge_list(3, loop);
    CHECK(h.edge_count() == 0);
    CHECK(h.forbidden_vertices() == std::vector<Int>{2});
    CHECK_FALSE(h.adjacent(2, 2));

    std::vector<std::pair<Int, Int>> bad{{1, 2}, {3, 4}};
    try {
        from_edge_list(3, bad);
        FAIL("expected out_of_range");
    }
    catch (const std::out_of_range & e) {
        CHECK(std::string(e.what()).find("edge 2") != std::string::npos);
    }
}

TEST_CASE("IntGraph invariants under random construction")
{
    Rng rng(11);
    for (Int n : {1, 2, 63, 64, 65, 130}) {
        Int pairs = n * (n - 1) / 2;
        auto g = random_graph(n, pairs / 3, rng);
        CHECK(g.edge_count() == pairs / 3);
        Int bits = 0;
        for (Int u = 1 ; u <= n ; ++u) {
            CHECK_FALSE(g.adjacent(u, u));
            bits += g.degree(u);
            for (Int v = 1 ; v <= n ; ++v)
                REQUIRE(g.adjacent(u, v) == g.adjacent(v, u));
        }
        CHECK(bits == 2 * g.edge_count());
        CHECK(static_cast<Int>(g.edges().size()) == g.edge_count());
    }
    CHECK_THROWS_AS(IntGraph(0), std::invalid_argument);
    CHECK_THROWS_AS(IntGraph(IntGraph::max_vertices + 1), std::invalid_argument);
}

TEST_CASE("Coloring bookkeeping")
{
    std::vector<Int> colours{7, 7, 3, 9, 3, 7};
    Coloring c(colours);
    CHECK(c.n() == 6);
    CHECK(c.color_count() == 3);
    CHECK(c.max_multiplicity() == 3);
    Int total = 0;
    for (Int m : c.multiplicity())
        total += m;
    CHECK(total == 6);
    CHECK(c.label_of(4) == "9");
    CHECK(c.color_of(1) == c.color_of(6));

    std::vector<std::string> labels{"red", "blue", "red"};
    auto d = Coloring::from_labels(labels);
    CHECK(d.color_count() == 2);
    CHECK(d.label_of(3) == "red");
}

TEST_CASE("from_coloring examples")
{
    std::vector<Int> distinct{1, 2, 3, 4, 5};
    CHECK(from_coloring(Coloring(distinct)).edge_count() == 0);
    std::vector<Int> pairs{1, 1, 2, 2};
    CHECK(from_coloring(Coloring(pairs)).edge_count() == 2);
    // classes of sizes 3, 2, 1: C(3,2) + C(2,2)
    std::vector<Int> mixed{1, 2, 1, 3, 1, 2};
    CHECK(from_coloring(Coloring(mixed)).edge_count() == 4);
}

TEST_CASE("from_coloring is a disjoint union of cliques within the multiplicity bound")
{
    Rng rng(5);
    for (int trial = 0 ; trial < 30 ; ++trial) {
        Int n = rng.between(2, 200);
        Int m = rng.between(1, 6);
        auto c = random_coloring(n, m, rng);
        CHECK(c.max_multiplicity() <= m);
        auto g = from_coloring(c);
        for (Int u = 1 ; u <= n ; ++u)
            for (Int v = u + 1 ; v <= n ; ++v)
                REQUIRE(g.adjacent(u, v) == (c.color_of(u) == c.color_of(v)));
        Int top = c.max_multiplicity();
        CHECK(2 * g.edge_count() <= n * (top - 1));
    }
}

TEST_CASE("PermutationMap validation")
{
    CHECK_THROWS_AS(PermutationMap(std::vector<Int>{1, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(PermutationMap(std::vector<Int>{1, 4, 2}), std::invalid_argument);
    CHECK_THROWS_AS(PermutationMap(std::vector<Int>{}), std::invalid_argument);
    auto r = PermutationMap::reversal(5);
    CHECK(r.image(1) == 5);
    CHECK(r.image(3) == 3);
}

TEST_CASE("from_permutation examples")
{
    auto id = from_permutation(PermutationMap::identity(5), FixedPointMode::strict);
    CHECK(id.edge_count() == 0);
    CHECK(id.forbidden_count() == 5);
    auto weak = from_permutation(PermutationMap::identity(5), FixedPointMode::weak);
    CHECK(weak.edge_count() == 0);
    CHECK(weak.forbidden_count() == 0);

    auto swaps = from_permutation(PermutationMap(std::vector<Int>{2, 1, 4, 3}), FixedPointMode::strict);
    CHECK(swaps.edge_count() == 2);
    CHECK(swaps.forbidden_count() == 0);

    for (Int n = 3 ; n <= 12 ; ++n) {
        std::vector<Int> cycle;
        for (Int i = 1 ; i <= n ; ++i)
            cycle.push_back(i % n + 1);
        CHECK(from_permutation(PermutationMap(cycle), FixedPointMode::strict).edge_count() == n);
    }
}

TEST_CASE("from_permutation edge count equals the distinct moved pairs")
{
    Rng rng(99);
    for (int trial = 0 ; trial < 50 ; ++trial) {
        Int n = rng.between(1, 80);
        auto p = random_permutation(n, rng);
        std::set<std::pair<Int, Int>> pairs;
        for (Int i = 1 ; i <= n ; ++i)
            if (p.image(i) != i)
                pairs.emplace(std::min(i, p.image(i)), std::max(i, p.image(i)));
        auto g = from_permutation(p, FixedPointMode::weak);
        CHECK(g.edge_count() == static_cast<Int>(pairs.size()));
        CHECK(g.edge_count() <= n);
    }
}

TEST_CASE("is_independent")
{
    IntGraph empty(10);
    CHECK(is_independent(empty, Progression{1, 3, 4}));

    std::vector<std::pair<Int, Int>> one{{2, 8}};
    auto g = from_edge_list(10, one);
    CHECK_FALSE(is_independent(g, Progression{2, 3, 3}));
    CHECK(is_independent(g, Progression{2, 2, 3}));

    IntGraph h(10);
    h.forbid(5);
    CHECK_FALSE(is_independent(h, Progression{1, 2, 3}));

    CHECK_THROWS_AS(is_independent(g, Progression{5, 3, 3}), std::out_of_range);
}

TEST_CASE("is_independent agrees with a naive pair loop")
{
    Rng rng(2024);
    for (int trial = 0 ; trial < 40 ; ++trial) {
        Int n = rng.between(3, 40);
        auto g = random_graph(n, rng.between(0, n * (n - 1) / 4), rng);
        if (rng.below(2))
            g.forbid(rng.between(1, n));
        for (Int k = 1 ; k <= 4 ; ++k)
            for (const auto & p : oracle::all_aps(n, k, oracle::any_difference()))
                REQUIRE(is_independent(g, p) == oracle::independent_naive(g, p));
    }
}

TEST_CASE("random_graph is deterministic and exact")
{
    Rng a(7), b(7);
    auto g = random_graph(50, 300, a);
    auto h = random_graph(50, 300, b);
    CHECK(g.edges() == h.edges());
    CHECK(g.edge_count() == 300);
    Rng c(8);
    CHECK(random_graph(20, 190, c).edge_count() == 190);
    CHECK_THROWS_AS(random_graph(5, 11, c), std::invalid_argument);
}
