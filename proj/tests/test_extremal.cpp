#include <iap/extremal.hpp>
#include <support/oracles.hpp>

#include <doctest.h>

#include <algorithm>

#include <stdexcept>

using namespace iap;

namespace
{
    const SieveTable & table()
    {
        static const SieveTable t = build_sieve(250'000);
        return t;
    }

    std::vector<Int> iota_vector(Int n)
    {
        std::vector<Int> v;
        for (Int i = 1 ; i <= n ; ++i)
            v.push_back(i);
        return v;
    }
}

TEST_CASE("canonical partition counts match the recursion")
{
    const std::vector<Int> bell{1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975};
    for (Int n = 0 ; n < static_cast<Int>(bell.size()) ; ++n) {
        CHECK(count_canonical_partitions(n, std::max<Int>(n, 1)) == bell[n]);
        CHECK(oracle::partition_count(n, n, -1) == bell[n]);
    }
    for (Int n = 1 ; n <= 9 ; ++n)
        for (Int b = 1 ; b <= 4 ; ++b) {
            CHECK(count_canonical_partitions(n, b) == oracle::partition_count(n, b, -1));
            for (Int blocks = 1 ; blocks <= n ; ++blocks)
                CHECK(count_canonical_partitions(n, b, blocks) == oracle::partition_count(n, b, blocks));
        }
    // pairings of [6]: 5 * 3 * 1
    CHECK(count_canonical_partitions(6, 2, 3) == 15);
}

TEST_CASE("direct rainbow and free-progression checks")
{
    CHECK(has_rainbow_ap(Coloring(iota_vector(3)), 3));
    CHECK_FALSE(has_rainbow_ap(Coloring(std::vector<Int>{1, 1, 2, 2, 1, 1}), 3));
    CHECK(has_rainbow_ap(Coloring(std::vector<Int>{1, 2, 1, 3}), 3));  // {2, 3, 4}
    CHECK_FALSE(has_free_ap(PermutationMap::identity(7), 3, FixedPointMode::strict));
    CHECK(has_free_ap(PermutationMap::identity(7), 3, FixedPointMode::weak));
    CHECK(has_free_ap(PermutationMap::reversal(9), 3, FixedPointMode::strict));
}

TEST_CASE("colouring search small cases")
{
    SearchBudget budget;
    for (Int k = 2 ; k <= 6 ; ++k) {
        auto below = exists_coloring_without_rainbow(k - 1, 1, k, budget);
        CHECK(below.outcome == Outcome::complete);
        CHECK(below.witness);
        auto at = exists_coloring_without_rainbow(k, 1, k, budget);
        CHECK(at.outcome == Outcome::complete);
        CHECK_FALSE(at.witness);
    }
    for (Int n = 1 ; n <= 7 ; ++n)
        for (Int m = 1 ; m <= 3 ; ++m)
            for (Int k = 2 ; k <= 4 ; ++k) {
                auto r = exists_coloring_without_rainbow(n, m, k, budget);
                REQUIRE(r.outcome == Outcome::complete);
                CHECK_MESSAGE(r.witness.has_value() == oracle::bad_coloring_exists_bruteforce(n, m, k),
                        "n=" << n << " m=" << m << " k=" << k);
                if (r.witness) {
                    CHECK(r.witness->max_multiplicity() <= m);
                    CHECK_FALSE(has_rainbow_ap(*r.witness, k));
                }
            }
}

TEST_CASE("equinumerous colouring search")
{
    SearchBudget budget;
    // t < k colours can never be rainbow on k points
    auto few = exists_equinumerous_coloring_without_rainbow(2, 3, 3, budget);
    REQUIRE(few.witness);
    CHECK(few.witness->color_count() == 2);
    CHECK(few.witness->max_multiplicity() == 3);
    // three singletons are rainbow
    CHECK_FALSE(exists_equinumerous_coloring_without_rainbow(3, 1, 3, budget).witness);
    auto r = exists_equinumerous_coloring_without_rainbow(3, 3, 3, budget);
    if (r.witness) {
        CHECK(r.witness->color_count() == 3);
        for (Int count : r.witness->multiplicity())
            CHECK(count == 3);
        CHECK_FALSE(has_rainbow_ap(*r.witness, 3));
    }
}

TEST_CASE("sr_exact values")
{
    SearchBudget budget;
    FinderConfig cfg;
    for (Int k = 3 ; k <= 8 ; ++k) {
        auto r = sr_exact(1, k, 12, budget);
        CHECK(r.outcome == Outcome::complete);
        REQUIRE(r.value);
        CHECK(*r.value == k);
        CHECK(*r.value <= sr_upper_bound(1, k, cfg));
    }
    // frozen measurements
    auto two_three = sr_exact(2, 3, 12, budget);
    REQUIRE(two_three.value);
    CHECK(*two_three.value == 5);
    auto two_four = sr_exact(2, 4, 14, budget);
    REQUIRE(two_four.value);
    CHECK(*two_four.value == 11);
    auto three_three = sr_exact(3, 3, 12, budget);
    REQUIRE(three_three.value);
    CHECK(*three_three.value == 9);
    for (const auto & r : {two_three, two_four, three_three})
        CHECK(r.outcome == Outcome::complete);
    CHECK(*two_three.value <= sr_upper_bound(2, 3, cfg));

    // the first forced size agrees with brute force
    CHECK(oracle::bad_coloring_exists_bruteforce(4, 2, 3));
    CHECK_FALSE(oracle::bad_coloring_exists_bruteforce(5, 2, 3));
}

TEST_CASE("sr_exact reports exhaustion honestly")
{
    SearchBudget tiny{5, 60.0};
    auto r = sr_exact(3, 3, 12, tiny);
    CHECK(r.outcome == Outcome::exhausted);
    CHECK_FALSE(r.value);
    // horizon below the answer
    auto short_horizon = sr_exact(2, 4, 8, SearchBudget{});
    CHECK(short_horizon.outcome == Outcome::exhausted);
    CHECK_FALSE(short_horizon.value);
}

TEST_CASE("permutation search")
{
    SearchBudget budget;
    auto tiny = exists_permutation_without_free_ap(2, 3, FixedPointMode::strict, budget);
    REQUIRE(tiny.witness);
    CHECK(*tiny.witness == PermutationMap::identity(2));
    for (Int n = 3 ; n <= 10 ; ++n) {
        auto strict = exists_permutation_without_free_ap(n, 3, FixedPointMode::strict, budget);
        REQUIRE(strict.witness);
        CHECK_FALSE(has_free_ap(*strict.witness, 3, FixedPointMode::strict));
    }
    for (Int n = 1 ; n <= 8 ; ++n)
        for (auto mode : {FixedPointMode::strict, FixedPointMode::weak}) {
            auto r = exists_permutation_without_free_ap(n, 3, mode, budget);
            REQUIRE(r.outcome == Outcome::complete);
            CHECK_MESSAGE(r.witness.has_value() == oracle::bad_permutation_exists_bruteforce(n, 3, mode),
                    "n=" << n << " mode=" << to_string(mode));
            if (r.witness)
                CHECK_FALSE(has_free_ap(*r.witness, 3, mode));
        }
    // frozen: weak bad permutations for k = 3 stop at n = 9
    CHECK(exists_permutation_without_free_ap(9, 3, FixedPointMode::weak, budget).witness);
    for (Int n = 10 ; n <= 18 ; ++n) {
        auto r = exists_permutation_without_free_ap(n, 3, FixedPointMode::weak, budget);
        CHECK(r.outcome == Outcome::complete);
        CHECK_FALSE(r.witness);
    }
    CHECK_THROWS_AS(exists_permutation_without_free_ap(5, 1, FixedPointMode::weak, budget), std::invalid_argument);
}

TEST_CASE("n0_probe")
{
    SearchBudget budget;
    FinderConfig cfg;
    const auto & t = table();

    auto strict = n0_probe(3, FixedPointMode::strict, 8, budget, cfg, t);
    CHECK(strict.largest_bad == 8);
    CHECK_FALSE(strict.n0_exact);
    CHECK(strict.note.find("identity") != std::string::npos);

    auto short_run = n0_probe(3, FixedPointMode::weak, 8, budget, cfg, t);
    CHECK(short_run.largest_bad == 8);
    CHECK_FALSE(short_run.n0_exact);
    CHECK(short_run.n0_upper_bound == 18);

    auto full = n0_probe(3, FixedPointMode::weak, 18, budget, cfg, t);
    CHECK(full.largest_bad == 9);
    REQUIRE(full.n0_exact);
    CHECK(*full.n0_exact == 10);
    CHECK(*full.n0_exact <= *full.n0_upper_bound);
    for (const auto & step : full.steps)
        if (step.witness)
            CHECK_FALSE(has_free_ap(*step.witness, 3, FixedPointMode::weak));
}

TEST_CASE("tk_probe")
{
    SearchBudget budget;
    auto few = tk_probe(2, 3, 4, budget);
    CHECK_FALSE(few.all_forced);
    for (const auto & step : few.steps) {
        REQUIRE(step.witness);
        CHECK(step.verdict.bad_exists == true);
        CHECK_FALSE(has_rainbow_ap(*step.witness, 3));
    }
    auto three = tk_probe(3, 3, 1, budget);
    CHECK(three.all_forced);
    auto forced = tk_probe(3, 3, 4, budget);
    CHECK(forced.all_forced);
    for (const auto & step : forced.steps)
        CHECK(step.verdict.outcome == Outcome::complete);
    CHECK_FALSE(forced.note.empty());
    CHECK_THROWS_AS(tk_probe(0, 3, 1, budget), std::invalid_argument);
}

TEST_CASE("outcome names")
{
    CHECK(to_string(Outcome::complete) == "COMPLETE");
    CHECK(to_string(Outcome::exhausted) == "EXHAUSTED");
}
