#include <doctest.h>

#include "degen/perrin.hpp"
#include "oracles.hpp"

using namespace degen;

TEST_CASE("perrin_energy")
{
    CHECK(perrin_energy({1, 2}) == 28);
    CHECK(perrin_energy({3, 5}) == 196);
    CHECK(perrin_energy({1, 3}) == 52);
    CHECK(level_of(52)->states == std::vector<State>{{1, 7}, {3, 5}, {4, 2}});
}

TEST_CASE("seed validation")
{
    CHECK_THROWS_AS(PerrinSeed(2, 2), InvalidSeedError);
    CHECK_THROWS_AS(PerrinSeed(3, 1), InvalidSeedError);
    CHECK_THROWS_AS(PerrinSeed(0, 1), InvalidSeedError);
    CHECK_NOTHROW(PerrinSeed(1, 2));
}

TEST_CASE("perrin_triplet")
{
    auto t = perrin_triplet({1, 2});
    CHECK(t.energy == 28);
    CHECK(t.states == std::array<State, 3>{{{1, 5}, {2, 4}, {3, 1}}});

    t = perrin_triplet({3, 5});
    CHECK(t.energy == 196);
    CHECK(t.states == std::array<State, 3>{{{3, 13}, {5, 11}, {8, 2}}});
}

TEST_CASE("match_perrin")
{
    CHECK(match_perrin(*level_of(28)) == PerrinSeed(1, 2));
    CHECK(match_perrin(*level_of(196)) == PerrinSeed(3, 5));
    CHECK_FALSE(match_perrin(*level_of(91)));
    CHECK_FALSE(match_perrin(*level_of(4)));
}

TEST_CASE("generator soundness, parity and distinctness over a seed grid")
{
    std::size_t seeds = 0;
    for (std::uint64_t m1 = 1; 12 * m1 * m1 <= 100000; ++m1)
        for (std::uint64_t m2 = m1 + 1; 4 * (m1 * m1 + m1 * m2 + m2 * m2) <= 100000; ++m2) {
            const PerrinSeed seed(m1, m2);
            const auto t = perrin_triplet(seed);
            ++seeds;
            CHECK(t.energy % 4 == 0);
            for (const State& s : t.states) {
                CHECK(energy_of(s) == t.energy);
                CHECK(s.n1 % 2 == s.n2 % 2);
            }
            CHECK(t.states[0] != t.states[1]);
            CHECK(t.states[1] != t.states[2]);
            CHECK(t.states[0] != t.states[2]);

            const auto level = level_of(t.energy);
            REQUIRE(level);
            CHECK(level->parity == ParityClass::SameParity);
            const auto matched = match_perrin(*level);
            REQUIRE(matched);
            CHECK(*matched <= seed);
            for (const State& s : perrin_triplet(*matched).states)
                CHECK(level->view().contains(s));
        }
    CHECK(seeds > 1000);
}

TEST_CASE("seed enumeration agrees with the m1-range search")
{
    for (const auto& [e, states] : oracle::naive_levels(20000)) {
        const auto level = level_of(e);
        REQUIRE(level);
        std::vector<oracle::Pair> got;
        for (const auto& s : perrin_seeds(*level))
            got.push_back({s.m1(), s.m2()});
        CHECK(got == oracle::naive_perrin_seeds(e, states));
    }
}
