#include "degen/perrin.hpp"

#include <algorithm>

namespace degen {

PerrinSeed::PerrinSeed(std::uint64_t m1, std::uint64_t m2) : m1_(m1), m2_(m2)
{
    if (m1 == 0)
        throw InvalidSeedError("Perrin seed requires m1 >= 1");
    if (m2 <= m1)
        throw InvalidSeedError("Perrin seed requires m2 > m1");
}

Energy perrin_energy(const PerrinSeed& seed)
{
    const std::uint64_t m1 = seed.m1(), m2 = seed.m2();
    std::uint64_t loeschian = checked_add(checked_add(checked_mul(m1, m1), checked_mul(m1, m2)), checked_mul(m2, m2));
    return checked_mul(4, loeschian);
}

PerrinTriplet perrin_triplet(const PerrinSeed& seed)
{
    const std::uint64_t m1 = seed.m1(), m2 = seed.m2();
    const Energy e = perrin_energy(seed);
    // m1 < m2 < m1 + m2 orders the states by n1.
    std::array<State, 3> states{{
        {m1, checked_add(m1, checked_mul(2, m2))},
        {m2, checked_add(m2, checked_mul(2, m1))},
        {checked_add(m1, m2), m2 - m1},
    }};
    for (const State& s : states)
        if (energy_of(s) != e)
            throw std::logic_error("Perrin state off the triplet energy");
    return {seed, e, states};
}

std::vector<PerrinSeed> perrin_seeds(const LevelView& level)
{
    // The third triplet member (m1+m2, m2-m1) pins the seed, so every
    // candidate comes from a same-parity state with n1 > n2.
    std::vector<PerrinSeed> seeds;
    if (level.energy() % 4 != 0)
        return seeds;
    for (const State& s : level.states()) {
        if (s.n1 <= s.n2 || (s.n1 - s.n2) % 2 != 0)
            continue;
        const std::uint64_t m1 = (s.n1 - s.n2) / 2;
        const std::uint64_t m2 = (s.n1 + s.n2) / 2;
        if (m1 == 0)
            continue;
        PerrinSeed seed(m1, m2);
        if (perrin_energy(seed) != level.energy())
            continue;
        const PerrinTriplet t = perrin_triplet(seed);
        if (std::all_of(t.states.begin(), t.states.end(), [&](const State& m) { return level.contains(m); }))
            seeds.push_back(seed);
    }
    std::sort(seeds.begin(), seeds.end());
    return seeds;
}

std::optional<PerrinSeed> match_perrin(const LevelView& level)
{
    auto seeds = perrin_seeds(level);
    if (seeds.empty())
        return std::nullopt;
    return seeds.front();
}

} // namespace degen
