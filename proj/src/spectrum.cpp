#include "degen/spectrum.hpp"

#include <algorithm>
#include <queue>

namespace degen {

State make_state(std::uint64_t n1, std::uint64_t n2)
{
    if (n1 == 0 || n2 == 0)
        throw std::invalid_argument("state indices must be positive");
    return {n1, n2};
}

Energy energy_of(const State& s) { return weighted_norm(s.n1, s.n2); }

std::string_view to_string(ParityClass p)
{
    return p == ParityClass::SameParity ? "same" : "opposite";
}

std::optional<ParityClass> parity_for_energy(Energy e)
{
    if (e % 2 == 1)
        return ParityClass::OppositeParity;
    if (e % 4 == 0)
        return ParityClass::SameParity;
    return std::nullopt;
}

bool LevelView::contains(const State& s) const
{
    auto it = std::lower_bound(states_.begin(), states_.end(), s);
    return it != states_.end() && *it == s;
}

ParityClass parity_of(const LevelView& level)
{
    if (level.states().empty())
        throw std::invalid_argument("parity of an empty level");
    const State& s = level.states().front();
    return (s.n1 % 2 == s.n2 % 2) ? ParityClass::SameParity : ParityClass::OppositeParity;
}

std::optional<EnergyLevel> level_of(Energy e)
{
    EnergyLevel level;
    level.energy = e;
    const std::uint64_t n1_max = isqrt(e / 3);
    for (std::uint64_t n1 = 1; n1 <= n1_max; ++n1) {
        const std::uint64_t rest = e - 3 * n1 * n1;
        if (rest == 0)
            continue;
        if (auto n2 = exact_sqrt(rest))
            level.states.push_back({n1, *n2});
    }
    if (level.states.empty())
        return std::nullopt;
    level.parity = parity_of(level.view());
    return level;
}

LevelView Spectrum::level(std::size_t i) const
{
    const LevelIndex& idx = levels_.at(i);
    return {idx.energy, std::span<const State>(states_).subspan(idx.offset, idx.count)};
}

std::optional<LevelView> Spectrum::find(Energy e) const
{
    auto it = std::lower_bound(levels_.begin(), levels_.end(), e,
                               [](const LevelIndex& l, Energy v) { return l.energy < v; });
    if (it == levels_.end() || it->energy != e)
        return std::nullopt;
    return level(static_cast<std::size_t>(it - levels_.begin()));
}

Spectrum enumerate_spectrum(Energy e_max)
{
    if (e_max < 4)
        throw EmptySpectrumError("no states below E=4");

    // One stripe per n1; within a stripe energy grows with n2, so a k-way
    // merge over the stripe heads yields states already ordered by (E, n1).
    struct Head {
        Energy energy;
        std::uint64_t n1;
        std::uint64_t n2;
        bool operator>(const Head& o) const { return energy != o.energy ? energy > o.energy : n1 > o.n1; }
    };
    std::vector<Head> heads;
    const std::uint64_t n1_max = isqrt(e_max / 3);
    heads.reserve(n1_max);
    for (std::uint64_t n1 = 1; n1 <= n1_max; ++n1) {
        auto e = try_weighted_norm(n1, 1);
        if (e && *e <= e_max)
            heads.push_back({*e, n1, 1});
    }
    std::priority_queue<Head, std::vector<Head>, std::greater<>> queue(std::greater<>{}, std::move(heads));

    Spectrum out;
    out.e_max_ = e_max;
    while (!queue.empty()) {
        Head h = queue.top();
        queue.pop();
        if (out.levels_.empty() || out.levels_.back().energy != h.energy)
            out.levels_.push_back({h.energy, out.states_.size(), 0});
        out.states_.push_back({h.n1, h.n2});
        ++out.levels_.back().count;

        auto next = try_weighted_norm(h.n1, h.n2 + 1);
        if (next && *next <= e_max)
            queue.push({*next, h.n1, h.n2 + 1});
    }
    out.states_.shrink_to_fit();
    out.levels_.shrink_to_fit();
    return out;
}

} // namespace degen
