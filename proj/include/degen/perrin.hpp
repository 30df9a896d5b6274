#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "degen/spectrum.hpp"

namespace degen {

class InvalidSeedError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Generator (m1, m2) of a same-parity triplet; requires 1 <= m1 < m2.
class PerrinSeed {
public:
    /// Throws InvalidSeedError unless 1 <= m1 < m2.
    PerrinSeed(std::uint64_t m1, std::uint64_t m2);

    std::uint64_t m1() const { return m1_; }
    std::uint64_t m2() const { return m2_; }

    friend bool operator==(const PerrinSeed&, const PerrinSeed&) = default;
    friend auto operator<=>(const PerrinSeed&, const PerrinSeed&) = default;

private:
    std::uint64_t m1_;
    std::uint64_t m2_;
};

struct PerrinTriplet {
    PerrinSeed seed;
    Energy energy;
    std::array<State, 3> states; // ascending n1
};

/// 4 * (m1^2 + m1*m2 + m2^2).
Energy perrin_energy(const PerrinSeed& seed);

/// {(m1, m1+2m2), (m2, m2+2m1), (m1+m2, m2-m1)}, sorted by n1.
PerrinTriplet perrin_triplet(const PerrinSeed& seed);

/// Every seed whose triplet lies inside the level, in lexicographic order.
std::vector<PerrinSeed> perrin_seeds(const LevelView& level);

/// Smallest seed (lexicographic) whose triplet is a subset of the level.
std::optional<PerrinSeed> match_perrin(const LevelView& level);

} // namespace degen
