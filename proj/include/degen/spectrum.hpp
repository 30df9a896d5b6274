#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ranges>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "degen/arith.hpp"

namespace degen {

/// Index pair (n1, n2), both >= 1. Energy is 3*n1^2 + n2^2.
struct State {
    std::uint64_t n1 = 1;
    std::uint64_t n2 = 1;

    friend bool operator==(const State&, const State&) = default;
    friend auto operator<=>(const State&, const State&) = default;
};

/// Throws std::invalid_argument if either index is zero.
State make_state(std::uint64_t n1, std::uint64_t n2);

/// Exact 3*n1^2 + n2^2; throws OverflowError past 64 bits.
Energy energy_of(const State& s);

enum class ParityClass { SameParity, OppositeParity };

std::string_view to_string(ParityClass p);

/// Parity class implied by an energy, if any state can have it (E = 2 mod 4 cannot).
std::optional<ParityClass> parity_for_energy(Energy e);

// Non-owning view of one level: the energy and its states sorted by n1.
class LevelView {
public:
    LevelView(Energy energy, std::span<const State> states) : energy_(energy), states_(states) {}

    Energy energy() const { return energy_; }
    std::span<const State> states() const { return states_; }
    std::size_t degeneracy() const { return states_.size(); }
    bool contains(const State& s) const;

private:
    Energy energy_;
    std::span<const State> states_;
};

/// Same-parity iff n1 = n2 (mod 2) for the level's states. Precondition: nonempty.
ParityClass parity_of(const LevelView& level);

struct EnergyLevel {
    Energy energy = 0;
    std::vector<State> states;
    ParityClass parity = ParityClass::SameParity;

    std::size_t degeneracy() const { return states.size(); }
    LevelView view() const { return {energy, states}; }
    operator LevelView() const { return view(); } // NOLINT: levels are read through views

    friend bool operator==(const EnergyLevel&, const EnergyLevel&) = default;
};

/// Solves 3*n1^2 + n2^2 = e directly. nullopt when no state has energy e.
std::optional<EnergyLevel> level_of(Energy e);

class EmptySpectrumError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Every state with energy <= e_max, grouped into levels of ascending energy.
//
// Stored flat: one state array ordered by (energy, n1) plus a per-level
// index into it. Immutable after construction.
class Spectrum {
public:
    Energy e_max() const { return e_max_; }
    std::size_t level_count() const { return levels_.size(); }
    std::size_t state_count() const { return states_.size(); }

    LevelView level(std::size_t i) const;
    std::optional<LevelView> find(Energy e) const;

    auto levels() const
    {
        return std::views::iota(std::size_t{0}, levels_.size()) |
               std::views::transform([this](std::size_t i) { return level(i); });
    }

private:
    friend Spectrum enumerate_spectrum(Energy e_max);

    struct LevelIndex {
        Energy energy;
        std::size_t offset;
        std::size_t count;
    };

    Energy e_max_ = 0;
    std::vector<State> states_;
    std::vector<LevelIndex> levels_;
};

/// Throws EmptySpectrumError when e_max < 4.
Spectrum enumerate_spectrum(Energy e_max);

} // namespace degen
