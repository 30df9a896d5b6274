#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "degen/brahmagupta.hpp"
#include "degen/perrin.hpp"
#include "degen/spectrum.hpp"

namespace degen {

struct CensusRow {
    ParityClass parity;
    std::size_t degeneracy;
    std::size_t levels;
    std::size_t states;

    friend bool operator==(const CensusRow&, const CensusRow&) = default;
};

struct CensusTotals {
    std::size_t levels = 0;
    std::size_t states = 0;

    friend bool operator==(const CensusTotals&, const CensusTotals&) = default;
};

struct PerrinCheck {
    std::size_t candidates = 0;    // same-parity levels with g = 3
    std::size_t matched = 0;
    std::size_t multi_seed = 0;    // candidates matched by more than one seed
    std::vector<Energy> counterexamples;
};

struct BrahmaguptaLevel {
    Energy energy;
    bool covered;
    bool has_all_integer;
};

struct BrahmaguptaCheck {
    SearchMode mode = SearchMode::Factorization;
    std::size_t candidates = 0;    // opposite-parity levels with g = 2
    std::size_t covered = 0;
    std::vector<Energy> counterexamples;
    std::vector<BrahmaguptaLevel> levels;
    std::vector<Energy> without_all_integer;

    std::optional<Energy> first_without_all_integer() const;
};

// Degeneracy histogram split by parity, as in the classic table layout:
// same-parity rows always include g = 1..9, opposite-parity rows g = 1..4,
// plus any other g observed.
struct CensusReport {
    Energy e_max = 0;
    std::vector<CensusRow> rows; // same-parity first, then ascending g
    CensusTotals same_parity;
    CensusTotals opposite_parity;
    CensusTotals total;
    PerrinCheck perrin;
    BrahmaguptaCheck brahmagupta;

    /// Opposite-parity levels with g >= 3 (degenerate but not doublets).
    std::size_t opposite_non_doublet_degenerate() const;
    const CensusRow* row(ParityClass parity, std::size_t degeneracy) const;
};

PerrinCheck check_perrin_conjecture(const Spectrum& spectrum);

BrahmaguptaCheck check_brahmagupta_conjecture(const Spectrum& spectrum, SearchMode mode = SearchMode::Factorization);

CensusReport build_census(const Spectrum& spectrum, SearchMode mode = SearchMode::Factorization);

} // namespace degen
