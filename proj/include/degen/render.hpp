#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "degen/brahmagupta.hpp"
#include "degen/census.hpp"
#include "degen/perrin.hpp"
#include "degen/spectrum.hpp"

namespace degen {

// Serialization for the command-line front end.
//
// JSON documents keep key insertion order and print rationals as "p/q"
// strings. CSV spectrum records use the columns energy,parity,degeneracy,states
// with states written as "n1:n2" joined by ';'. Output is a pure function of
// the inputs.

enum class OutputFormat { Table, Json, Csv };

std::optional<OutputFormat> parse_format(std::string_view name);

struct SpectrumRenderOptions {
    bool only_degenerate = false;
    bool with_reps = false;
};

std::string render_spectrum(const Spectrum& spectrum, const SpectrumRenderOptions& options, OutputFormat format);

std::string render_census(const CensusReport& report, OutputFormat format);

/// Everything `level` reports about one energy.
struct LevelDetails {
    EnergyLevel level;
    std::vector<PerrinSeed> perrin_seeds;
    std::vector<BrahmaguptaRep> reps; // factorization mode
};

LevelDetails describe_level(const EnergyLevel& level);

std::string render_level(const LevelDetails& details, OutputFormat format);

struct VerifyReport {
    Energy e_max;
    PerrinCheck perrin;
    BrahmaguptaCheck brahmagupta;

    bool holds() const { return perrin.counterexamples.empty() && brahmagupta.counterexamples.empty(); }
};

std::string render_verify(const VerifyReport& report, OutputFormat format);

std::string render_reps(Energy e, SearchMode mode, const std::vector<BrahmaguptaRep>& reps, OutputFormat format);

std::string render_doublet(const BrahmaguptaRep& rep, const Doublet& doublet, OutputFormat format);

std::string render_inverse(const State& first, const State& second, const Rational& xi, const InverseRep& v,
                           OutputFormat format);

} // namespace degen
