#include "degen/census.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace degen {

namespace {

constexpr std::size_t same_parity_table_rows = 9;
constexpr std::size_t opposite_parity_table_rows = 4;

} // namespace

std::optional<Energy> BrahmaguptaCheck::first_without_all_integer() const
{
    if (without_all_integer.empty())
        return std::nullopt;
    return without_all_integer.front();
}

std::size_t CensusReport::opposite_non_doublet_degenerate() const
{
    std::size_t n = 0;
    for (const CensusRow& r : rows)
        if (r.parity == ParityClass::OppositeParity && r.degeneracy >= 3)
            n += r.levels;
    return n;
}

const CensusRow* CensusReport::row(ParityClass parity, std::size_t degeneracy) const
{
    for (const CensusRow& r : rows)
        if (r.parity == parity && r.degeneracy == degeneracy)
            return &r;
    return nullptr;
}

PerrinCheck check_perrin_conjecture(const Spectrum& spectrum)
{
    PerrinCheck out;
    for (LevelView level : spectrum.levels()) {
        if (level.degeneracy() != 3 || parity_of(level) != ParityClass::SameParity)
            continue;
        ++out.candidates;
        auto seeds = perrin_seeds(level);
        if (seeds.empty()) {
            out.counterexamples.push_back(level.energy());
            continue;
        }
        ++out.matched;
        if (seeds.size() > 1)
            ++out.multi_seed;
    }
    return out;
}

BrahmaguptaCheck check_brahmagupta_conjecture(const Spectrum& spectrum, SearchMode mode)
{
    BrahmaguptaCheck out;
    out.mode = mode;
    const RepSearcher searcher(spectrum.e_max(), &spectrum);
    for (LevelView level : spectrum.levels()) {
        if (level.degeneracy() != 2 || parity_of(level) != ParityClass::OppositeParity)
            continue;
        ++out.candidates;
        BrahmaguptaLevel entry{level.energy(), searcher.find(level.energy(), mode).has_value(),
                               searcher.has_all_integer(level.energy())};
        if (entry.covered)
            ++out.covered;
        else
            out.counterexamples.push_back(entry.energy);
        if (!entry.has_all_integer)
            out.without_all_integer.push_back(entry.energy);
        out.levels.push_back(entry);
    }
    return out;
}

CensusReport build_census(const Spectrum& spectrum, SearchMode mode)
{
    CensusReport report;
    report.e_max = spectrum.e_max();

    std::map<std::size_t, std::size_t> same, opposite;
    for (std::size_t g = 1; g <= same_parity_table_rows; ++g)
        same[g] = 0;
    for (std::size_t g = 1; g <= opposite_parity_table_rows; ++g)
        opposite[g] = 0;
    for (LevelView level : spectrum.levels())
        ++(parity_of(level) == ParityClass::SameParity ? same : opposite)[level.degeneracy()];

    auto emit = [&](ParityClass parity, const std::map<std::size_t, std::size_t>& hist, CensusTotals& sub) {
        for (auto [g, count] : hist) {
            report.rows.push_back({parity, g, count, count * g});
            sub.levels += count;
            sub.states += count * g;
        }
    };
    emit(ParityClass::SameParity, same, report.same_parity);
    emit(ParityClass::OppositeParity, opposite, report.opposite_parity);
    report.total = {report.same_parity.levels + report.opposite_parity.levels,
                    report.same_parity.states + report.opposite_parity.states};

    if (report.total.levels != spectrum.level_count() || report.total.states != spectrum.state_count())
        throw std::logic_error("census totals disagree with the spectrum");

    report.perrin = check_perrin_conjecture(spectrum);
    report.brahmagupta = check_brahmagupta_conjecture(spectrum, mode);
    return report;
}

} // namespace degen
