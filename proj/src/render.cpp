#include "degen/render.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace degen {

namespace {

using Json = nlohmann::ordered_json;

Json state_json(const State& s) { return Json::array({s.n1, s.n2}); }

Json states_json(std::span<const State> states)
{
    Json arr = Json::array();
    for (const State& s : states)
        arr.push_back(state_json(s));
    return arr;
}

Json seed_json(const std::optional<PerrinSeed>& seed)
{
    if (!seed)
        return nullptr;
    return Json::array({seed->m1(), seed->m2()});
}

Json rep_json(const BrahmaguptaRep& rep)
{
    const Doublet d = doublet_from_rep(rep);
    Json j;
    j["nu"] = Json::array({std::to_string(rep.v1), std::to_string(rep.v2), rep.v3.str(), rep.v4.str()});
    j["kind"] = to_string(classify_rep(rep));
    j["strict"] = d.is_strict();
    return j;
}

Json reps_json(const std::vector<BrahmaguptaRep>& reps)
{
    Json arr = Json::array();
    for (const auto& r : reps)
        arr.push_back(rep_json(r));
    return arr;
}

Json level_json(const LevelView& level, const std::vector<BrahmaguptaRep>* reps)
{
    Json j;
    j["energy"] = level.energy();
    j["parity"] = to_string(parity_of(level));
    j["degeneracy"] = level.degeneracy();
    j["states"] = states_json(level.states());
    j["perrin_seed"] = seed_json(match_perrin(level));
    if (reps != nullptr)
        j["reps"] = reps_json(*reps);
    return j;
}

std::string states_text(std::span<const State> states)
{
    std::string out;
    for (const State& s : states) {
        if (!out.empty())
            out += ' ';
        out += "(" + std::to_string(s.n1) + "," + std::to_string(s.n2) + ")";
    }
    return out;
}

std::string states_csv(std::span<const State> states)
{
    std::string out;
    for (const State& s : states) {
        if (!out.empty())
            out += ';';
        out += std::to_string(s.n1) + ":" + std::to_string(s.n2);
    }
    return out;
}

std::string rep_text(const BrahmaguptaRep& rep)
{
    return "(" + std::to_string(rep.v1) + ", " + std::to_string(rep.v2) + ", " + rep.v3.str() + ", " +
           rep.v4.str() + ")";
}

std::string pair_text(const RationalPair& p) { return "(" + p.first.str() + "," + p.second.str() + ")"; }

std::string energy_list(const std::vector<Energy>& es)
{
    if (es.empty())
        return "none";
    std::string out;
    for (Energy e : es) {
        if (!out.empty())
            out += ' ';
        out += std::to_string(e);
    }
    return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json perrin_json(const PerrinCheck& p)
{
    Json j;
    j["candidates"] = p.candidates;
    j["matched"] = p.matched;
    j["multi_seed"] = p.multi_seed;
    j["counterexamples"] = p.counterexamples;
    return j;
}

Json brahmagupta_json(const BrahmaguptaCheck& b)
{
    Json j;
    j["mode"] = to_string(b.mode);
    j["candidates"] = b.candidates;
    j["covered"] = b.covered;
    j["counterexamples"] = b.counterexamples;
    j["without_all_integer"] = b.without_all_integer;
    if (auto first = b.first_without_all_integer())
        j["first_without_all_integer"] = *first;
    else
        j["first_without_all_integer"] = nullptr;
    return j;
}

void conjecture_lines(std::ostream& os, const PerrinCheck& p, const BrahmaguptaCheck& b)
{
    os << "Perrin triplets: " << p.matched << "/" << p.candidates << " same-parity 3-fold levels matched";
    if (p.multi_seed > 0)
        os << " (" << p.multi_seed << " with several seeds)";
    os << "\n";
    os << "  counterexamples: " << energy_list(p.counterexamples) << "\n";
    os << "Brahmagupta doublets (" << to_string(b.mode) << "): " << b.covered << "/" << b.candidates
       << " opposite-parity 2-fold levels covered\n";
    os << "  counterexamples: " << energy_list(b.counterexamples) << "\n";
    os << "  levels without an all-integer representation: " << b.without_all_integer.size();
    if (auto first = b.first_without_all_integer())
        os << " (first at E=" << *first << ")";
    os << "\n";
}

} // namespace

std::optional<OutputFormat> parse_format(std::string_view name)
{
    if (name == "table")
        return OutputFormat::Table;
    if (name == "json")
        return OutputFormat::Json;
    if (name == "csv")
        return OutputFormat::Csv;
    return std::nullopt;
}

std::string render_spectrum(const Spectrum& spectrum, const SpectrumRenderOptions& options, OutputFormat format)
{
    std::optional<RepSearcher> searcher;
    if (options.with_reps)
        searcher.emplace(spectrum.e_max(), &spectrum);

    auto selected = [&](const LevelView& l) { return !options.only_degenerate || l.degeneracy() > 1; };

    std::ostringstream os;
    switch (format) {
    case OutputFormat::Json: {
        Json doc;
        doc["e_max"] = spectrum.e_max();
        Json levels = Json::array();
        for (LevelView level : spectrum.levels()) {
            if (!selected(level))
                continue;
            if (searcher) {
                auto reps = searcher->search(level.energy(), SearchMode::Factorization);
                levels.push_back(level_json(level, &reps));
            } else {
                levels.push_back(level_json(level, nullptr));
            }
        }
        doc["levels"] = std::move(levels);
        return dump(doc);
    }
    case OutputFormat::Csv:
        os << "energy,parity,degeneracy,states";
        if (searcher)
            os << ",reps";
        os << "\n";
        for (LevelView level : spectrum.levels()) {
            if (!selected(level))
                continue;
            os << level.energy() << ',' << to_string(parity_of(level)) << ',' << level.degeneracy() << ','
               << states_csv(level.states());
            if (searcher)
                os << ',' << searcher->search(level.energy(), SearchMode::Factorization).size();
            os << "\n";
        }
        return os.str();
    case OutputFormat::Table:
        os << std::setw(12) << "energy" << "  " << std::left << std::setw(9) << "parity" << std::right << std::setw(4)
           << "g" << "  states\n";
        for (LevelView level : spectrum.levels()) {
            if (!selected(level))
                continue;
            os << std::setw(12) << level.energy() << "  " << std::left << std::setw(9) << to_string(parity_of(level))
               << std::right << std::setw(4) << level.degeneracy() << "  " << states_text(level.states());
            if (searcher)
                os << "  [" << searcher->search(level.energy(), SearchMode::Factorization).size() << " reps]";
            os << "\n";
        }
        return os.str();
    }
    return {};
}

std::string render_census(const CensusReport& report, OutputFormat format)
{
    std::ostringstream os;
    switch (format) {
    case OutputFormat::Json: {
        Json doc;
        doc["e_max"] = report.e_max;
        Json rows = Json::array();
        for (const CensusRow& r : report.rows)
            rows.push_back({{"parity", to_string(r.parity)},
                            {"degeneracy", r.degeneracy},
                            {"levels", r.levels},
                            {"states", r.states}});
        doc["rows"] = std::move(rows);
        doc["subtotals"] = {
            {"same", {{"levels", report.same_parity.levels}, {"states", report.same_parity.states}}},
            {"opposite", {{"levels", report.opposite_parity.levels}, {"states", report.opposite_parity.states}}}};
        doc["total"] = {{"levels", report.total.levels}, {"states", report.total.states}};
        doc["opposite_non_doublet_degenerate"] = report.opposite_non_doublet_degenerate();
        doc["perrin"] = perrin_json(report.perrin);
        doc["brahmagupta"] = brahmagupta_json(report.brahmagupta);
        return dump(doc);
    }
    case OutputFormat::Csv:
        os << "parity,degeneracy,levels,states\n";
        for (const CensusRow& r : report.rows)
            os << to_string(r.parity) << ',' << r.degeneracy << ',' << r.levels << ',' << r.states << "\n";
        os << "same,subtotal," << report.same_parity.levels << ',' << report.same_parity.states << "\n";
        os << "opposite,subtotal," << report.opposite_parity.levels << ',' << report.opposite_parity.states << "\n";
        os << "all,total," << report.total.levels << ',' << report.total.states << "\n";
        return os.str();
    case OutputFormat::Table: {
        auto line = [&](const std::string& label, std::size_t levels, std::size_t states) {
            os << std::left << std::setw(14) << label << std::right << std::setw(10) << levels << std::setw(10)
               << states << "\n";
        };
        os << "Degeneracy census for E <= " << report.e_max << "\n\n";
        os << std::left << std::setw(14) << "degeneracy" << std::right << std::setw(10) << "levels" << std::setw(10)
           << "states" << "\n";
        for (ParityClass parity : {ParityClass::SameParity, ParityClass::OppositeParity}) {
            os << "-- " << to_string(parity) << "-parity levels\n";
            for (const CensusRow& r : report.rows)
                if (r.parity == parity)
                    line("  " + std::to_string(r.degeneracy), r.levels, r.states);
            const CensusTotals& sub =
                parity == ParityClass::SameParity ? report.same_parity : report.opposite_parity;
            line("  sub-total", sub.levels, sub.states);
        }
        line("total", report.total.levels, report.total.states);
        os << "\n";
        conjecture_lines(os, report.perrin, report.brahmagupta);
        os << "Opposite-parity degenerate levels that are not doublets: "
           << report.opposite_non_doublet_degenerate() << "\n";
        return os.str();
    }
    }
    return {};
}

LevelDetails describe_level(const EnergyLevel& level)
{
    return {level, perrin_seeds(level), rep_search(level.energy, SearchMode::Factorization)};
}

std::string render_level(const LevelDetails& details, OutputFormat format)
{
    const LevelView level = details.level.view();
    std::size_t all_integer = 0, strict = 0;
    for (const auto& r : details.reps) {
        all_integer += classify_rep(r) == RepKind::AllInteger;
        strict += doublet_from_rep(r).is_strict();
    }

    std::ostringstream os;
    switch (format) {
    case OutputFormat::Json: {
        Json doc = level_json(level, &details.reps);
        Json seeds = Json::array();
        for (const auto& s : details.perrin_seeds)
            seeds.push_back(Json::array({s.m1(), s.m2()}));
        doc["perrin_seeds"] = std::move(seeds);
        doc["rep_count"] = details.reps.size();
        doc["all_integer_count"] = all_integer;
        doc["strict_count"] = strict;
        return dump(doc);
    }
    case OutputFormat::Csv:
        os << "energy,parity,degeneracy,states,perrin_seed,reps,all_integer,strict\n";
        os << level.energy() << ',' << to_string(parity_of(level)) << ',' << level.degeneracy() << ','
           << states_csv(level.states()) << ',';
        if (!details.perrin_seeds.empty())
            os << details.perrin_seeds.front().m1() << ':' << details.perrin_seeds.front().m2();
        os << ',' << details.reps.size() << ',' << all_integer << ',' << strict << "\n";
        return os.str();
    case OutputFormat::Table:
        os << "E = " << level.energy() << "  (" << to_string(parity_of(level)) << "-parity, g = "
           << level.degeneracy() << ")\n";
        os << "states: " << states_text(level.states()) << "\n";
        if (details.perrin_seeds.empty()) {
            os << "Perrin triplet: none\n";
        } else {
            for (const auto& s : details.perrin_seeds) {
                const PerrinTriplet t = perrin_triplet(s);
                os << "Perrin triplet: seed (" << s.m1() << "," << s.m2() << ") -> " << states_text(t.states)
                   << "\n";
            }
        }
        os << "Brahmagupta representations: " << details.reps.size() << " (" << all_integer << " all-integer, "
           << strict << " strict)\n";
        for (const auto& r : details.reps) {
            const Doublet d = doublet_from_rep(r);
            os << "  " << std::left << std::setw(28) << rep_text(r) << std::right << pair_text(d.first) << " "
               << pair_text(d.second) << (d.is_strict() ? "  strict" : "") << "\n";
        }
        return os.str();
    }
    return {};
}

std::string render_verify(const VerifyReport& report, OutputFormat format)
{
    std::ostringstream os;
    switch (format) {
    case OutputFormat::Json: {
        Json doc;
        doc["e_max"] = report.e_max;
        doc["perrin"] = perrin_json(report.perrin);
        doc["brahmagupta"] = brahmagupta_json(report.brahmagupta);
        doc["holds"] = report.holds();
        return dump(doc);
    }
    case OutputFormat::Csv:
        os << "conjecture,candidates,confirmed,counterexamples\n";
        os << "perrin," << report.perrin.candidates << ',' << report.perrin.matched << ','
           << report.perrin.counterexamples.size() << "\n";
        os << "brahmagupta-" << to_string(report.brahmagupta.mode) << ',' << report.brahmagupta.candidates << ','
           << report.brahmagupta.covered << ',' << report.brahmagupta.counterexamples.size() << "\n";
        return os.str();
    case OutputFormat::Table:
        os << "Conjecture check for E <= " << report.e_max << "\n";
        conjecture_lines(os, report.perrin, report.brahmagupta);
        os << (report.holds() ? "both conjectures hold in range\n" : "counterexample found\n");
        return os.str();
    }
    return {};
}

std::string render_reps(Energy e, SearchMode mode, const std::vector<BrahmaguptaRep>& reps, OutputFormat format)
{
    std::ostringstream os;
    switch (format) {
    case OutputFormat::Json: {
        Json doc;
        doc["energy"] = e;
        doc["mode"] = to_string(mode);
        doc["reps"] = reps_json(reps);
        return dump(doc);
    }
    case OutputFormat::Csv:
        os << "v1,v2,v3,v4,kind,strict\n";
        for (const auto& r : reps)
            os << r.v1 << ',' << r.v2 << ',' << r.v3.str() << ',' << r.v4.str() << ','
               << to_string(classify_rep(r)) << ',' << (doublet_from_rep(r).is_strict() ? "true" : "false")
               << "\n";
        return os.str();
    case OutputFormat::Table:
        os << reps.size() << " " << to_string(mode) << " representations of E = " << e << "\n";
        for (const auto& r : reps)
            os << "  " << std::left << std::setw(28) << rep_text(r) << std::right << to_string(classify_rep(r))
               << "\n";
        return os.str();
    }
    return {};
}

std::string render_doublet(const BrahmaguptaRep& rep, const Doublet& doublet, OutputFormat format)
{
    std::ostringstream os;
    switch (format) {
    case OutputFormat::Json: {
        Json doc;
        doc["nu"] = rep_json(rep)["nu"];
        doc["energy"] = rep.energy;
        doc["first"] = Json::array({doublet.first.first.str(), doublet.first.second.str()});
        doc["second"] = Json::array({doublet.second.first.str(), doublet.second.second.str()});
        doc["both_states"] = doublet.both_states;
        doc["distinct"] = doublet.distinct;
        return dump(doc);
    }
    case OutputFormat::Csv:
        os << "energy,first,second,both_states,distinct\n";
        os << rep.energy << ',' << doublet.first.first << ':' << doublet.first.second << ','
           << doublet.second.first << ':' << doublet.second.second << ',' << (doublet.both_states ? "true" : "false")
           << ',' << (doublet.distinct ? "true" : "false") << "\n";
        return os.str();
    case OutputFormat::Table:
        os << "E = " << rep.energy << ": {" << pair_text(doublet.first) << ", " << pair_text(doublet.second) << "}\n";
        if (!doublet.both_states)
            os << "members are not both states (an index is zero or fractional)\n";
        else if (!doublet.distinct)
            os << "members coincide\n";
        return os.str();
    }
    return {};
}

std::string render_inverse(const State& first, const State& second, const Rational& xi, const InverseRep& v,
                           OutputFormat format)
{
    std::ostringstream os;
    const auto [back1, back2] = unsigned_doublet(v);
    switch (format) {
    case OutputFormat::Json: {
        Json doc;
        doc["first"] = state_json(first);
        doc["second"] = state_json(second);
        doc["xi"] = xi.str();
        doc["nu"] = Json::array({v.v1.str(), v.v2.str(), v.v3.str(), v.v4.str()});
        doc["round_trip"] = Json::array({Json::array({back1.first.str(), back1.second.str()}),
                                         Json::array({back2.first.str(), back2.second.str()})});
        return dump(doc);
    }
    case OutputFormat::Csv:
        os << "v1,v2,v3,v4\n" << v.v1 << ',' << v.v2 << ',' << v.v3 << ',' << v.v4 << "\n";
        return os.str();
    case OutputFormat::Table:
        os << v.v1 << ' ' << v.v2 << ' ' << v.v3 << ' ' << v.v4 << "\n";
        return os.str();
    }
    return {};
}

} // namespace degen
