#include "degen/cli.hpp"

#include <algorithm>
#include <functional>
#include <ostream>

#include <CLI11.hpp>

#include "degen/brahmagupta.hpp"
#include "degen/census.hpp"
#include "degen/render.hpp"
#include "degen/spectrum.hpp"

namespace degen {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::uint64_t positive_index(const std::string& text, const char* what)
{
    Rational r = Rational::parse(text);
    if (!r.is_integer() || !r.is_positive())
        throw UsageError(std::string(what) + " must be a positive integer: '" + text + "'");
    return static_cast<std::uint64_t>(r.num());
}

Spectrum spectrum_or_usage(Energy e_max)
{
    try {
        return enumerate_spectrum(e_max);
    } catch (const EmptySpectrumError& e) {
        throw UsageError(e.what());
    }
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Degeneracy analysis of the spectrum E = 3*n1^2 + n2^2", "degen"};
    app.require_subcommand(1);

    std::string format_name = "table";
    app.add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"table", "json", "csv"}))
        ->capture_default_str();

    std::function<int(OutputFormat)> action;

    // spectrum
    Energy spectrum_emax = 0;
    SpectrumRenderOptions spectrum_opts;
    auto* spectrum_cmd = app.add_subcommand("spectrum", "List energy levels up to E_max");
    spectrum_cmd->add_option("--emax", spectrum_emax, "Largest energy to enumerate")->required();
    spectrum_cmd->add_flag("--only-degenerate", spectrum_opts.only_degenerate, "Only levels with g > 1");
    spectrum_cmd->add_flag("--with-reps", spectrum_opts.with_reps, "Attach factorization-mode representations");
    spectrum_cmd->callback([&] {
        action = [&](OutputFormat f) {
            out << render_spectrum(spectrum_or_usage(spectrum_emax), spectrum_opts, f);
            return int{exit_ok};
        };
    });

    // census
    Energy census_emax = 0;
    bool census_strict = false;
    auto* census_cmd = app.add_subcommand("census", "Degeneracy histogram by parity with conjecture checks");
    census_cmd->add_option("--emax", census_emax, "Largest energy to enumerate")->required();
    census_cmd->add_flag("--strict", census_strict, "Use strict representations for the doublet check");
    census_cmd->callback([&] {
        action = [&](OutputFormat f) {
            const Spectrum s = spectrum_or_usage(census_emax);
            out << render_census(build_census(s, census_strict ? SearchMode::Strict : SearchMode::Factorization), f);
            return int{exit_ok};
        };
    });

    // level
    Energy level_energy = 0;
    auto* level_cmd = app.add_subcommand("level", "Describe one energy level");
    level_cmd->add_option("energy", level_energy, "Energy E")->required()->check(CLI::PositiveNumber);
    level_cmd->callback([&] {
        action = [&](OutputFormat f) {
            auto level = level_of(level_energy);
            if (!level) {
                err << "no such level: E=" << level_energy << "\n";
                return int{exit_negative};
            }
            out << render_level(describe_level(*level), f);
            return int{exit_ok};
        };
    });

    // verify
    Energy verify_emax = 0;
    std::string verify_mode = "factorization";
    auto* verify_cmd = app.add_subcommand("verify", "Check both conjectures up to E_max");
    verify_cmd->add_option("--emax", verify_emax, "Largest energy to enumerate")->required();
    verify_cmd->add_option("--mode", verify_mode, "Representation semantics for the doublet check")
        ->check(CLI::IsMember({"factorization", "strict"}))
        ->capture_default_str();
    verify_cmd->callback([&] {
        action = [&](OutputFormat f) {
            const Spectrum s = spectrum_or_usage(verify_emax);
            const SearchMode mode = verify_mode == "strict" ? SearchMode::Strict : SearchMode::Factorization;
            VerifyReport report{s.e_max(), check_perrin_conjecture(s), check_brahmagupta_conjecture(s, mode)};
            out << render_verify(report, f);
            return int{report.holds() ? exit_ok : exit_negative};
        };
    });

    // braham reps | doublet | inverse
    auto* braham_cmd = app.add_subcommand("braham", "Brahmagupta representations, doublets and inverse map");
    braham_cmd->require_subcommand(1);

    Energy reps_energy = 0;
    bool reps_strict = false;
    auto* reps_cmd = braham_cmd->add_subcommand("reps", "All representations of an energy");
    reps_cmd->add_option("energy", reps_energy, "Energy E")->required()->check(CLI::PositiveNumber);
    reps_cmd->add_flag("--strict", reps_strict, "Keep only reps whose doublet is two distinct states");
    reps_cmd->callback([&] {
        action = [&](OutputFormat f) {
            const SearchMode mode = reps_strict ? SearchMode::Strict : SearchMode::Factorization;
            out << render_reps(reps_energy, mode, rep_search(reps_energy, mode), f);
            return int{exit_ok};
        };
    });

    std::vector<std::string> doublet_args;
    auto* doublet_cmd = braham_cmd->add_subcommand("doublet", "Doublet generated by (v1, v2, v3, v4)");
    doublet_cmd->add_option("nu", doublet_args, "v1 v2 v3 v4 (v3, v4 may be k/2)")->required()->expected(4);
    doublet_cmd->callback([&] {
        action = [&](OutputFormat f) {
            const auto rep = BrahmaguptaRep::make(positive_index(doublet_args[0], "v1"),
                                                  positive_index(doublet_args[1], "v2"),
                                                  HalfInteger::parse(doublet_args[2]),
                                                  HalfInteger::parse(doublet_args[3]));
            out << render_doublet(rep, doublet_from_rep(rep), f);
            return int{exit_ok};
        };
    });

    std::vector<std::string> inverse_args;
    std::string xi_text = "1/6";
    auto* inverse_cmd = braham_cmd->add_subcommand("inverse", "Solve for (v1..v4) from two equal-energy states");
    inverse_cmd->add_option("states", inverse_args, "n1 n2 n1' n2'")->required()->expected(4);
    inverse_cmd->add_option("--xi", xi_text, "Free positive parameter (p/q)")->capture_default_str();
    inverse_cmd->callback([&] {
        action = [&](OutputFormat f) {
            const State first = make_state(positive_index(inverse_args[0], "n1"), positive_index(inverse_args[1], "n2"));
            const State second =
                make_state(positive_index(inverse_args[2], "n1"), positive_index(inverse_args[3], "n2"));
            const Rational xi = Rational::parse(xi_text);
            out << render_inverse(first, second, xi, inverse_rep(first, second, xi), f);
            return int{exit_ok};
        };
    });

    for (CLI::App* sub : {spectrum_cmd, census_cmd, level_cmd, verify_cmd, braham_cmd, reps_cmd, doublet_cmd,
                          inverse_cmd})
        sub->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_usage;
    }

    const OutputFormat format = parse_format(format_name).value_or(OutputFormat::Table);
    try {
        return action ? action(format) : int{exit_usage};
    } catch (const UsageError& e) {
        err << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        // ParseError, InverseRepError, invalid seeds and states
        err << "invalid input: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::overflow_error& e) {
        err << "input too large: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::domain_error& e) {
        err << "invalid input: " << e.what() << "\n";
        return exit_usage;
    }
}

} // namespace degen
