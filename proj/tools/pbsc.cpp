// pbsc: analytic BER / capacity sweeps and Monte Carlo validation for binary
// symmetric and Gaussian channels whose noise variance is modulated by a
// Poisson impulse count. Emits CSV plus a re-runnable .meta sidecar.

#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "../src/cli/run_spec.hpp"

namespace {

using pbsc::cli::Command;
using pbsc::cli::RunSpec;

struct FlagValues {
    double eb = 0.0;
    double sigma_g2 = 0.0;
    double sigma_f2 = 0.0;
    double a = 0.0;
    double psd = 0.0;
    double epsilon = 0.0;
    std::string kind;
    std::string scenario;
    std::uint64_t seed = 0;
    std::uint64_t n_symbols = 0;
    unsigned n_streams = 0;
    int bins = 0;
    std::string axis;
    std::string grid;
    std::string out;
    std::string config;
};

void add_common_options(CLI::App* cmd, FlagValues& vals) {
    cmd->add_option("--eb", vals.eb, "Energy per bit (default 7.28e-3)");
    cmd->add_option("--sigma-g2", vals.sigma_g2, "Background noise variance (default 7.28e-7)");
    cmd->add_option("--sigma-f2", vals.sigma_f2,
                    "Average impulsive noise variance (default 7.28e-4)");
    cmd->add_option("--a", vals.a, "Poisson mean impulse count (default 1)");
    cmd->add_option("--psd", vals.psd, "Input power spectral density (default 7.28e-3)");
    cmd->add_option("--epsilon", vals.epsilon, "Poisson tail mass bound (default 1e-12)");
    cmd->add_option("--kind", vals.kind, "Channel kind: I or II (default I)");
    cmd->add_option("--scenario", vals.scenario,
                    "Comma list of knowledge scenarios from ++, +-, -+, -- (default all)");
    cmd->add_option("--seed", vals.seed, "RNG seed (default 1)");
    cmd->add_option("--n-symbols", vals.n_symbols, "Simulated symbols (default 1e6)");
    cmd->add_option("--n-streams", vals.n_streams, "RNG substreams / threads (default 1)");
    cmd->add_option("--bins", vals.bins, "Histogram atoms (default 64)");
    cmd->add_option("--axis", vals.axis, "Sweep axis: a or snr (default a)");
    cmd->add_option("--grid", vals.grid,
                    "Grid: comma list, or start:stop:count:lin|log");
    cmd->add_option("--out", vals.out, "Output CSV path (default <command>.csv)");
    cmd->add_option("--config", vals.config, "key=value file applied before flags");
}

void apply_flags(const CLI::App& cmd, const FlagValues& vals, RunSpec& spec) {
    if (cmd.count("--eb")) spec.params.eb = vals.eb;
    if (cmd.count("--sigma-g2")) spec.params.sigma_g2 = vals.sigma_g2;
    if (cmd.count("--sigma-f2")) spec.params.sigma_f2 = vals.sigma_f2;
    if (cmd.count("--a")) spec.params.a = vals.a;
    if (cmd.count("--psd")) spec.psd = vals.psd;
    if (cmd.count("--epsilon")) spec.epsilon = vals.epsilon;
    if (cmd.count("--kind")) {
        if (vals.kind == "I") {
            spec.kind = pbsc::ChannelKind::channel_i;
        } else if (vals.kind == "II") {
            spec.kind = pbsc::ChannelKind::channel_ii;
        } else {
            throw CLI::ValidationError("--kind", "must be I or II");
        }
    }
    if (cmd.count("--scenario")) {
        std::vector<pbsc::KnowledgeScenario> scenarios;
        std::string part;
        std::string text = vals.scenario + ",";
        for (const char c : text) {
            if (c != ',') {
                part += c;
                continue;
            }
            if (part.empty()) continue;
            const auto s = pbsc::scenario_from_string(part);
            if (!s) {
                throw CLI::ValidationError("--scenario", "must be ++, +-, -+ or --");
            }
            scenarios.push_back(*s);
            part.clear();
        }
        if (scenarios.empty()) {
            throw CLI::ValidationError("--scenario", "needs at least one entry");
        }
        spec.scenarios = scenarios;
    }
    if (cmd.count("--seed")) spec.seed = vals.seed;
    if (cmd.count("--n-symbols")) spec.n_symbols = vals.n_symbols;
    if (cmd.count("--n-streams")) spec.n_streams = vals.n_streams;
    if (cmd.count("--bins")) spec.bins = vals.bins;
    if (cmd.count("--axis")) {
        if (vals.axis == "a") {
            spec.axis = pbsc::SweepAxis::poisson_mean;
        } else if (vals.axis == "snr") {
            spec.axis = pbsc::SweepAxis::snr_db;
        } else {
            throw CLI::ValidationError("--axis", "must be a or snr");
        }
    }
    if (cmd.count("--grid")) spec.grid = vals.grid;
    if (cmd.count("--out")) spec.out_path = vals.out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"BER and capacity toolkit for Poisson-modulated impulsive noise channels"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(pbsc::cli::kToolVersion));

    struct SubCmd {
        Command command;
        CLI::App* app;
        FlagValues vals;
    };
    std::vector<SubCmd> subs;
    const struct {
        Command command;
        const char* help;
    } kCommands[] = {
        {Command::ber, "Analytic average BER at one parameter point"},
        {Command::ber_sweep, "Analytic BER over a grid of a or SNR values"},
        {Command::capacity, "Informed/non-informed BSC capacity at one point"},
        {Command::capacity_sweep, "BSC capacities over a grid of a values"},
        {Command::awgn_capacity, "Gaussian-input capacities at one point"},
        {Command::awgn_sweep, "Gaussian-input capacities over a grid of a values"},
        {Command::simulate, "Signal-level Monte Carlo BER estimate"},
        {Command::variance_hist, "Empirical conditional-variance histogram"},
        {Command::figure, "Named preset reproducing one figure's data"},
    };
    subs.reserve(std::size(kCommands));
    std::string figure_name;
    for (const auto& c : kCommands) {
        subs.push_back({c.command, app.add_subcommand(pbsc::cli::to_string(c.command), c.help), {}});
        add_common_options(subs.back().app, subs.back().vals);
        if (c.command == Command::figure) {
            subs.back().app->add_option("name", figure_name,
                                        "fig3 fig4 fig5 fig6 fig7 fig8 fig10 fig11 fig12");
        }
    }

    CLI11_PARSE(app, argc, argv);

    try {
        for (SubCmd& sub : subs) {
            if (!sub.app->parsed()) {
                continue;
            }
            RunSpec spec;
            if (sub.command == Command::figure) {
                std::string name = figure_name;
                if (name.empty() && !sub.vals.config.empty()) {
                    const auto values = pbsc::cli::read_key_value_file(sub.vals.config);
                    const auto it = values.find("figure");
                    if (it != values.end()) {
                        name = it->second;
                    }
                }
                if (name.empty()) {
                    std::fprintf(stderr, "error: figure needs a preset name\n");
                    return 1;
                }
                spec = pbsc::cli::figure_preset(name);
            } else {
                spec.command = sub.command;
            }
            if (!sub.vals.config.empty()) {
                pbsc::cli::apply_key_values(spec, pbsc::cli::read_key_value_file(sub.vals.config));
            }
            apply_flags(*sub.app, sub.vals, spec);
            const auto result = pbsc::cli::run(spec);
            std::printf("wrote %s and %s\n", result.csv_path.c_str(), result.meta_path.c_str());
            return 0;
        }
        std::fprintf(stderr, "error: no command\n");
        return 1;
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
