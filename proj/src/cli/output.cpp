#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>

#include "run_spec.hpp"

namespace pbsc::cli {

namespace {

std::string fmt(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
    return buf;
}

// Data values: 15 significant digits.
std::string data(double v) { return fmt(v, 15); }
// Parameters: exact round-trip representation.
std::string exact(double v) { return fmt(v, 17); }

std::string scenario_list(const std::vector<KnowledgeScenario>& scenarios) {
    std::string out;
    for (const KnowledgeScenario s : scenarios) {
        if (!out.empty()) {
            out += ',';
        }
        out += to_string(s);
    }
    return out;
}

void append_figure_rows(const RunSpec& spec, std::string& out);

}  // namespace

std::string render_meta(const RunSpec& spec) {
    std::string out;
    out += std::string("tool=") + kToolName + "\n";
    out += std::string("version=") + kToolVersion + "\n";
    out += std::string("command=") + to_string(spec.command) + "\n";
    if (spec.command == Command::figure) {
        out += "figure=" + spec.figure + "\n";
    }
    out += std::string("kind=") + (spec.kind == ChannelKind::channel_i ? "I" : "II") + "\n";
    out += "eb=" + exact(spec.params.eb) + "\n";
    out += "sigma_g2=" + exact(spec.params.sigma_g2) + "\n";
    out += "sigma_f2=" + exact(spec.params.sigma_f2) + "\n";
    out += "a=" + exact(spec.params.a) + "\n";
    out += "psd=" + exact(spec.psd) + "\n";
    out += "epsilon=" + exact(spec.epsilon) + "\n";
    out += "scenario=" + scenario_list(spec.scenarios) + "\n";
    out += "seed=" + std::to_string(spec.seed) + "\n";
    out += "n_symbols=" + std::to_string(spec.n_symbols) + "\n";
    out += "n_streams=" + std::to_string(spec.n_streams) + "\n";
    out += "bins=" + std::to_string(spec.bins) + "\n";
    out += std::string("axis=") + (spec.axis == SweepAxis::poisson_mean ? "a" : "snr") + "\n";
    out += "grid=" + spec.grid + "\n";
    return out;
}

std::string render_csv(const RunSpec& spec) {
    std::string out;
    {
        const std::string meta = render_meta(spec);
        std::size_t begin = 0;
        while (begin < meta.size()) {
            const std::size_t end = meta.find('\n', begin);
            out += "# " + meta.substr(begin, end - begin) + "\n";
            begin = end + 1;
        }
    }

    switch (spec.command) {
        case Command::ber: {
            const double ber = ber_analytic(spec.kind, spec.params, spec.epsilon).value();
            out += "a,ber\n";
            out += data(spec.params.a) + "," + data(ber) + "\n";
            break;
        }
        case Command::ber_sweep: {
            const auto grid = parse_grid(spec.grid);
            const auto points = ber_sweep(spec.kind, spec.params, spec.axis, grid, spec.epsilon);
            out += spec.axis == SweepAxis::poisson_mean ? "a,ber,error\n" : "snr_db,ber,error\n";
            for (const auto& p : points) {
                out += data(p.x) + "," + data(p.ber) + "," + p.error + "\n";
            }
            break;
        }
        case Command::capacity: {
            const double ci = capacity_informed(spec.kind, spec.params, spec.epsilon).value();
            const double cn = capacity_noninformed(spec.kind, spec.params, spec.epsilon).value();
            out += "a,c_informed,c_noninformed\n";
            out += data(spec.params.a) + "," + data(ci) + "," + data(cn) + "\n";
            break;
        }
        case Command::capacity_sweep: {
            const auto grid = parse_grid(spec.grid);
            const auto points = capacity_sweep(spec.kind, spec.params, grid, spec.epsilon);
            out += "a,c_informed,c_noninformed,error\n";
            for (const auto& p : points) {
                out += data(p.a) + "," + data(p.c_informed) + "," + data(p.c_noninformed) + "," +
                       p.error + "\n";
            }
            break;
        }
        case Command::awgn_capacity: {
            AwgnParams params{spec.psd, spec.params};
            out += "a,scenario,capacity\n";
            for (const KnowledgeScenario s : spec.scenarios) {
                const double c = awgn_capacity(s, params, spec.epsilon).value();
                out += data(spec.params.a) + "," + to_string(s) + "," + data(c) + "\n";
            }
            break;
        }
        case Command::awgn_sweep: {
            const auto grid = parse_grid(spec.grid);
            AwgnParams params{spec.psd, spec.params};
            const auto points = awgn_sweep(params, grid, spec.scenarios, spec.epsilon);
            out += "a,scenario,capacity,error\n";
            for (const auto& p : points) {
                out += data(p.a) + "," + to_string(p.scenario) + "," + data(p.capacity) + "," +
                       p.error + "\n";
            }
            break;
        }
        case Command::simulate: {
            SimConfig config{spec.kind, spec.params, spec.n_symbols, spec.seed, spec.n_streams};
            const BerEstimate est = simulate_ber(config);
            out += "errors,trials,p_hat,ci_halfwidth_95,seed\n";
            out += std::to_string(est.errors) + "," + std::to_string(est.trials) + "," +
                   data(est.p_hat) + "," + data(est.ci_halfwidth_95) + "," +
                   std::to_string(est.seed) + "\n";
            break;
        }
        case Command::variance_hist: {
            SimConfig config{spec.kind, spec.params, spec.n_symbols, spec.seed, spec.n_streams};
            const VarianceHistogram hist = empirical_variance_histogram(config, spec.bins);
            out += "# overflow_mass=" + data(hist.overflow_mass) + "\n";
            out += "k,variance,mass\n";
            for (std::size_t k = 0; k < hist.variance.size(); ++k) {
                out += std::to_string(k) + "," + data(hist.variance[k]) + "," +
                       data(hist.mass[k]) + "\n";
            }
            break;
        }
        case Command::figure: {
            append_figure_rows(spec, out);
            break;
        }
    }
    return out;
}

namespace {

void append_figure_rows(const RunSpec& spec, std::string& out) {
    const std::string& name = spec.figure;
    if (name == "fig3") {
        // Analytic mass of each conditional-variance atom, per a value.
        const auto a_values = parse_grid(spec.grid);
        out += "a,k,variance,mass\n";
        for (const double a : a_values) {
            ChannelParams params = spec.params;
            params.a = a;
            validate(params);
            const PoissonTruncation window = truncate_poisson(a, spec.epsilon);
            for (std::int64_t k = 0; k <= window.k_max; ++k) {
                out += data(a) + "," + std::to_string(k) + "," +
                       data(noise_variance(spec.kind, params, k)) + "," +
                       data(poisson_pmf(k, a).value()) + "\n";
            }
        }
    } else if (name == "fig4" || name == "fig6") {
        const auto grid = parse_grid(spec.grid);
        const auto points =
            ber_sweep(spec.kind, spec.params, SweepAxis::poisson_mean, grid, spec.epsilon);
        out += "a,ber\n";
        for (const auto& p : points) {
            out += data(p.x) + "," + data(p.ber) + "\n";
        }
    } else if (name == "fig5") {
        const auto grid = parse_grid(spec.grid);
        constexpr double kCurveA[] = {0.01, 0.1, 1.0};
        std::vector<std::vector<BerCurvePoint>> curves;
        for (const double a : kCurveA) {
            ChannelParams params = spec.params;
            params.a = a;
            curves.push_back(
                ber_sweep(spec.kind, params, SweepAxis::snr_db, grid, spec.epsilon));
        }
        out += "snr_db,ber_a0.01,ber_a0.1,ber_a1\n";
        for (std::size_t i = 0; i < grid.size(); ++i) {
            out += data(grid[i]) + "," + data(curves[0][i].ber) + "," + data(curves[1][i].ber) +
                   "," + data(curves[2][i].ber) + "\n";
        }
    } else if (name == "fig7" || name == "fig8") {
        const auto grid = parse_grid(spec.grid);
        const auto points = capacity_sweep(spec.kind, spec.params, grid, spec.epsilon);
        out += "a,c_informed,c_noninformed\n";
        for (const auto& p : points) {
            out += data(p.a) + "," + data(p.c_informed) + "," + data(p.c_noninformed) + "\n";
        }
    } else if (name == "fig10" || name == "fig11" || name == "fig12") {
        const auto grid = parse_grid(spec.grid);
        AwgnParams params{spec.psd, spec.params};
        const auto points = awgn_sweep(params, grid, spec.scenarios, spec.epsilon);
        std::string header = "a";
        for (const KnowledgeScenario s : spec.scenarios) {
            header += ",c_";
            header += s.transmitter_informed ? 'p' : 'm';
            header += s.receiver_informed ? 'p' : 'm';
        }
        out += header + "\n";
        const std::size_t n_scen = spec.scenarios.size();
        for (std::size_t i = 0; i < grid.size(); ++i) {
            out += data(grid[i]);
            for (std::size_t j = 0; j < n_scen; ++j) {
                out += "," + data(points[i * n_scen + j].capacity);
            }
            out += "\n";
        }
    } else {
        throw std::invalid_argument("unknown figure preset '" + name + "'");
    }
}

void write_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw std::runtime_error("cannot open output file: " + tmp);
        }
        out << content;
        if (!out.flush()) {
            throw std::runtime_error("write failed: " + tmp);
        }
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace

RunResult run(const RunSpec& spec) {
    RunSpec resolved = spec;
    if (resolved.out_path.empty()) {
        resolved.out_path =
            (resolved.command == Command::figure ? resolved.figure
                                                 : std::string(to_string(resolved.command))) +
            ".csv";
    }
    const std::string csv = render_csv(resolved);
    const std::string meta = render_meta(resolved);
    write_atomic(resolved.out_path, csv);
    write_atomic(resolved.out_path + ".meta", meta);
    return RunResult{resolved.out_path, resolved.out_path + ".meta"};
}

}  // namespace pbsc::cli
