// Acceptance suite: one check per release criterion, each printed as a
// single PASS/FAIL line with the measured values. Exits with the number of
// failed criteria. argv[1] is the path to the pbsc CLI binary (used by the
// end-to-end determinism check).

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "pbsc/awgn_capacity.hpp"
#include "pbsc/ber.hpp"
#include "pbsc/bsc_capacity.hpp"
#include "pbsc/monte_carlo.hpp"

using namespace pbsc;

namespace {

int g_failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail) {
    std::printf("%s  %2d  %s: %s\n", pass ? "PASS" : "FAIL", id, name.c_str(), detail.c_str());
    std::fflush(stdout);
    if (!pass) {
        ++g_failures;
    }
}

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

std::vector<double> log_grid(double lo, double hi, int count) {
    std::vector<double> grid;
    const double l0 = std::log10(lo);
    const double l1 = std::log10(hi);
    for (int i = 0; i < count; ++i) {
        grid.push_back(std::pow(10.0, l0 + (l1 - l0) * i / double(count - 1)));
    }
    return grid;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

// 1. Informed/non-informed capacity pair at a = 0.01, Channel I.
void criterion_1() {
    ChannelParams p{};
    p.a = 0.01;
    const double ci = capacity_informed(ChannelKind::channel_i, p).value();
    const double cn = capacity_noninformed(ChannelKind::channel_i, p).value();
    const bool pass = ci >= 0.985 && ci <= 0.995 && cn >= 0.955 && cn <= 0.965;
    report(1, "capacity pair at a=0.01", pass,
           "c_informed=" + num(ci) + " (need [0.985,0.995]), c_noninformed=" + num(cn) +
               " (need [0.955,0.965])");
}

// 2. Channel II BER at a = 100 against the saturation value 1/2.
void criterion_2() {
    ChannelParams p{};
    p.a = 100.0;
    const double ber = ber_analytic(ChannelKind::channel_ii, p).value();
    const bool pass = ber >= 0.499 && ber <= 0.5;
    report(2, "channel II BER at a=100", pass, "ber=" + num(ber) + " (need [0.499,0.5])");
}

// 3. Channel I plateau at a = 1000 against the independent closed form.
void criterion_3() {
    ChannelParams p{};
    p.a = 1000.0;
    const double ber = ber_analytic(ChannelKind::channel_i, p).value();
    const double ref = q_function(std::sqrt(p.eb / (2.0 * (p.sigma_g2 + p.sigma_f2)))).value();
    const double rel = std::abs(ber - ref) / ref;
    report(3, "channel I plateau at a=1000", rel <= 0.01,
           "ber=" + num(ber) + ", plateau=" + num(ref) + ", rel=" + num(rel) +
               " (need <=0.01)");
}

// 4. Small-a Channel I BER against a/2 within 5%.
void criterion_4() {
    bool pass = true;
    std::string detail;
    for (const double a : {1e-3, 1e-2}) {
        ChannelParams p{};
        p.a = a;
        const double ber = ber_analytic(ChannelKind::channel_i, p).value();
        const double rel = std::abs(ber - a / 2.0) / (a / 2.0);
        pass = pass && rel <= 0.05;
        if (!detail.empty()) {
            detail += "; ";
        }
        detail += "a=" + num(a) + ": ber=" + num(ber) + ", rel_dev=" + num(rel);
    }
    report(4, "small-a BER vs a/2 (5%)", pass, detail + " (need <=0.05)");
}

// 5. Informed >= non-informed on a 40-point grid, both channels.
void criterion_5() {
    const auto grid = log_grid(1e-3, 1e3, 40);
    double worst = 1.0;
    double worst_a = 0.0;
    const char* worst_kind = "";
    for (const ChannelKind kind : {ChannelKind::channel_i, ChannelKind::channel_ii}) {
        for (const double a : grid) {
            ChannelParams p{};
            p.a = a;
            const double gap = capacity_informed(kind, p).value() -
                               capacity_noninformed(kind, p).value();
            if (gap < worst) {
                worst = gap;
                worst_a = a;
                worst_kind = kind == ChannelKind::channel_i ? "I" : "II";
            }
        }
    }
    report(5, "convexity bound over 40-point grid", worst >= -1e-12,
           "min(c_informed - c_noninformed)=" + num(worst) + " at kind=" + worst_kind +
               ", a=" + num(worst_a) + " (need >=-1e-12)");
}

// 6. The four scenarios merge at a = 1000 onto the closed-form limit.
void criterion_6() {
    AwgnParams params;
    params.channel.a = 1000.0;
    const double limit = capacity_limit_large_a(params).value();
    double values[4];
    int i = 0;
    for (const KnowledgeScenario s : all_scenarios()) {
        values[i++] = awgn_capacity(s, params).value();
    }
    double spread = 0.0;
    double off_limit = 0.0;
    for (const double x : values) {
        off_limit = std::max(off_limit, std::abs(x - limit));
        for (const double y : values) {
            spread = std::max(spread, std::abs(x - y));
        }
    }
    report(6, "four-scenario merge at a=1000", spread <= 1e-3 && off_limit <= 1e-3,
           "max spread=" + num(spread) + ", max |c - limit|=" + num(off_limit) + ", limit=" +
               num(limit) + " (need <=0.001)");
}

// 7. Scenario ordering and the two gap decompositions on the grid.
void criterion_7() {
    const auto grid = log_grid(1e-3, 1e3, 40);
    double worst_order = 1.0;
    double worst_identity = 0.0;
    for (const double a : grid) {
        AwgnParams params;
        params.channel.a = a;
        const double pp = awgn_capacity(KnowledgeScenario{true, true}, params).value();
        const double pm = awgn_capacity(KnowledgeScenario{true, false}, params).value();
        const double mp = awgn_capacity(KnowledgeScenario{false, true}, params).value();
        const double mm = awgn_capacity(KnowledgeScenario{false, false}, params).value();
        const double rx = receiver_knowledge_gap(params).value();
        const double tx = transmitter_knowledge_gap(params).value();
        for (const double d : {pp - pm, pp - mp, pm - mm, mp - mm}) {
            worst_order = std::min(worst_order, d);
        }
        for (const double d : {(pp - pm) - rx, (mp - mm) - rx, (pp - mp) - tx,
                               (pm - mm) - tx}) {
            worst_identity = std::max(worst_identity, std::abs(d));
        }
    }
    report(7, "scenario ordering and gap identities", worst_order >= -1e-12 &&
               worst_identity <= 1e-12,
           "min ordered gap=" + num(worst_order) + " (need >=-1e-12), max identity residual=" +
               num(worst_identity) + " (need <=1e-12)");
}

// 8. Monte Carlo vs the analytic sums: 9 cells at 1e7 symbols.
void criterion_8() {
    struct Cell {
        ChannelKind kind;
        double a;
    };
    const Cell cells[] = {
        {ChannelKind::channel_i, 0.01}, {ChannelKind::channel_i, 0.1},
        {ChannelKind::channel_i, 1.0},  {ChannelKind::channel_i, 10.0},
        {ChannelKind::channel_i, 100.0}, {ChannelKind::channel_ii, 0.01},
        {ChannelKind::channel_ii, 0.1}, {ChannelKind::channel_ii, 1.0},
        {ChannelKind::channel_ii, 100.0},
    };
    bool pass = true;
    std::string detail;
    int index = 0;
    for (const Cell& cell : cells) {
        SimConfig config;
        config.kind = cell.kind;
        config.params.a = cell.a;
        config.n_symbols = 10'000'000;
        config.seed = 20240101 + static_cast<std::uint64_t>(index);
        config.n_streams = 4;
        const BerEstimate est = simulate_ber(config);
        const double analytic = ber_analytic(cell.kind, config.params).value();
        const double dev = std::abs(est.p_hat - analytic);
        const bool cell_ok = dev <= 4.0 * est.ci_halfwidth_95;
        pass = pass && cell_ok;
        if (!cell_ok) {
            detail += " [kind=" + std::string(cell.kind == ChannelKind::channel_i ? "I" : "II") +
                      " a=" + num(cell.a) + ": |p_hat-ber|=" + num(dev) + " > 4ci=" +
                      num(4.0 * est.ci_halfwidth_95) + "]";
        }
        ++index;
    }
    report(8, "Monte Carlo vs analytic (9 cells, 1e7 symbols)", pass,
           pass ? "all cells within 4 CI half-widths" : detail);
}

// 9. Variance-of-variance: closed form vs brute force and vs simulation.
void criterion_9() {
    double worst_rel = 0.0;
    for (const double a : {0.01, 0.1, 1.0, 10.0, 100.0}) {
        ChannelParams p{};
        p.a = a;
        const double analytic = conditional_variance_spread(p);
        const PoissonTruncation window = truncate_poisson(a, 1e-15);
        long double mean = 0.0L;
        for (std::int64_t k = 0; k <= window.k_max; ++k) {
            mean += static_cast<long double>(poisson_pmf(k, a).value()) *
                    noise_variance(ChannelKind::channel_i, p, k);
        }
        long double brute = 0.0L;
        for (std::int64_t k = 0; k <= window.k_max; ++k) {
            const long double d = noise_variance(ChannelKind::channel_i, p, k) - mean;
            brute += static_cast<long double>(poisson_pmf(k, a).value()) * d * d;
        }
        worst_rel = std::max(
            worst_rel, std::abs(static_cast<double>(brute) - analytic) / analytic);
    }

    SimConfig config;
    config.params.a = 10.0;
    config.n_symbols = 10'000'000;
    config.seed = 424242;
    config.n_streams = 4;
    const VarianceHistogram hist = empirical_variance_histogram(config, 64);
    const double spread_ref = conditional_variance_spread(config.params);
    const double emp_rel = std::abs(hist.sample_variance - spread_ref) / spread_ref;
    report(9, "variance-of-variance closed form", worst_rel <= 1e-10 && emp_rel <= 0.05,
           "max brute-force rel=" + num(worst_rel) + " (need <=1e-10), empirical rel at a=10: " +
               num(emp_rel) + " (need <=0.05)");
}

// 10. Equal-performance shift from the non-informed curve at a = 0.02.
void criterion_10() {
    const auto shift = equal_performance_shift(ChannelKind::channel_i, ChannelParams{}, 0.02);
    const bool pass = shift.has_value() && *shift >= 0.1 && *shift <= 0.4;
    report(10, "equal-performance shift from a=0.02", pass,
           shift ? "a*=" + num(*shift) + " (need [0.1,0.4])" : "no solution found");
}

// 11. End-to-end determinism of the CLI.
void criterion_11(const char* cli) {
    namespace fs = std::filesystem;
    if (cli == nullptr) {
        report(11, "CLI determinism", false, "CLI path not supplied");
        return;
    }
    const fs::path dir = fs::temp_directory_path() / "pbsc_acceptance";
    fs::create_directories(dir);
    const auto invoke = [&](const std::string& args, const fs::path& out) {
        const std::string cmd =
            std::string("\"") + cli + "\" " + args + " --out \"" + out.string() + "\" > /dev/null";
        return std::system(cmd.c_str()) == 0;
    };
    bool pass = true;
    std::string detail;
    {
        const fs::path out1 = dir / "fig4_run1.csv";
        const fs::path out2 = dir / "fig4_run2.csv";
        const bool ran = invoke("figure fig4", out1) && invoke("figure fig4", out2);
        const bool same = ran && slurp(out1.string()) == slurp(out2.string()) &&
                          slurp(out1.string() + ".meta") == slurp(out2.string() + ".meta") &&
                          !slurp(out1.string()).empty();
        pass = pass && same;
        detail += std::string("figure fig4: ") + (same ? "byte-identical" : "MISMATCH");
    }
    {
        const fs::path out1 = dir / "sim_run1.csv";
        const fs::path out2 = dir / "sim_run2.csv";
        const bool ran = invoke("simulate --seed 42 --n-streams 4", out1) &&
                         invoke("simulate --seed 42 --n-streams 4", out2);
        const bool same = ran && slurp(out1.string()) == slurp(out2.string()) &&
                          !slurp(out1.string()).empty();
        pass = pass && same;
        detail += std::string("; simulate --seed 42: ") + (same ? "byte-identical" : "MISMATCH");
    }
    report(11, "CLI determinism", pass, detail);
}

}  // namespace

int main(int argc, char** argv) {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11(argc > 1 ? argv[1] : nullptr);
    std::printf("%d of 11 criteria passed\n", 11 - g_failures);
    return g_failures;
}
