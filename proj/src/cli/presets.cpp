#include "run_spec.hpp"

#include <stdexcept>

namespace pbsc::cli {

// Default reproduction grids. The A sweeps use 12 points per decade; fig5
// steps the SNR by 1 dB as usual for waterfall plots.
RunSpec figure_preset(const std::string& name) {
    RunSpec spec;
    spec.command = Command::figure;
    spec.figure = name;
    if (name == "fig3") {
        // Poisson mass over the conditional-variance lattice for a spread of a.
        spec.grid = "0.01,0.1,1,10,100";
    } else if (name == "fig4") {
        spec.kind = ChannelKind::channel_i;
        spec.grid = "1e-3:1e1:49:log";
    } else if (name == "fig5") {
        // BER vs SNR waterfalls for a in {0.01, 0.1, 1}, Channel I.
        spec.kind = ChannelKind::channel_i;
        spec.axis = SweepAxis::snr_db;
        spec.grid = "0:80:81:lin";
    } else if (name == "fig6") {
        spec.kind = ChannelKind::channel_ii;
        spec.grid = "1e-3:1e3:73:log";
    } else if (name == "fig7") {
        spec.kind = ChannelKind::channel_i;
        spec.grid = "1e-3:1e3:73:log";
    } else if (name == "fig8") {
        spec.kind = ChannelKind::channel_ii;
        spec.grid = "1e-3:1e3:73:log";
    } else if (name == "fig10") {
        spec.scenarios = {KnowledgeScenario{true, true}, KnowledgeScenario{true, false}};
        spec.grid = "1e-3:1e3:73:log";
    } else if (name == "fig11") {
        spec.scenarios = {KnowledgeScenario{false, true}, KnowledgeScenario{false, false}};
        spec.grid = "1e-3:1e3:73:log";
    } else if (name == "fig12") {
        spec.scenarios = {KnowledgeScenario{true, false}, KnowledgeScenario{false, false}};
        spec.grid = "1e-3:1e3:73:log";
    } else {
        throw std::invalid_argument(
            "unknown figure preset '" + name +
            "' (valid: fig3 fig4 fig5 fig6 fig7 fig8 fig10 fig11 fig12)");
    }
    return spec;
}

}  // namespace pbsc::cli
