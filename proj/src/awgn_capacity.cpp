#include "pbsc/awgn_capacity.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "poisson_sum.hpp"

namespace pbsc {

namespace {

double diff_entropy(double variance) { return gaussian_diff_entropy(variance).value(); }

double sigma_k2(const ChannelParams& ch, std::int64_t k) {
    return noise_variance(ChannelKind::channel_i, ch, k);
}

double noise_entropy_avg(const AwgnParams& params, double epsilon) {
    return detail::poisson_weighted_sum(params.channel.a, epsilon, [&](std::int64_t k) {
        return diff_entropy(sigma_k2(params.channel, k));
    });
}

double output_entropy_avg(const AwgnParams& params, double epsilon) {
    return detail::poisson_weighted_sum(params.channel.a, epsilon, [&](std::int64_t k) {
        return diff_entropy(params.psd + sigma_k2(params.channel, k));
    });
}

}  // namespace

void validate(const AwgnParams& params) {
    if (!(std::isfinite(params.psd) && params.psd > 0.0)) {
        throw std::domain_error("AwgnParams: psd must be positive");
    }
    validate(params.channel);
}

std::array<KnowledgeScenario, 4> all_scenarios() {
    return {KnowledgeScenario{true, true}, KnowledgeScenario{true, false},
            KnowledgeScenario{false, true}, KnowledgeScenario{false, false}};
}

std::string to_string(KnowledgeScenario scenario) {
    std::string out;
    out += scenario.transmitter_informed ? '+' : '-';
    out += scenario.receiver_informed ? '+' : '-';
    return out;
}

std::optional<KnowledgeScenario> scenario_from_string(std::string_view text) {
    if (text.size() != 2 || (text[0] != '+' && text[0] != '-') ||
        (text[1] != '+' && text[1] != '-')) {
        return std::nullopt;
    }
    return KnowledgeScenario{text[0] == '+', text[1] == '+'};
}

Bits awgn_capacity(KnowledgeScenario scenario, const AwgnParams& params, double epsilon) {
    validate(params);
    const double s = params.psd;
    const double sigma_av2 = params.channel.sigma_g2 + params.channel.sigma_f2;
    double value = 0.0;
    if (scenario.transmitter_informed && scenario.receiver_informed) {
        value = diff_entropy(s + sigma_av2) - noise_entropy_avg(params, epsilon);
    } else if (scenario.transmitter_informed) {
        value = diff_entropy(s + sigma_av2) - diff_entropy(sigma_av2);
    } else if (scenario.receiver_informed) {
        value = detail::poisson_weighted_sum(params.channel.a, epsilon, [&](std::int64_t k) {
            const double v = sigma_k2(params.channel, k);
            return diff_entropy(s + v) - diff_entropy(v);
        });
    } else {
        value = output_entropy_avg(params, epsilon) - diff_entropy(sigma_av2);
    }
    return Bits(value);
}

Bits capacity_limit_large_a(const AwgnParams& params) {
    validate(params);
    const double sigma_av2 = params.channel.sigma_g2 + params.channel.sigma_f2;
    return Bits(0.5 * std::log2(1.0 + params.psd / sigma_av2));
}

Bits receiver_knowledge_gap(const AwgnParams& params, double epsilon) {
    validate(params);
    const double sigma_av2 = params.channel.sigma_g2 + params.channel.sigma_f2;
    return Bits(diff_entropy(sigma_av2) - noise_entropy_avg(params, epsilon));
}

Bits transmitter_knowledge_gap(const AwgnParams& params, double epsilon) {
    validate(params);
    const double sigma_av2 = params.channel.sigma_g2 + params.channel.sigma_f2;
    return Bits(diff_entropy(params.psd + sigma_av2) - output_entropy_avg(params, epsilon));
}

std::vector<AwgnSweepPoint> awgn_sweep(const AwgnParams& base, std::span<const double> a_grid,
                                       std::span<const KnowledgeScenario> scenarios,
                                       double epsilon) {
    validate(base);
    if (a_grid.empty()) {
        throw std::domain_error("awgn_sweep: grid must be nonempty");
    }
    if (scenarios.empty()) {
        throw std::domain_error("awgn_sweep: scenario set must be nonempty");
    }
    std::vector<AwgnSweepPoint> points;
    points.reserve(a_grid.size() * scenarios.size());
    for (const double a : a_grid) {
        for (const KnowledgeScenario scenario : scenarios) {
            AwgnSweepPoint point;
            point.a = a;
            point.scenario = scenario;
            AwgnParams params = base;
            params.channel.a = a;
            try {
                validate(params);
                point.capacity = awgn_capacity(scenario, params, epsilon).value();
            } catch (const std::domain_error& e) {
                point.capacity = std::numeric_limits<double>::quiet_NaN();
                point.error = e.what();
            }
            points.push_back(std::move(point));
        }
    }
    return points;
}

}  // namespace pbsc
