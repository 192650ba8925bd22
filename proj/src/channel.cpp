#include "pbsc/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace pbsc {

void validate(const ChannelParams& params) {
    if (!(std::isfinite(params.eb) && params.eb > 0.0)) {
        throw std::domain_error("ChannelParams: eb must be positive");
    }
    if (!(std::isfinite(params.sigma_g2) && params.sigma_g2 > 0.0)) {
        throw std::domain_error("ChannelParams: sigma_g2 must be positive");
    }
    if (!(std::isfinite(params.sigma_f2) && params.sigma_f2 >= 0.0)) {
        throw std::domain_error("ChannelParams: sigma_f2 must be nonnegative");
    }
    if (!(std::isfinite(params.a) && params.a > 0.0)) {
        throw std::domain_error("ChannelParams: a must be positive");
    }
}

double noise_variance(ChannelKind kind, const ChannelParams& params, std::int64_t k) {
    if (k < 0) {
        throw std::domain_error("noise_variance: count must be nonnegative");
    }
    const double kd = static_cast<double>(k);
    const double impulsive = kind == ChannelKind::channel_i
                                 ? kd * params.sigma_f2 / params.a
                                 : kd * params.sigma_f2;
    return params.sigma_g2 + impulsive;
}

Probability transition_probability(ChannelKind kind, const ChannelParams& params,
                                   std::int64_t k) {
    const double variance = noise_variance(kind, params, k);
    return q_function(std::sqrt(params.eb / (2.0 * variance)));
}

double conditional_variance_spread(const ChannelParams& params) {
    return params.sigma_f2 * params.sigma_f2 / params.a;
}

}  // namespace pbsc
