#pragma once

#include <cstdint>

#include "pbsc/numerics.hpp"

namespace pbsc {

/// The two conditional-variance laws: Channel I scales the impulsive variance
/// with 1/a (sigma_g2 + k*sigma_f2/a), Channel II does not (sigma_g2 + k*sigma_f2).
enum class ChannelKind { channel_i, channel_ii };

/// Physical channel parameters shared by every formula.
///
/// Defaults are the narrowband power-line measurement values used throughout:
/// eb = 7.28e-3 J per bit, sigma_g2 = 7.28e-7 W background noise variance,
/// sigma_f2 = 7.28e-4 W average impulsive variance, and Poisson mean a = 1.
/// Ratios eb/sigma^2 are treated as dimensionless, exactly as the formulas
/// use them. sigma_f2 = 0 is allowed and degenerates to a fixed AWGN channel.
struct ChannelParams {
    double eb = 7.28e-3;
    double sigma_g2 = 7.28e-7;
    double sigma_f2 = 7.28e-4;
    double a = 1.0;
};

/// Throws std::domain_error naming the offending field unless
/// eb > 0, sigma_g2 > 0, sigma_f2 >= 0 and a > 0 (all finite).
void validate(const ChannelParams& params);

/// Conditional noise variance given the impulse count k (Watts).
double noise_variance(ChannelKind kind, const ChannelParams& params, std::int64_t k);

/// Bit-flip probability given k impulses: Q(sqrt(eb / (2 * noise_variance))).
/// Strictly increasing in k. At the default operating point the k = 0 value
/// underflows (Q argument ~sqrt(5000)) and clamps to exactly 0.
Probability transition_probability(ChannelKind kind, const ChannelParams& params, std::int64_t k);

/// Variance over k of the Channel I conditional variance, sigma_f2^2 / a
/// (Watts^2). Vanishes for large a, where the noise becomes effectively
/// Gaussian with variance sigma_g2 + sigma_f2.
double conditional_variance_spread(const ChannelParams& params);

}  // namespace pbsc
