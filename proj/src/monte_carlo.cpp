#include "pbsc/monte_carlo.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>
#include <vector>

namespace pbsc {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

// splitmix64 finalizer (Vigna); full-avalanche 64-bit mix.
std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace

SubstreamRng::SubstreamRng(std::uint64_t seed, std::uint64_t stream) noexcept
    : key_(mix64(mix64(seed + kGolden) + stream * kGolden)) {}

std::uint64_t SubstreamRng::next_u64() noexcept {
    counter_ += 1;
    return mix64(key_ + counter_ * kGolden);
}

double SubstreamRng::next_unit() noexcept {
    return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
}

double SubstreamRng::next_gaussian() noexcept {
    if (has_cached_gaussian_) {
        has_cached_gaussian_ = false;
        return cached_gaussian_;
    }
    const double u1 = next_unit();
    const double u2 = next_unit();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    cached_gaussian_ = radius * std::sin(angle);
    has_cached_gaussian_ = true;
    return radius * std::cos(angle);
}

std::int64_t SubstreamRng::next_poisson(double a) noexcept {
    return a <= 10.0 ? poisson_inversion(a) : poisson_ptrs(a);
}

std::int64_t SubstreamRng::poisson_inversion(double a) noexcept {
    const double u = next_unit();
    double term = std::exp(-a);
    double cum = term;
    std::int64_t k = 0;
    while (u > cum) {
        ++k;
        term *= a / static_cast<double>(k);
        cum += term;
        if (term == 0.0) {
            break;  // fp tail exhausted; mass beyond here is below 2^-1074
        }
    }
    return k;
}

// Transformed rejection with squeeze (Hormann's PTRS), exact for a >= 10.
std::int64_t SubstreamRng::poisson_ptrs(double a) noexcept {
    const double log_a = std::log(a);
    const double b = 0.931 + 2.53 * std::sqrt(a);
    const double slope = -0.059 + 0.02483 * b;
    const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
    const double v_r = 0.9277 - 3.6224 / (b - 2.0);
    for (;;) {
        const double u = next_unit() - 0.5;
        const double v = next_unit();
        const double us = 0.5 - std::abs(u);
        const double kd = std::floor((2.0 * slope / us + b) * u + a + 0.43);
        if (us >= 0.07 && v <= v_r) {
            return static_cast<std::int64_t>(kd);
        }
        if (kd < 0.0 || (us < 0.013 && v > us)) {
            continue;
        }
        const double lhs = std::log(v) + std::log(inv_alpha) - std::log(slope / (us * us) + b);
        const double rhs = kd * log_a - a - std::lgamma(kd + 1.0);
        if (lhs <= rhs) {
            return static_cast<std::int64_t>(kd);
        }
    }
}

void validate(const SimConfig& config) {
    validate(config.params);
    if (config.n_symbols < 1) {
        throw std::domain_error("SimConfig: n_symbols must be at least 1");
    }
    if (config.n_streams < 1) {
        throw std::domain_error("SimConfig: n_streams must be at least 1");
    }
}

namespace {

// Runs `body(stream, begin, end)` over the fixed block partition of
// [0, n_symbols), one substream per block, in parallel when asked to.
template <class Body>
void for_each_block(const SimConfig& config, Body&& body) {
    const std::uint64_t n = config.n_symbols;
    const std::uint64_t streams = config.n_streams;
    const std::uint64_t block = (n + streams - 1) / streams;
    if (streams == 1) {
        body(0, 0, n);
        return;
    }
    std::vector<std::jthread> workers;
    workers.reserve(streams);
    for (std::uint64_t s = 0; s < streams; ++s) {
        const std::uint64_t begin = s * block;
        const std::uint64_t end = std::min(n, begin + block);
        if (begin >= end) {
            break;
        }
        workers.emplace_back([&body, s, begin, end] { body(s, begin, end); });
    }
}

}  // namespace

BerEstimate simulate_ber(const SimConfig& config) {
    validate(config);
    const double threshold = std::sqrt(config.params.eb / 2.0);
    std::vector<std::uint64_t> errors_per_stream(config.n_streams, 0);
    for_each_block(config, [&](std::uint64_t stream, std::uint64_t begin, std::uint64_t end) {
        SubstreamRng rng(config.seed, stream);
        std::uint64_t errors = 0;
        for (std::uint64_t i = begin; i < end; ++i) {
            const std::int64_t k = rng.next_poisson(config.params.a);
            const double variance = noise_variance(config.kind, config.params, k);
            const double noise = std::sqrt(variance) * rng.next_gaussian();
            if (noise > threshold) {
                ++errors;
            }
        }
        errors_per_stream[stream] = errors;
    });

    BerEstimate estimate;
    estimate.trials = config.n_symbols;
    estimate.seed = config.seed;
    for (const std::uint64_t e : errors_per_stream) {
        estimate.errors += e;
    }
    const double n = static_cast<double>(estimate.trials);
    estimate.p_hat = static_cast<double>(estimate.errors) / n;
    if (estimate.errors == 0) {
        estimate.ci_halfwidth_95 = 3.0 / n;
    } else {
        estimate.ci_halfwidth_95 = 1.96 * std::sqrt(estimate.p_hat * (1.0 - estimate.p_hat) / n);
    }
    return estimate;
}

VarianceHistogram empirical_variance_histogram(const SimConfig& config, int bins) {
    validate(config);
    if (bins < 1) {
        throw std::domain_error("empirical_variance_histogram: bins must be at least 1");
    }
    struct StreamTotals {
        std::vector<std::uint64_t> counts;
        std::uint64_t overflow = 0;
        std::uint64_t sum_k = 0;
        unsigned __int128 sum_k2 = 0;
    };
    std::vector<StreamTotals> totals(config.n_streams);
    for (auto& t : totals) {
        t.counts.assign(static_cast<std::size_t>(bins), 0);
    }
    for_each_block(config, [&](std::uint64_t stream, std::uint64_t begin, std::uint64_t end) {
        SubstreamRng rng(config.seed, stream);
        StreamTotals& t = totals[stream];
        for (std::uint64_t i = begin; i < end; ++i) {
            const std::int64_t k = rng.next_poisson(config.params.a);
            if (k < bins) {
                ++t.counts[static_cast<std::size_t>(k)];
            } else {
                ++t.overflow;
            }
            const auto ku = static_cast<std::uint64_t>(k);
            t.sum_k += ku;
            t.sum_k2 += static_cast<unsigned __int128>(ku) * ku;
        }
    });

    std::uint64_t overflow = 0;
    std::uint64_t sum_k = 0;
    unsigned __int128 sum_k2 = 0;
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(bins), 0);
    for (const auto& t : totals) {
        overflow += t.overflow;
        sum_k += t.sum_k;
        sum_k2 += t.sum_k2;
        for (std::size_t j = 0; j < counts.size(); ++j) {
            counts[j] += t.counts[j];
        }
    }

    VarianceHistogram hist;
    hist.trials = config.n_symbols;
    const double n = static_cast<double>(config.n_symbols);
    hist.variance.reserve(counts.size());
    hist.mass.reserve(counts.size());
    for (std::size_t j = 0; j < counts.size(); ++j) {
        hist.variance.push_back(
            noise_variance(config.kind, config.params, static_cast<std::int64_t>(j)));
        hist.mass.push_back(static_cast<double>(counts[j]) / n);
    }
    hist.overflow_mass = static_cast<double>(overflow) / n;

    // The conditional variance is affine in k, so exact integer k-moments give
    // exact sample moments of the variance.
    const double step = config.kind == ChannelKind::channel_i
                            ? config.params.sigma_f2 / config.params.a
                            : config.params.sigma_f2;
    const double mean_k = static_cast<double>(sum_k) / n;
    const double mean_k2 = static_cast<double>(sum_k2) / n;
    hist.sample_mean = config.params.sigma_g2 + step * mean_k;
    hist.sample_variance = step * step * (mean_k2 - mean_k * mean_k);
    return hist;
}

}  // namespace pbsc
