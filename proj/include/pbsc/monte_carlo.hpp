#pragma once

#include <cstdint>
#include <vector>

#include "pbsc/channel.hpp"

namespace pbsc {

/// Counter-based substream generator.
///
/// Output i of stream s is mix64(key(seed, s) + i * golden) where mix64 is
/// the splitmix64 finalizer and key itself is derived by two mixing rounds,
/// so each (seed, stream) pair yields an independent, random-access sequence.
/// Two instances built from the same pair produce identical draws regardless
/// of what other streams do, which is what makes block-partitioned parallel
/// simulation bit-reproducible.
class SubstreamRng {
public:
    SubstreamRng(std::uint64_t seed, std::uint64_t stream) noexcept;

    std::uint64_t next_u64() noexcept;

    /// Uniform on (0, 1] with 53-bit resolution (never 0: safe under log).
    double next_unit() noexcept;

    /// Standard normal deviate, Box-Muller; the paired deviate is cached so
    /// two uniforms serve two calls.
    double next_gaussian() noexcept;

    /// Exact Poisson deviate: sequential-search inversion for a <= 10,
    /// transformed-rejection (PTRS) for larger a. Both methods sample the
    /// exact distribution; no normal approximation anywhere.
    std::int64_t next_poisson(double a) noexcept;

private:
    std::int64_t poisson_inversion(double a) noexcept;
    std::int64_t poisson_ptrs(double a) noexcept;

    std::uint64_t key_;
    std::uint64_t counter_ = 0;
    double cached_gaussian_ = 0.0;
    bool has_cached_gaussian_ = false;
};

/// One simulation run. Symbols are split into n_streams contiguous blocks,
/// block b handled by SubstreamRng(seed, b); results are therefore identical
/// for a fixed (seed, n_streams) across runs and thread schedules. n_streams
/// is also the parallelism hint.
struct SimConfig {
    ChannelKind kind = ChannelKind::channel_i;
    ChannelParams params{};
    std::uint64_t n_symbols = 1;
    std::uint64_t seed = 1;
    unsigned n_streams = 1;
};

/// Throws std::domain_error unless params validate, n_symbols >= 1 and
/// n_streams >= 1.
void validate(const SimConfig& config);

struct BerEstimate {
    std::uint64_t errors = 0;
    std::uint64_t trials = 0;
    double p_hat = 0.0;
    /// 1.96 * sqrt(p_hat (1 - p_hat) / trials) (normal approximation).
    /// For zero observed errors this is the one-sided rule-of-three bound
    /// 3 / trials instead of a degenerate zero-width interval.
    double ci_halfwidth_95 = 0.0;
    std::uint64_t seed = 0;
};

/// Signal-level simulation: per symbol draw k ~ Poisson(a), then noise
/// n ~ Normal(0, sigma_k^2), and count an error iff n > sqrt(eb/2). The
/// per-symbol error probability is exactly Q(sqrt(eb/(2 sigma_k^2))), the
/// analytic transition probability.
BerEstimate simulate_ber(const SimConfig& config);

/// Empirical distribution of the conditional noise variance. The support is
/// the k-lattice: atom k holds sigma_k^2 and the fraction of symbols that
/// drew that k. Samples with k >= bins are pooled into overflow_mass, so
/// mass + overflow_mass sums to 1. Sample moments cover all samples
/// (including overflow) and are exact: they are computed from integer k
/// totals, not from the binned masses.
struct VarianceHistogram {
    std::vector<double> variance;
    std::vector<double> mass;
    double overflow_mass = 0.0;
    std::uint64_t trials = 0;
    double sample_mean = 0.0;
    double sample_variance = 0.0;
};

VarianceHistogram empirical_variance_histogram(const SimConfig& config, int bins);

}  // namespace pbsc
