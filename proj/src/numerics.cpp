#include "pbsc/numerics.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace pbsc {

Probability::Probability(double value) : value_(value) {
    if (!(value >= 0.0 && value <= 1.0)) {
        throw std::domain_error("Probability out of [0, 1]: " + std::to_string(value));
    }
}

Bits::Bits(double value) : value_(value) {
    if (!std::isfinite(value)) {
        throw std::domain_error("Bits value must be finite");
    }
}

Probability q_function(double x) {
    if (!std::isfinite(x)) {
        throw std::domain_error("q_function: argument must be finite");
    }
    return Probability(0.5 * std::erfc(x / std::numbers::sqrt2));
}

Bits binary_entropy(Probability p) {
    const double v = p.value();
    if (v == 0.0 || v == 1.0) {
        return Bits(0.0);
    }
    return Bits(-v * std::log2(v) - (1.0 - v) * std::log2(1.0 - v));
}

Bits gaussian_diff_entropy(double variance) {
    if (!(std::isfinite(variance) && variance > 0.0)) {
        throw std::domain_error("gaussian_diff_entropy: variance must be positive");
    }
    constexpr double two_pi_e = 2.0 * std::numbers::pi * std::numbers::e;
    return Bits(0.5 * std::log2(two_pi_e * variance));
}

Probability poisson_pmf(std::int64_t k, double a) {
    if (!(std::isfinite(a) && a > 0.0)) {
        throw std::domain_error("poisson_pmf: mean must be positive");
    }
    if (k < 0) {
        throw std::domain_error("poisson_pmf: count must be nonnegative");
    }
    const double kd = static_cast<double>(k);
    const double log_p = kd * std::log(a) - a - std::lgamma(kd + 1.0);
    return Probability(std::exp(log_p));
}

PoissonTruncation truncate_poisson(double a, double epsilon) {
    if (!(std::isfinite(a) && a > 0.0)) {
        throw std::domain_error("truncate_poisson: mean must be positive");
    }
    if (!(epsilon > 0.0 && epsilon < 1.0)) {
        throw std::domain_error("truncate_poisson: epsilon must be in (0, 1)");
    }
    long double cum = 0.0L;
    long double comp = 0.0L;  // Kahan compensation
    std::int64_t k = 0;
    for (;;) {
        const double term = poisson_pmf(k, a).value();
        const long double y = static_cast<long double>(term) - comp;
        const long double t = cum + y;
        comp = (t - cum) - y;
        cum = t;
        if (cum >= 1.0L - static_cast<long double>(epsilon)) {
            break;
        }
        // Past the mode the pmf underflows to 0; the remaining true mass is
        // below anything representable, so stop rather than loop forever on
        // an epsilon finer than the accumulator.
        if (term == 0.0 && static_cast<double>(k) > a) {
            break;
        }
        ++k;
    }
    const double tail = static_cast<double>(1.0L - cum);
    PoissonTruncation out;
    out.a = a;
    out.k_max = k;
    out.tail_bound = tail > 0.0 ? tail : std::numeric_limits<double>::denorm_min();
    return out;
}

}  // namespace pbsc
