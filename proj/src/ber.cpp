#include "pbsc/ber.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "poisson_sum.hpp"

namespace pbsc {

namespace {

void check_epsilon(double epsilon) {
    if (!(epsilon > 0.0 && epsilon < 1.0)) {
        throw std::domain_error("epsilon must be in (0, 1)");
    }
}

double clamp_unit(double v) { return std::clamp(v, 0.0, 1.0); }

}  // namespace

Probability ber_analytic(ChannelKind kind, const ChannelParams& params, double epsilon) {
    validate(params);
    check_epsilon(epsilon);
    const double sum = detail::poisson_weighted_sum(params.a, epsilon, [&](std::int64_t k) {
        return transition_probability(kind, params, k).value();
    });
    return Probability(clamp_unit(sum));
}

Probability ber_limit_large_a(ChannelKind kind, const ChannelParams& params) {
    validate(params);
    if (kind == ChannelKind::channel_ii) {
        return Probability(0.5);
    }
    return q_function(std::sqrt(params.eb / (2.0 * (params.sigma_g2 + params.sigma_f2))));
}

Probability ber_limit_small_a(ChannelKind kind, const ChannelParams& params) {
    validate(params);
    const double q_background = q_function(std::sqrt(params.eb / (2.0 * params.sigma_g2))).value();
    double value = 0.0;
    if (kind == ChannelKind::channel_i) {
        value = std::exp(-params.a) * q_background + params.a / 2.0;
    } else {
        const double q_avg =
            q_function(std::sqrt(params.eb / (2.0 * (params.sigma_g2 + params.sigma_f2)))).value();
        value = (1.0 - params.a) * q_background + params.a * q_avg;
    }
    return Probability(clamp_unit(value));
}

double sigma_g2_from_snr_db(double eb, double snr_db) {
    return eb / std::pow(10.0, snr_db / 10.0);
}

std::vector<BerCurvePoint> ber_sweep(ChannelKind kind, const ChannelParams& base,
                                     SweepAxis axis, std::span<const double> grid,
                                     double epsilon) {
    validate(base);
    check_epsilon(epsilon);
    if (grid.empty()) {
        throw std::domain_error("ber_sweep: grid must be nonempty");
    }
    std::vector<BerCurvePoint> points;
    points.reserve(grid.size());
    for (const double x : grid) {
        BerCurvePoint point;
        point.x = x;
        ChannelParams params = base;
        if (axis == SweepAxis::poisson_mean) {
            params.a = x;
        } else {
            params.sigma_g2 = std::isfinite(x) ? sigma_g2_from_snr_db(base.eb, x) : -1.0;
        }
        try {
            validate(params);
            point.ber = ber_analytic(kind, params, epsilon).value();
        } catch (const std::domain_error& e) {
            point.ber = std::numeric_limits<double>::quiet_NaN();
            point.error = e.what();
        }
        points.push_back(std::move(point));
    }
    return points;
}

}  // namespace pbsc
