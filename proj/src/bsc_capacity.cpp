#include "pbsc/bsc_capacity.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "poisson_sum.hpp"

namespace pbsc {

namespace {

// Relative bracket width at which the bisection stops.
constexpr double kShiftTolerance = 1e-6;
// Expansion guard: beyond this the informed curve is flat at its large-a
// limit and each evaluation costs O(a) terms.
constexpr double kShiftMaxA = 1e6;

}  // namespace

Bits capacity_noninformed(ChannelKind kind, const ChannelParams& params, double epsilon) {
    const Probability ber = ber_analytic(kind, params, epsilon);
    return Bits(1.0 - binary_entropy(ber).value());
}

Bits capacity_informed(ChannelKind kind, const ChannelParams& params, double epsilon) {
    validate(params);
    const double avg_entropy = detail::poisson_weighted_sum(params.a, epsilon, [&](std::int64_t k) {
        return binary_entropy(transition_probability(kind, params, k)).value();
    });
    return Bits(1.0 - avg_entropy);
}

std::vector<BscCapacityPoint> capacity_sweep(ChannelKind kind, const ChannelParams& base,
                                             std::span<const double> a_grid, double epsilon) {
    validate(base);
    if (a_grid.empty()) {
        throw std::domain_error("capacity_sweep: grid must be nonempty");
    }
    std::vector<BscCapacityPoint> points;
    points.reserve(a_grid.size());
    for (const double a : a_grid) {
        BscCapacityPoint point;
        point.a = a;
        ChannelParams params = base;
        params.a = a;
        try {
            validate(params);
            point.c_informed = capacity_informed(kind, params, epsilon).value();
            point.c_noninformed = capacity_noninformed(kind, params, epsilon).value();
            if (point.c_noninformed > point.c_informed + 1e-12) {
                throw std::runtime_error("informed/non-informed ordering violated");
            }
        } catch (const std::exception& e) {
            point.c_informed = std::numeric_limits<double>::quiet_NaN();
            point.c_noninformed = std::numeric_limits<double>::quiet_NaN();
            point.error = e.what();
        }
        points.push_back(std::move(point));
    }
    return points;
}

std::optional<double> equal_performance_shift(ChannelKind kind, const ChannelParams& base,
                                              double a_noninformed, double epsilon) {
    validate(base);
    if (!(std::isfinite(a_noninformed) && a_noninformed > 0.0)) {
        throw std::domain_error("equal_performance_shift: a_noninformed must be positive");
    }
    ChannelParams params = base;
    params.a = a_noninformed;
    const double target = capacity_noninformed(kind, params, epsilon).value();
    const auto informed_at = [&](double a) {
        ChannelParams p = base;
        p.a = a;
        return capacity_informed(kind, p, epsilon).value();
    };

    double lo = a_noninformed;
    double f_lo = informed_at(lo);
    // Truncated sums separate even coinciding curves by up to about epsilon;
    // below that the gap is not resolvable and the curves count as equal.
    if (f_lo <= target + std::max(1e-15, 10.0 * epsilon)) {
        return a_noninformed;
    }

    // Expand upward until the informed curve drops through the target. If it
    // starts rising first, the monotone region is exhausted and the target is
    // unreachable.
    double hi = lo;
    double f_hi = f_lo;
    for (;;) {
        const double next = hi * 2.0;
        const double f_next = informed_at(next);
        if (f_next >= f_hi) {
            return std::nullopt;
        }
        lo = hi;
        f_lo = f_hi;
        hi = next;
        f_hi = f_next;
        if (f_hi <= target) {
            break;
        }
        if (hi > kShiftMaxA) {
            return std::nullopt;
        }
    }

    // Contract check on the bracket before bisecting.
    double prev = f_lo;
    for (int i = 1; i <= 8; ++i) {
        const double a = lo + (hi - lo) * static_cast<double>(i) / 9.0;
        const double f = informed_at(a);
        if (f > prev + 1e-12) {
            throw std::runtime_error(
                "equal_performance_shift: informed capacity not monotone on the bracket");
        }
        prev = f;
    }

    while ((hi - lo) > kShiftTolerance * lo) {
        const double mid = 0.5 * (lo + hi);
        if (informed_at(mid) >= target) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace pbsc
