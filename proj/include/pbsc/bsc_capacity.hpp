#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pbsc/ber.hpp"

namespace pbsc {

struct BscCapacityPoint {
    double a = 0.0;
    double c_informed = 0.0;
    double c_noninformed = 0.0;
    std::string error;
    bool ok() const noexcept { return error.empty(); }
};

/// Capacity when nobody observes the impulse count: 1 - H(BER). In [0, 1].
Bits capacity_noninformed(ChannelKind kind, const ChannelParams& params,
                          double epsilon = kDefaultTailEpsilon);

/// Capacity when the receiver observes k per symbol:
/// 1 - sum_k P(k) H(q(k)) over the certified window. In [0, 1]; the
/// truncation contributes at most epsilon bits (tail mass times max H = 1).
Bits capacity_informed(ChannelKind kind, const ChannelParams& params,
                       double epsilon = kDefaultTailEpsilon);

/// Both capacities per grid value of a, in grid order.
std::vector<BscCapacityPoint> capacity_sweep(ChannelKind kind, const ChannelParams& base,
                                             std::span<const double> a_grid,
                                             double epsilon = kDefaultTailEpsilon);

/// The a at which the informed capacity equals the non-informed capacity at
/// a_noninformed, located by bisection on the monotone decreasing stretch of
/// the informed curve starting at a_noninformed (stop at |delta a| / a < 1e-6).
///
/// Returns a_noninformed itself when the two curves already coincide there
/// (sigma_f2 = 0, or a vanishing informed/non-informed gap). Returns nullopt
/// when the informed curve stops decreasing before reaching the target, i.e.
/// the target capacity is not attainable on the monotone region. Throws
/// std::runtime_error if the bracketed stretch turns out not to be monotone.
std::optional<double> equal_performance_shift(ChannelKind kind, const ChannelParams& base,
                                              double a_noninformed,
                                              double epsilon = kDefaultTailEpsilon);

}  // namespace pbsc
