#pragma once

#include <span>
#include <string>
#include <vector>

#include "pbsc/channel.hpp"

namespace pbsc {

enum class SweepAxis { poisson_mean, snr_db };

/// One point of a BER curve. `x` is the swept quantity (Poisson mean a, or
/// SNR in dB). On a per-point failure `ber` is NaN and `error` names the
/// problem; the rest of the sweep is unaffected.
struct BerCurvePoint {
    double x = 0.0;
    double ber = 0.0;
    std::string error;
    bool ok() const noexcept { return error.empty(); }
};

/// Average bit error rate sum_k P(k) q(k) over the certified Poisson window.
/// The truncation contributes at most epsilon/2 absolute error (every
/// dropped term is a probability <= 1/2).
Probability ber_analytic(ChannelKind kind, const ChannelParams& params,
                         double epsilon = kDefaultTailEpsilon);

/// a -> infinity limit: Channel I concentrates at the average variance,
/// Q(sqrt(eb / (2*(sigma_g2 + sigma_f2)))); Channel II saturates at 1/2.
Probability ber_limit_large_a(ChannelKind kind, const ChannelParams& params);

/// a -> 0 closed forms, evaluated verbatim:
///   Channel I:  e^{-a} Q(sqrt(eb/(2 sigma_g2))) + a/2
///   Channel II: (1-a) Q(sqrt(eb/(2 sigma_g2))) + a Q(sqrt(eb/(2 (sigma_g2+sigma_f2))))
/// Only meaningful for a << 1 (not enforced); outside that band the forms can
/// leave [0, 1] and are clamped to the probability range.
Probability ber_limit_small_a(ChannelKind kind, const ChannelParams& params);

/// sigma_g2 implied by an SNR point: snr_db = 10*log10(eb / sigma_g2).
double sigma_g2_from_snr_db(double eb, double snr_db);

/// BER at every grid value, in grid order. Axis poisson_mean sweeps `a`;
/// axis snr_db sweeps sigma_g2 through the SNR definition above with all
/// other parameters fixed.
std::vector<BerCurvePoint> ber_sweep(ChannelKind kind, const ChannelParams& base,
                                     SweepAxis axis, std::span<const double> grid,
                                     double epsilon = kDefaultTailEpsilon);

}  // namespace pbsc
