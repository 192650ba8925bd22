#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pbsc/channel.hpp"

namespace pbsc {

/// Parameters of the unquantized Gaussian-input channel. `psd` is the input
/// power spectral density constraint (same unit family as the variances);
/// the embedded ChannelParams supply sigma_g2, sigma_f2 and a (eb is unused
/// here). Default psd matches the default eb so that psd over the average
/// total variance is about 10.
struct AwgnParams {
    double psd = 7.28e-3;
    ChannelParams channel{};
};

/// Throws std::domain_error unless psd > 0 (finite) and the embedded channel
/// parameters validate.
void validate(const AwgnParams& params);

/// Which side observes the per-symbol impulse count. Written (tx, rx) with
/// "+" for informed, e.g. "+-" = informed transmitter, uninformed receiver.
struct KnowledgeScenario {
    bool transmitter_informed = false;
    bool receiver_informed = false;

    friend bool operator==(KnowledgeScenario, KnowledgeScenario) = default;
};

/// All four scenarios in display order: (+,+), (+,-), (-,+), (-,-).
std::array<KnowledgeScenario, 4> all_scenarios();

/// "++", "+-", "-+" or "--".
std::string to_string(KnowledgeScenario scenario);
std::optional<KnowledgeScenario> scenario_from_string(std::string_view text);

/// Gaussian-input capacity in bits per transmission, with h(v) the Gaussian
/// differential entropy, s = psd, sigma_k^2 = sigma_g2 + k*sigma_f2/a and
/// sigma_av^2 = sigma_g2 + sigma_f2:
///
///   C(+,+) = h(s + sigma_av^2) - sum_k P(k) h(sigma_k^2)
///   C(+,-) = h(s + sigma_av^2) - h(sigma_av^2)
///   C(-,+) = sum_k P(k) [h(s + sigma_k^2) - h(sigma_k^2)]
///   C(-,-) = sum_k P(k) h(s + sigma_k^2) - h(sigma_av^2)
///
/// An informed transmitter shapes its input to make the output entropy
/// h(s + sigma_av^2); an uninformed one transmits at full psd so the output
/// entropy is averaged over k. Everything is a difference of differential
/// entropies, so the 2*pi*e convention cancels out of every value.
///
/// Nonnegative whenever psd >= sigma_f2 (in particular at the defaults); the
/// (-,-) form can go negative for psd far below sigma_f2 because its averaged
/// output entropy undercuts the true mixture entropy. Values are returned
/// verbatim, keeping the four-scenario decomposition identities exact.
Bits awgn_capacity(KnowledgeScenario scenario, const AwgnParams& params,
                   double epsilon = kDefaultTailEpsilon);

/// Common a -> infinity limit of all four scenarios:
/// h(psd + sigma_av^2) - h(sigma_av^2) = 0.5*log2(1 + psd/sigma_av^2).
Bits capacity_limit_large_a(const AwgnParams& params);

/// C(*,+) - C(*,-) = h(sigma_av^2) - sum_k P(k) h(sigma_k^2). Nonnegative
/// (Jensen on the concave log); identical for both transmitter states.
Bits receiver_knowledge_gap(const AwgnParams& params, double epsilon = kDefaultTailEpsilon);

/// C(+,*) - C(-,*) = h(psd + sigma_av^2) - sum_k P(k) h(psd + sigma_k^2).
/// Nonnegative, and never exceeds the receiver gap: adding psd inside both
/// entropies flattens the log and shrinks the Jensen spread.
Bits transmitter_knowledge_gap(const AwgnParams& params, double epsilon = kDefaultTailEpsilon);

struct AwgnSweepPoint {
    double a = 0.0;
    KnowledgeScenario scenario;
    double capacity = 0.0;
    std::string error;
    bool ok() const noexcept { return error.empty(); }
};

/// One value per (grid a, scenario), grid-major, in the given orders.
std::vector<AwgnSweepPoint> awgn_sweep(const AwgnParams& base, std::span<const double> a_grid,
                                       std::span<const KnowledgeScenario> scenarios,
                                       double epsilon = kDefaultTailEpsilon);

}  // namespace pbsc
