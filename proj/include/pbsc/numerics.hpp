#pragma once

#include <cstdint>

namespace pbsc {

/// A probability value, checked to lie in [0, 1] at construction.
/// Out-of-range or NaN input is a hard error (std::domain_error).
class Probability {
public:
    explicit Probability(double value);
    double value() const noexcept { return value_; }

private:
    double value_;
};

/// An entropy or capacity value in bits per transmission. Finite by
/// construction; may be negative (differential entropies of small variances).
class Bits {
public:
    explicit Bits(double value);
    double value() const noexcept { return value_; }

private:
    double value_;
};

/// Finite summation window [0, k_max] for a Poisson(a) count.
/// Guarantee: sum_{k=0}^{k_max} pmf(k; a) >= 1 - tail_bound.
struct PoissonTruncation {
    double a = 1.0;
    std::int64_t k_max = 0;
    double tail_bound = 0.0;
};

/// Default tail mass for truncated Poisson sums. Far below the resolution of
/// any BER or capacity value produced here; callers may override per call.
inline constexpr double kDefaultTailEpsilon = 1e-12;

/// Upper tail of the standard normal distribution, P(X > x).
///
/// Evaluated as erfc(x / sqrt(2)) / 2 through the C library erfc, a rational
/// approximation accurate to a few ulp. Composed relative error is below
/// 1e-12 for x in [-8, 8] (checked against quadrature in the test suite).
/// For x beyond ~37.5 the result underflows and clamps to 0; the absolute
/// error there is under 1e-300.
Probability q_function(double x);

/// Binary entropy -p*log2(p) - (1-p)*log2(1-p), with H(0) = H(1) = 0 by
/// continuity.
Bits binary_entropy(Probability p);

/// Differential entropy of a Gaussian: 0.5 * log2(2*pi*e*variance).
/// Requires variance > 0.
Bits gaussian_diff_entropy(double variance);

/// Poisson pmf a^k e^{-a} / k!, evaluated in log space so large k and large a
/// neither overflow nor lose the leading digits. Requires a > 0, k >= 0.
Probability poisson_pmf(std::int64_t k, double a);

/// Smallest k_max whose cumulative Poisson mass reaches 1 - epsilon, together
/// with the actually remaining tail mass. The cumulative sum is accumulated
/// in compensated long double arithmetic; epsilon below the accumulator
/// resolution (~1e-18) terminates at the point where the pmf underflows.
PoissonTruncation truncate_poisson(double a, double epsilon);

}  // namespace pbsc
