#pragma once

#include <cstdint>

#include "pbsc/numerics.hpp"

namespace pbsc::detail {

/// sum_{k=0}^{k_max(epsilon)} pmf(k; a) * f(k) over the certified window,
/// accumulated in compensated long double.
template <class F>
double poisson_weighted_sum(double a, double epsilon, F&& f) {
    const PoissonTruncation window = truncate_poisson(a, epsilon);
    long double sum = 0.0L;
    long double comp = 0.0L;
    for (std::int64_t k = 0; k <= window.k_max; ++k) {
        const long double term = static_cast<long double>(poisson_pmf(k, a).value()) *
                                 static_cast<long double>(f(k));
        const long double y = term - comp;
        const long double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return static_cast<double>(sum);
}

}  // namespace pbsc::detail
