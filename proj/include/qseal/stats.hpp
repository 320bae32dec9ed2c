// Small statistical helpers shared by the harnesses and tests.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace qseal::stats {

// Half-width of the 95% normal-approximation binomial confidence interval.
inline double binomial_ci95(double p_hat, std::size_t trials) {
    if (trials == 0) return 1.0;
    return 1.96 * std::sqrt(std::max(p_hat * (1.0 - p_hat), 0.0) / static_cast<double>(trials));
}

// 3-sigma binomial slack around probability p over `trials` draws.
inline double three_sigma(double p, std::size_t trials) {
    if (trials == 0) return 1.0;
    return 3.0 * std::sqrt(std::max(p * (1.0 - p), 0.0) / static_cast<double>(trials));
}

inline bool within_three_sigma(double observed, double expected, std::size_t trials) {
    return std::abs(observed - expected) <= three_sigma(expected, trials);
}

// Two-sided Kolmogorov-Smirnov statistic against U[lo, hi].
inline double ks_statistic_uniform(std::vector<double> samples, double lo, double hi) {
    if (samples.empty()) throw std::invalid_argument("ks_statistic_uniform: no samples");
    if (!(hi > lo)) throw std::invalid_argument("ks_statistic_uniform: empty interval");
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double cdf = (samples[i] - lo) / (hi - lo);
        d = std::max(d, std::abs(cdf - static_cast<double>(i) / n));
        d = std::max(d, std::abs(cdf - static_cast<double>(i + 1) / n));
    }
    return d;
}

// Critical KS value at roughly the 3-sigma level (P(sqrt(n) D > 1.95) ~ 1e-3).
inline double ks_threshold(std::size_t n) { return 1.95 / std::sqrt(static_cast<double>(n)); }

// Chi-square uniformity statistic over equiprobable categories.
inline double chi_square_uniform(const std::vector<std::size_t>& counts) {
    if (counts.empty()) throw std::invalid_argument("chi_square_uniform: no categories");
    std::size_t total = 0;
    for (std::size_t c : counts) total += c;
    const double expected = static_cast<double>(total) / static_cast<double>(counts.size());
    double stat = 0.0;
    for (std::size_t c : counts) {
        const double diff = static_cast<double>(c) - expected;
        stat += diff * diff / expected;
    }
    return stat;
}

// 3-sigma acceptance threshold for a chi-square statistic with df degrees of
// freedom (normal approximation: mean df, variance 2 df).
inline double chi_square_threshold(std::size_t df) {
    const double d = static_cast<double>(df);
    return d + 3.0 * std::sqrt(2.0 * d);
}

}  // namespace qseal::stats
