// Copyright (c) 2026 The pqcrand developers
// SPDX-License-Identifier: Apache-2.0

#include "pqcrand/numeric.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace pqcrand {

namespace {

constexpr std::size_t kLeafSize = 32;

double pairwise_sum_impl(const double* data, std::size_t count) {
    if (count <= kLeafSize) {
        double acc = 0.0;
        for (std::size_t i = 0; i < count; ++i) acc += data[i];
        return acc;
    }
    const std::size_t half = count / 2;
    return pairwise_sum_impl(data, half) + pairwise_sum_impl(data + half, count - half);
}

}  // namespace

double pairwise_sum(std::span<const double> values) {
    return pairwise_sum_impl(values.data(), values.size());
}

MeanStd mean_and_population_std(std::span<const double> values) {
    if (values.empty()) throw std::invalid_argument("mean of empty range");
    const double n = static_cast<double>(values.size());
    const double mean = pairwise_sum(values) / n;
    std::vector<double> sq(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double d = values[i] - mean;
        sq[i] = d * d;
    }
    const double var = pairwise_sum(sq) / n;
    return {mean, std::sqrt(var)};
}

double standard_error(const MeanStd& stats, std::size_t n) {
    return stats.std_dev / std::sqrt(static_cast<double>(n));
}

std::uint64_t binomial_coefficient(int n, int k) {
    if (k < 0 || n < 0 || k > n) throw std::invalid_argument("binomial: need 0 <= k <= n");
    if (k > n - k) k = n - k;
    std::uint64_t result = 1;
    for (int i = 1; i <= k; ++i) {
        result = result * static_cast<std::uint64_t>(n - k + i) /
                 static_cast<std::uint64_t>(i);
    }
    return result;
}

}  // namespace pqcrand
