// Copyright (c) 2026 The pqcrand developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

namespace pqcrand {

/// Pairwise (cascade) summation. Deterministic for a fixed element order and
/// accurate to O(log n) rounding growth, which keeps parallel aggregations
/// reproducible once per-item results are stored in index order.
double pairwise_sum(std::span<const double> values);

struct MeanStd {
    double mean = 0.0;
    double std_dev = 0.0;  // population form (divide by N)
};

MeanStd mean_and_population_std(std::span<const double> values);

/// Standard error of the sample mean.
double standard_error(const MeanStd& stats, std::size_t n);

std::uint64_t binomial_coefficient(int n, int k);

}  // namespace pqcrand
