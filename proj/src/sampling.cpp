// Copyright (c) 2026 The pqcrand developers
// SPDX-License-Identifier: Apache-2.0

#include "pqcrand/sampling.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace pqcrand {

double RandomStream::gaussian() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    const double u1 = 1.0 - uniform();  // (0, 1], keeps the log finite
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
}

UniformParameterSampler::UniformParameterSampler(std::uint64_t stream_seed, double lo,
                                                 double hi)
    : stream_seed_(stream_seed), lo_(lo), hi_(hi) {
    if (!(lo < hi)) {
        throw std::invalid_argument("parameter interval: need lo < hi");
    }
}

void UniformParameterSampler::fill(std::uint64_t sample_index, std::span<double> out) const {
    RandomStream stream(combine_seed(stream_seed_, sample_index));
    for (double& x : out) x = stream.uniform(lo_, hi_);
}

}  // namespace pqcrand
