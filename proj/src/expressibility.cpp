// Copyright (c) 2026 The pqcrand developers
// SPDX-License-Identifier: Apache-2.0

#include "pqcrand/expressibility.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "pqcrand/numeric.hpp"
#include "pqcrand/parallel.hpp"

namespace pqcrand {

double haar_fidelity_moment(std::size_t dim, int t) {
    if (dim < 2) throw std::invalid_argument("haar_fidelity_moment: need dim >= 2");
    if (t < 1) throw std::invalid_argument("haar_fidelity_moment: need t >= 1");
    // t! (d-1)! / (t+d-1)! = prod_{k=1..t} k / (d-1+k)
    double moment = 1.0;
    for (int k = 1; k <= t; ++k) {
        moment *= static_cast<double>(k) / (static_cast<double>(dim) - 1.0 + k);
    }
    return moment;
}

FidelityHistogram::FidelityHistogram(std::span<const double> fidelities, std::size_t dim,
                                     int n_bins)
    : n_bins_(n_bins), dim_(dim), n_fidelities_(fidelities.size()) {
    if (n_bins < 2) throw std::invalid_argument("fidelity histogram: need n_bins >= 2");
    if (dim < 2) throw std::invalid_argument("fidelity histogram: need dim >= 2");
    if (fidelities.empty()) throw std::invalid_argument("fidelity histogram: no fidelities");

    counts_.assign(n_bins, 0);
    for (const double f : fidelities) {
        if (!(f >= -1e-9) || !(f <= 1.0 + 1e-9)) {
            throw std::invalid_argument("fidelity histogram: value " + std::to_string(f) +
                                        " outside [0, 1]");
        }
        const int bin = std::clamp(static_cast<int>(f * n_bins), 0, n_bins - 1);
        ++counts_[bin];
    }

    empirical_mass_.resize(n_bins);
    const double inv_n = 1.0 / static_cast<double>(n_fidelities_);
    for (int i = 0; i < n_bins; ++i) {
        empirical_mass_[i] = static_cast<double>(counts_[i]) * inv_n;
    }

    // Survival function S(x) = (1-x)^(d-1) at each bin edge; masses telescope
    // so they sum to exactly S(0) - S(1) = 1.
    const double power = static_cast<double>(dim) - 1.0;
    std::vector<double> survival(n_bins + 1);
    for (int i = 0; i <= n_bins; ++i) {
        survival[i] = std::pow(1.0 - static_cast<double>(i) / n_bins, power);
    }
    haar_mass_.resize(n_bins);
    haar_log_mass_.resize(n_bins);
    for (int i = 0; i < n_bins; ++i) {
        haar_mass_[i] = survival[i] - survival[i + 1];
        // log(mass) = log S(lo) + log1p(-S(hi)/S(lo)), stable when S(x)
        // underflows: the ratio is exp of a log difference.
        const double log_lo = power * std::log1p(-bin_lo(i));
        const double log_hi = i + 1 == n_bins
                                  ? -std::numeric_limits<double>::infinity()
                                  : power * std::log1p(-bin_hi(i));
        haar_log_mass_[i] = log_lo + std::log1p(-std::exp(log_hi - log_lo));
    }
}

double FidelityHistogram::kl_nats() const {
    std::vector<double> terms;
    terms.reserve(n_bins_);
    for (int i = 0; i < n_bins_; ++i) {
        if (counts_[i] == 0) continue;  // p log p -> 0
        const double p = empirical_mass_[i];
        terms.push_back(p * (std::log(p) - haar_log_mass_[i]));
    }
    return pairwise_sum(terms);
}

std::vector<double> sample_fidelities(const CircuitSpec& spec, std::uint64_t n_states,
                                      const ParameterSampler& sampler, unsigned workers) {
    if (n_states < 2 || n_states % 2 != 0) {
        throw std::invalid_argument("sample_fidelities: n_states must be even and >= 2");
    }
    const GateSequence sequence = compile(spec);
    const std::uint64_t n_pairs = n_states / 2;
    std::vector<double> fidelities(n_pairs);

    parallel_for(n_pairs, workers, [&](std::size_t pair) {
        std::vector<double> params(sequence.n_params);
        sampler.fill(2 * pair, params);
        const StateVector first = run_circuit(sequence, params, spec.n_qubits());
        sampler.fill(2 * pair + 1, params);
        const StateVector second = run_circuit(sequence, params, spec.n_qubits());
        fidelities[pair] = fidelity(first, second);
    });
    return fidelities;
}

double kl_expressibility(std::span<const double> fidelities, std::size_t dim, int n_bins) {
    return FidelityHistogram(fidelities, dim, n_bins).kl_nats();
}

ExpressibilityResult compute_expressibility(const CircuitSpec& spec, std::uint64_t n_states,
                                            int n_bins, const ParameterSampler& sampler,
                                            std::uint64_t seed_label, unsigned workers) {
    const auto fidelities = sample_fidelities(spec, n_states, sampler, workers);
    ExpressibilityResult result{spec, 0.0, n_states, fidelities.size(), seed_label};
    result.kl_nats = kl_expressibility(fidelities, spec.dim(), n_bins);
    return result;
}

double tdesign_deviation(const CircuitSpec& spec, int t, std::uint64_t n_states,
                         const ParameterSampler& sampler, unsigned workers) {
    if (t < 1) throw std::invalid_argument("tdesign_deviation: need t >= 1");
    std::vector<double> fidelities = sample_fidelities(spec, n_states, sampler, workers);
    for (double& f : fidelities) f = std::pow(f, t);
    const double mean = pairwise_sum(fidelities) / static_cast<double>(fidelities.size());
    return mean - haar_fidelity_moment(spec.dim(), t);
}

}  // namespace pqcrand
