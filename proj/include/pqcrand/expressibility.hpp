// Copyright (c) 2026 The pqcrand developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "pqcrand/circuit.hpp"
#include "pqcrand/sampling.hpp"

namespace pqcrand {

/// t-th moment of the fidelity of two independent Haar-random pure states in
/// dimension d: t! (d-1)! / (t+d-1)!, from the density (d-1)(1-F)^(d-2).
double haar_fidelity_moment(std::size_t dim, int t);

/// Binned fidelity distribution over [0, 1] with the matching analytical
/// Haar bin masses. Haar masses are exact CDF differences,
///   mass_i = (1 - lo_i)^(d-1) - (1 - hi_i)^(d-1),
/// kept alongside their logarithms so that bins whose mass underflows the
/// double range (large d, upper bins) still have a finite KL denominator.
class FidelityHistogram {
public:
    FidelityHistogram(std::span<const double> fidelities, std::size_t dim, int n_bins);

    int n_bins() const noexcept { return n_bins_; }
    std::size_t dim() const noexcept { return dim_; }
    std::uint64_t n_fidelities() const noexcept { return n_fidelities_; }
    std::span<const std::uint64_t> counts() const noexcept { return counts_; }
    std::span<const double> empirical_mass() const noexcept { return empirical_mass_; }
    std::span<const double> haar_mass() const noexcept { return haar_mass_; }
    std::span<const double> haar_log_mass() const noexcept { return haar_log_mass_; }

    double bin_lo(int bin) const noexcept { return static_cast<double>(bin) / n_bins_; }
    double bin_hi(int bin) const noexcept { return static_cast<double>(bin + 1) / n_bins_; }

    /// D_KL(empirical || Haar) in nats; empty bins contribute zero.
    double kl_nats() const;

private:
    int n_bins_;
    std::size_t dim_;
    std::uint64_t n_fidelities_;
    std::vector<std::uint64_t> counts_;
    std::vector<double> empirical_mass_;
    std::vector<double> haar_mass_;
    std::vector<double> haar_log_mass_;
};

/// Draws n_states parameter vectors, runs the circuit for each and pairs the
/// output states disjointly: fidelity j compares states 2j and 2j+1, giving
/// n_states/2 fidelities. Sample i always uses the sampler's stream i, so the
/// result is identical for any worker count.
std::vector<double> sample_fidelities(const CircuitSpec& spec, std::uint64_t n_states,
                                      const ParameterSampler& sampler,
                                      unsigned workers = 1);

/// KL divergence of the fidelity sample from the analytical Haar
/// distribution, in nats. Smaller means the circuit's states are spread more
/// uniformly over the Hilbert space.
double kl_expressibility(std::span<const double> fidelities, std::size_t dim, int n_bins);

struct ExpressibilityResult {
    CircuitSpec spec;
    double kl_nats = 0.0;
    std::uint64_t n_states = 0;
    std::uint64_t n_fidelities = 0;
    std::uint64_t seed = 0;
};

ExpressibilityResult compute_expressibility(const CircuitSpec& spec, std::uint64_t n_states,
                                            int n_bins, const ParameterSampler& sampler,
                                            std::uint64_t seed_label, unsigned workers = 1);

/// Frame-potential deviation E[F^t] - E_Haar[F^t] over sampled state pairs.
/// Zero (up to sampling noise) iff the circuit ensemble matches a t-design in
/// this metric; small negative values can occur from noise alone.
double tdesign_deviation(const CircuitSpec& spec, int t, std::uint64_t n_states,
                         const ParameterSampler& sampler, unsigned workers = 1);

}  // namespace pqcrand
