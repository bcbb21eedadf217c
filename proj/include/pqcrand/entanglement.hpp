// Copyright (c) 2026 The pqcrand developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pqcrand/circuit.hpp"
#include "pqcrand/sampling.hpp"
#include "pqcrand/state_vector.hpp"

namespace pqcrand {

/// Tr(rho_S^2) of one qubit subset, kept with its subset for diagnostics.
struct SubsetPurity {
    std::vector<int> subset;
    double purity = 0.0;
};

/// All size-m subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> subsets_of_size(int n, int m);

/// Purity Tr(rho_S^2) of the reduced state on `subset` (sorted, unique qubit
/// indices). Accumulates rho_S by bit-indexed gathering over environment
/// patterns; memory stays O(4^m).
double reduced_purity(const StateVector& state, std::span<const int> subset);

std::vector<SubsetPurity> subset_purities(const StateVector& state, int m);

/// Multipartite entanglement of order m:
///   Q_m = 2^m/(2^m - 1) * (1 - mean of Tr(rho_S^2) over all size-m subsets)
/// Zero on product states, 1 at the maximum. Requires m <= floor(n/2); larger
/// orders repeat the complementary bipartitions. m = 1 is the Meyer-Wallach
/// measure.
double scott_q(const StateVector& state, int m);

/// Mean of Q_m over uniformly random pure states: (2^n - 2^m) / (2^n + 1).
double cue_mean(int n_qubits, int m);

/// Standard deviation of Q_1 over uniformly random pure states; strictly
/// decreasing in n from n = 3 on (concentration of measure).
double cue_std_q1(int n_qubits);

/// Sample mean and population standard deviation of Q_m over a parameter
/// ensemble, with the random-state reference values alongside.
struct EnsembleEntanglementStats {
    int m = 1;
    std::uint64_t n_samples = 0;
    double mean = 0.0;
    double std_dev = 0.0;
    double cue_mean = 0.0;
    std::optional<double> cue_std;  // m == 1 only
};

/// Draws n_samples parameter vectors, runs the circuit and averages Q_m.
/// Deterministic given the sampler's seed for any worker count: sample i
/// always uses the sampler's stream i and results reduce in index order.
EnsembleEntanglementStats ensemble_stats(const CircuitSpec& spec, int m,
                                         std::uint64_t n_samples,
                                         const ParameterSampler& sampler,
                                         unsigned workers = 1);

}  // namespace pqcrand
