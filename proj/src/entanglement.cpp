// Copyright (c) 2026 The pqcrand developers
// SPDX-License-Identifier: Apache-2.0

#include "pqcrand/entanglement.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "pqcrand/numeric.hpp"
#include "pqcrand/parallel.hpp"

namespace pqcrand {

std::vector<std::vector<int>> subsets_of_size(int n, int m) {
    if (m < 0 || m > n) throw std::invalid_argument("subsets_of_size: need 0 <= m <= n");
    std::vector<std::vector<int>> subsets;
    subsets.reserve(binomial_coefficient(n, m));
    std::vector<int> current(m);
    for (int i = 0; i < m; ++i) current[i] = i;
    while (true) {
        subsets.push_back(current);
        int i = m - 1;
        while (i >= 0 && current[i] == n - m + i) --i;
        if (i < 0) break;
        ++current[i];
        for (int j = i + 1; j < m; ++j) current[j] = current[j - 1] + 1;
    }
    return subsets;
}

namespace {

void check_subset(int n_qubits, std::span<const int> subset) {
    if (subset.empty()) throw std::invalid_argument("reduced state: empty qubit subset");
    int prev = -1;
    for (int q : subset) {
        if (q < 0 || q >= n_qubits) {
            throw std::invalid_argument("reduced state: qubit index " + std::to_string(q) +
                                        " out of range");
        }
        if (q <= prev) {
            throw std::invalid_argument("reduced state: subset must be sorted and unique");
        }
        prev = q;
    }
}

// Amplitude-index offsets of every subset bit pattern (qubit 0 = MSB).
std::vector<std::size_t> subset_offsets(int n_qubits, std::span<const int> subset) {
    const int m = static_cast<int>(subset.size());
    std::vector<std::size_t> bit(m);
    for (int j = 0; j < m; ++j) bit[j] = std::size_t{1} << (n_qubits - 1 - subset[j]);
    const std::size_t count = std::size_t{1} << m;
    std::vector<std::size_t> offsets(count, 0);
    for (std::size_t a = 0; a < count; ++a) {
        for (int j = 0; j < m; ++j) {
            if (a & (std::size_t{1} << (m - 1 - j))) offsets[a] |= bit[j];
        }
    }
    return offsets;
}

std::vector<int> complement_of(int n_qubits, std::span<const int> subset) {
    std::vector<int> rest;
    rest.reserve(n_qubits - subset.size());
    std::size_t k = 0;
    for (int q = 0; q < n_qubits; ++q) {
        if (k < subset.size() && subset[k] == q) {
            ++k;
        } else {
            rest.push_back(q);
        }
    }
    return rest;
}

}  // namespace

double reduced_purity(const StateVector& state, std::span<const int> subset) {
    const int n = state.n_qubits();
    check_subset(n, subset);

    const int m = static_cast<int>(subset.size());
    const std::size_t sub_dim = std::size_t{1} << m;
    const auto sub_off = subset_offsets(n, subset);
    const auto env = complement_of(n, subset);
    const auto env_off = subset_offsets(n, env);

    const auto amps = state.amplitudes();
    std::vector<Amplitude> rho(sub_dim * sub_dim, Amplitude{0.0, 0.0});
    std::vector<Amplitude> column(sub_dim);

    for (const std::size_t e : env_off) {
        for (std::size_t a = 0; a < sub_dim; ++a) column[a] = amps[sub_off[a] | e];
        for (std::size_t a = 0; a < sub_dim; ++a) {
            const double ar = column[a].real(), ai = column[a].imag();
            for (std::size_t b = 0; b < sub_dim; ++b) {
                // column[a] * conj(column[b])
                const double br = column[b].real(), bi = column[b].imag();
                Amplitude& r = rho[a * sub_dim + b];
                r = {r.real() + ar * br + ai * bi, r.imag() + ai * br - ar * bi};
            }
        }
    }

    double purity = 0.0;
    for (const Amplitude& r : rho) {
        purity += r.real() * r.real() + r.imag() * r.imag();
    }
    return purity;
}

std::vector<SubsetPurity> subset_purities(const StateVector& state, int m) {
    std::vector<SubsetPurity> out;
    for (auto& subset : subsets_of_size(state.n_qubits(), m)) {
        const double p = reduced_purity(state, subset);
        out.push_back({std::move(subset), p});
    }
    return out;
}

namespace {

void check_scott_order(int n_qubits, int m) {
    if (m < 1 || m > n_qubits / 2) {
        throw std::invalid_argument("scott_q: order m must satisfy 1 <= m <= floor(n/2), got m=" +
                                    std::to_string(m) + " for n=" + std::to_string(n_qubits));
    }
}

double scott_q_over(const StateVector& state,
                    const std::vector<std::vector<int>>& subsets, int m) {
    std::vector<double> purities(subsets.size());
    for (std::size_t i = 0; i < subsets.size(); ++i) {
        purities[i] = reduced_purity(state, subsets[i]);
    }
    const double mean_purity = pairwise_sum(purities) / static_cast<double>(purities.size());
    const double scale = std::exp2(m) / (std::exp2(m) - 1.0);
    return scale * (1.0 - mean_purity);
}

}  // namespace

double scott_q(const StateVector& state, int m) {
    check_scott_order(state.n_qubits(), m);
    return scott_q_over(state, subsets_of_size(state.n_qubits(), m), m);
}

double cue_mean(int n_qubits, int m) {
    check_scott_order(n_qubits, m);
    const double d = std::exp2(n_qubits);
    return (d - std::exp2(m)) / (d + 1.0);
}

double cue_std_q1(int n_qubits) {
    if (n_qubits < 2) throw std::invalid_argument("cue_std_q1: need n >= 2");
    const double d = std::exp2(n_qubits);
    const double first = 6.0 * (d - 4.0) / ((d + 3.0) * (d + 2.0) * (d + 1.0) * n_qubits);
    const double second = 18.0 * d / ((d + 3.0) * (d + 2.0) * (d + 1.0) * (d + 1.0));
    return std::sqrt(first + second);
}

EnsembleEntanglementStats ensemble_stats(const CircuitSpec& spec, int m,
                                         std::uint64_t n_samples,
                                         const ParameterSampler& sampler,
                                         unsigned workers) {
    if (n_samples < 2) throw std::invalid_argument("ensemble_stats: need n_samples >= 2");
    check_scott_order(spec.n_qubits(), m);

    const GateSequence sequence = compile(spec);
    const auto subsets = subsets_of_size(spec.n_qubits(), m);
    std::vector<double> values(n_samples);

    parallel_for(n_samples, workers, [&](std::size_t i) {
        std::vector<double> params(sequence.n_params);
        sampler.fill(i, params);
        const StateVector state = run_circuit(sequence, params, spec.n_qubits());
        values[i] = scott_q_over(state, subsets, m);
    });

    const MeanStd stats = mean_and_population_std(values);
    EnsembleEntanglementStats out;
    out.m = m;
    out.n_samples = n_samples;
    out.mean = stats.mean;
    out.std_dev = stats.std_dev;
    out.cue_mean = cue_mean(spec.n_qubits(), m);
    if (m == 1) out.cue_std = cue_std_q1(spec.n_qubits());
    return out;
}

}  // namespace pqcrand
