// Copyright (c) 2026 The pqcrand developers
// SPDX-License-Identifier: Apache-2.0

#include "pqcrand/haar.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace pqcrand {

HaarSampler::HaarSampler(int n_qubits, std::uint64_t seed)
    : n_qubits_(n_qubits), seed_(seed), stream_(seed) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw std::length_error("haar sampler: n_qubits out of range");
    }
}

StateVector HaarSampler::sample() {
    std::vector<Amplitude> amps(dim());
    double norm_sqr = 0.0;
    for (Amplitude& a : amps) {
        const double re = stream_.gaussian();
        const double im = stream_.gaussian();
        a = {re, im};
        norm_sqr += re * re + im * im;
    }
    const double inv = 1.0 / std::sqrt(norm_sqr);
    for (Amplitude& a : amps) a *= inv;
    return StateVector(n_qubits_, std::move(amps));
}

std::complex<double> ComplexMatrix::trace() const {
    std::complex<double> sum{0.0, 0.0};
    for (std::size_t i = 0; i < dim; ++i) sum += at(i, i);
    return sum;
}

double ComplexMatrix::max_hermiticity_error() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = i; j < dim; ++j) {
            const auto diff = at(i, j) - std::conj(at(j, i));
            worst = std::max(worst, std::abs(diff));
        }
    }
    return worst;
}

double matrix_purity(const ComplexMatrix& matrix) {
    std::complex<double> sum{0.0, 0.0};
    for (std::size_t a = 0; a < matrix.dim; ++a) {
        for (std::size_t b = 0; b < matrix.dim; ++b) {
            sum += matrix.at(a, b) * matrix.at(b, a);
        }
    }
    return sum.real();
}

ComplexMatrix brute_force_reduced_density(const StateVector& state,
                                          std::span<const int> subset) {
    const int n = state.n_qubits();
    if (n > 8) {
        throw std::length_error("brute-force reduced density: capacity is n <= 8, got n = " +
                                std::to_string(n));
    }
    if (subset.empty()) throw std::invalid_argument("brute-force reduced density: empty subset");
    int prev = -1;
    for (int q : subset) {
        if (q < 0 || q >= n) throw std::invalid_argument("brute-force reduced density: bad index");
        if (q <= prev) {
            throw std::invalid_argument("brute-force reduced density: subset must be sorted and unique");
        }
        prev = q;
    }

    const std::size_t full_dim = state.dim();
    const auto amps = state.amplitudes();

    // Full outer product |psi><psi|.
    ComplexMatrix outer(full_dim);
    for (std::size_t i = 0; i < full_dim; ++i) {
        for (std::size_t j = 0; j < full_dim; ++j) {
            outer.at(i, j) = amps[i] * std::conj(amps[j]);
        }
    }

    const int m = static_cast<int>(subset.size());
    std::vector<int> kept(subset.begin(), subset.end());
    std::vector<int> traced;
    {
        std::size_t k = 0;
        for (int q = 0; q < n; ++q) {
            if (k < kept.size() && kept[k] == q) {
                ++k;
            } else {
                traced.push_back(q);
            }
        }
    }

    const auto scatter = [n](std::size_t bits, const std::vector<int>& qubits) {
        std::size_t index = 0;
        for (std::size_t j = 0; j < qubits.size(); ++j) {
            if (bits & (std::size_t{1} << (qubits.size() - 1 - j))) {
                index |= std::size_t{1} << (n - 1 - qubits[j]);
            }
        }
        return index;
    };

    const std::size_t sub_dim = std::size_t{1} << m;
    const std::size_t env_dim = std::size_t{1} << (n - m);
    ComplexMatrix reduced(sub_dim);
    for (std::size_t a = 0; a < sub_dim; ++a) {
        const std::size_t ia = scatter(a, kept);
        for (std::size_t b = 0; b < sub_dim; ++b) {
            const std::size_t ib = scatter(b, kept);
            std::complex<double> sum{0.0, 0.0};
            for (std::size_t e = 0; e < env_dim; ++e) {
                const std::size_t ie = scatter(e, traced);
                sum += outer.at(ia | ie, ib | ie);
            }
            reduced.at(a, b) = sum;
        }
    }
    return reduced;
}

}  // namespace pqcrand
