// Copyright (c) 2026 The pqcrand developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "pqcrand/sampling.hpp"
#include "pqcrand/state_vector.hpp"

namespace pqcrand {

/// Haar-random pure states: 2^(n+1) independent standard Gaussians form the
/// real and imaginary parts of the amplitudes, then the vector is normalized.
/// This induces the same unitarily invariant measure as applying
/// Haar-distributed unitaries to a fixed fiducial state, at O(d) cost per
/// sample.
class HaarSampler {
public:
    HaarSampler(int n_qubits, std::uint64_t seed);

    StateVector sample();

    int n_qubits() const noexcept { return n_qubits_; }
    std::size_t dim() const noexcept { return std::size_t{1} << n_qubits_; }
    std::uint64_t seed() const noexcept { return seed_; }

private:
    int n_qubits_;
    std::uint64_t seed_;
    RandomStream stream_;
};

inline StateVector haar_state(HaarSampler& sampler) { return sampler.sample(); }

/// Minimal dense complex matrix, row-major.
struct ComplexMatrix {
    std::size_t dim = 0;
    std::vector<std::complex<double>> data;

    explicit ComplexMatrix(std::size_t dim_)
        : dim(dim_), data(dim_ * dim_, std::complex<double>{0.0, 0.0}) {}

    std::complex<double>& at(std::size_t row, std::size_t col) { return data[row * dim + col]; }
    const std::complex<double>& at(std::size_t row, std::size_t col) const {
        return data[row * dim + col];
    }

    std::complex<double> trace() const;
    double max_hermiticity_error() const;
};

/// Tr(M^2), real part (exact for Hermitian input).
double matrix_purity(const ComplexMatrix& matrix);

/// Test oracle for reduced states: materializes the full 2^n x 2^n outer
/// product |psi><psi| and partial-traces it by index summation. Deliberately
/// the slow, obvious route, independent of reduced_purity. Capacity n <= 8.
ComplexMatrix brute_force_reduced_density(const StateVector& state,
                                          std::span<const int> subset);

}  // namespace pqcrand
