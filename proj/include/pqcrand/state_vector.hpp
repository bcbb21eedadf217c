// Copyright (c) 2026 The pqcrand developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "pqcrand/gate.hpp"

namespace pqcrand {

using Amplitude = std::complex<double>;

/// Largest register size the dense simulator accepts (2^20 amplitudes, 16 MiB).
inline constexpr int kMaxQubits = 20;

enum class Axis { X, Y };

/// Dense statevector of 2^n complex amplitudes.
///
/// Index convention: qubit 0 is the most significant bit of the amplitude
/// index, i.e. it is the top wire of a circuit diagram. Gate kernels mutate
/// the state in place on stride-partitioned amplitude pairs.
///
/// Rotations follow RX(t) = cos(t) I - i sin(t) X and
/// RY(t) = cos(t) I - i sin(t) Y, with no half-angle factor; both gates
/// have period 2*pi up to a global sign.
class StateVector {
public:
    /// |0...0> on n qubits.
    static StateVector zero_state(int n_qubits);

    /// Wraps explicit amplitudes; the vector length must be 2^n_qubits.
    StateVector(int n_qubits, std::vector<Amplitude> amplitudes);

    int n_qubits() const noexcept { return n_qubits_; }
    std::size_t dim() const noexcept { return amps_.size(); }
    std::span<const Amplitude> amplitudes() const noexcept { return amps_; }
    Amplitude amplitude(std::size_t index) const { return amps_.at(index); }

    void apply_rotation(Axis axis, int qubit, double theta);
    void apply_cnot(int control, int target);
    void apply_hadamard(int qubit);
    void apply_pauli_x(int qubit);

    /// Dispatches one compiled gate; rotation angles are read from `params`
    /// at the gate's slot.
    void apply_gate(const Gate& gate, std::span<const double> params);

    double norm_sqr() const;
    void normalize();

private:
    explicit StateVector(int n_qubits);

    /// Distance between amplitude indices that differ only in `qubit`.
    std::size_t qubit_stride(int qubit) const noexcept {
        return std::size_t{1} << (n_qubits_ - 1 - qubit);
    }
    void check_qubit(int qubit) const;

    int n_qubits_;
    std::vector<Amplitude> amps_;
};

/// |<a|b>|^2 for equal-sized registers.
double fidelity(const StateVector& a, const StateVector& b);

}  // namespace pqcrand
