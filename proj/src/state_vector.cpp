// Copyright (c) 2026 The pqcrand developers
// SPDX-License-Identifier: Apache-2.0

#include "pqcrand/state_vector.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "pqcrand/numeric.hpp"

namespace pqcrand {

StateVector::StateVector(int n_qubits)
    : n_qubits_(n_qubits), amps_(std::size_t{1} << n_qubits) {
    amps_[0] = 1.0;
}

StateVector StateVector::zero_state(int n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw std::length_error("statevector capacity: n_qubits must be in [1, " +
                                std::to_string(kMaxQubits) + "], got " +
                                std::to_string(n_qubits));
    }
    return StateVector(n_qubits);
}

StateVector::StateVector(int n_qubits, std::vector<Amplitude> amplitudes)
    : n_qubits_(n_qubits), amps_(std::move(amplitudes)) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw std::length_error("statevector capacity: n_qubits out of range");
    }
    if (amps_.size() != (std::size_t{1} << n_qubits)) {
        throw std::invalid_argument("statevector: amplitude count must be 2^n_qubits");
    }
}

void StateVector::check_qubit(int qubit) const {
    if (qubit < 0 || qubit >= n_qubits_) {
        throw std::out_of_range("qubit index " + std::to_string(qubit) +
                                " out of range for " + std::to_string(n_qubits_) +
                                " qubits");
    }
}

void StateVector::apply_rotation(Axis axis, int qubit, double theta) {
    check_qubit(qubit);
    if (!std::isfinite(theta)) {
        throw std::invalid_argument("rotation angle must be finite");
    }
    const std::size_t stride = qubit_stride(qubit);
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const std::size_t size = amps_.size();

    if (axis == Axis::X) {
        // [[c, -i s], [-i s, c]]
        for (std::size_t base = 0; base < size; base += 2 * stride) {
            for (std::size_t off = 0; off < stride; ++off) {
                Amplitude& a0 = amps_[base + off];
                Amplitude& a1 = amps_[base + off + stride];
                const double r0 = a0.real(), i0 = a0.imag();
                const double r1 = a1.real(), i1 = a1.imag();
                a0 = {c * r0 + s * i1, c * i0 - s * r1};
                a1 = {s * i0 + c * r1, -s * r0 + c * i1};
            }
        }
    } else {
        // [[c, -s], [s, c]]
        for (std::size_t base = 0; base < size; base += 2 * stride) {
            for (std::size_t off = 0; off < stride; ++off) {
                Amplitude& a0 = amps_[base + off];
                Amplitude& a1 = amps_[base + off + stride];
                const Amplitude t0 = a0;
                a0 = {c * t0.real() - s * a1.real(), c * t0.imag() - s * a1.imag()};
                a1 = {s * t0.real() + c * a1.real(), s * t0.imag() + c * a1.imag()};
            }
        }
    }
}

void StateVector::apply_cnot(int control, int target) {
    check_qubit(target);
    check_qubit(control);
    if (control == target) {
        throw std::invalid_argument("cnot: control and target must differ");
    }
    const std::size_t tstride = qubit_stride(target);
    const std::size_t cmask = qubit_stride(control);
    const std::size_t size = amps_.size();
    for (std::size_t base = 0; base < size; base += 2 * tstride) {
        for (std::size_t off = 0; off < tstride; ++off) {
            const std::size_t i0 = base + off;
            if (i0 & cmask) std::swap(amps_[i0], amps_[i0 + tstride]);
        }
    }
}

void StateVector::apply_hadamard(int qubit) {
    check_qubit(qubit);
    const std::size_t stride = qubit_stride(qubit);
    const double inv_sqrt2 = 0.7071067811865475244;
    const std::size_t size = amps_.size();
    for (std::size_t base = 0; base < size; base += 2 * stride) {
        for (std::size_t off = 0; off < stride; ++off) {
            Amplitude& a0 = amps_[base + off];
            Amplitude& a1 = amps_[base + off + stride];
            const Amplitude t0 = a0;
            a0 = {inv_sqrt2 * (t0.real() + a1.real()), inv_sqrt2 * (t0.imag() + a1.imag())};
            a1 = {inv_sqrt2 * (t0.real() - a1.real()), inv_sqrt2 * (t0.imag() - a1.imag())};
        }
    }
}

void StateVector::apply_pauli_x(int qubit) {
    check_qubit(qubit);
    const std::size_t stride = qubit_stride(qubit);
    const std::size_t size = amps_.size();
    for (std::size_t base = 0; base < size; base += 2 * stride) {
        for (std::size_t off = 0; off < stride; ++off) {
            std::swap(amps_[base + off], amps_[base + off + stride]);
        }
    }
}

void StateVector::apply_gate(const Gate& gate, std::span<const double> params) {
    switch (gate.kind) {
        case GateKind::RX:
        case GateKind::RY: {
            if (gate.param_slot < 0 ||
                static_cast<std::size_t>(gate.param_slot) >= params.size()) {
                throw std::out_of_range("gate parameter slot out of range");
            }
            const Axis axis = gate.kind == GateKind::RX ? Axis::X : Axis::Y;
            apply_rotation(axis, gate.target, params[gate.param_slot]);
            break;
        }
        case GateKind::CNOT:
            apply_cnot(gate.control, gate.target);
            break;
        case GateKind::H:
            apply_hadamard(gate.target);
            break;
        case GateKind::X:
            apply_pauli_x(gate.target);
            break;
    }
}

double StateVector::norm_sqr() const {
    std::vector<double> sq(amps_.size());
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        sq[i] = amps_[i].real() * amps_[i].real() + amps_[i].imag() * amps_[i].imag();
    }
    return pairwise_sum(sq);
}

void StateVector::normalize() {
    const double inv = 1.0 / std::sqrt(norm_sqr());
    for (Amplitude& a : amps_) a *= inv;
}

double fidelity(const StateVector& a, const StateVector& b) {
    if (a.n_qubits() != b.n_qubits()) {
        throw std::invalid_argument("fidelity: register sizes differ");
    }
    const auto as = a.amplitudes();
    const auto bs = b.amplitudes();
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < as.size(); ++i) {
        // conj(a_i) * b_i
        re += as[i].real() * bs[i].real() + as[i].imag() * bs[i].imag();
        im += as[i].real() * bs[i].imag() - as[i].imag() * bs[i].real();
    }
    return re * re + im * im;
}

}  // namespace pqcrand
