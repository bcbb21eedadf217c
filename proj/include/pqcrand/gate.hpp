// Copyright (c) 2026 The pqcrand developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace pqcrand {

enum class GateKind { RX, RY, CNOT, H, X };

/// One gate in a compiled sequence. Parameterized rotations carry the index
/// of their angle in the circuit's parameter vector; CNOT carries a control.
struct Gate {
    GateKind kind;
    int target = 0;
    int control = -1;     // CNOT only
    int param_slot = -1;  // RX/RY only

    static Gate rx(int target, int param_slot) {
        require(param_slot >= 0, "rotation gate requires a parameter slot");
        return {GateKind::RX, target, -1, param_slot};
    }

    static Gate ry(int target, int param_slot) {
        require(param_slot >= 0, "rotation gate requires a parameter slot");
        return {GateKind::RY, target, -1, param_slot};
    }

    static Gate cnot(int control, int target) {
        require(control >= 0, "cnot control must be a valid qubit index");
        require(control != target, "cnot control and target must differ");
        return {GateKind::CNOT, target, control, -1};
    }

    static Gate hadamard(int target) { return {GateKind::H, target, -1, -1}; }

    static Gate pauli_x(int target) { return {GateKind::X, target, -1, -1}; }

    bool is_rotation() const noexcept {
        return kind == GateKind::RX || kind == GateKind::RY;
    }

private:
    static void require(bool ok, const char* what) {
        if (!ok) throw std::invalid_argument(std::string("gate: ") + what);
    }
};

}  // namespace pqcrand
