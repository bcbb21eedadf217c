// Copyright (c) 2026 The pqcrand developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pqcrand/gate.hpp"
#include "pqcrand/state_vector.hpp"
#include "pqcrand/topology.hpp"

namespace pqcrand {

/// Circuit templates. A1 applies an RX,RY pair on every qubit and then the
/// topology's CNOT block, per layer. A2 adds a second RX,RY pass after the
/// CNOT block, doubling the parameter count while leaving entanglement
/// generation untouched (the extra rotations are local).
enum class Ansatz { A1, A2 };

std::string_view ansatz_tag(Ansatz ansatz) noexcept;
std::optional<Ansatz> parse_ansatz(std::string_view text) noexcept;

/// Fully determines a circuit family: template, connectivity, width, depth.
class CircuitSpec {
public:
    CircuitSpec(Ansatz ansatz, Topology topology, int n_qubits, int n_layers);

    Ansatz ansatz() const noexcept { return ansatz_; }
    Topology topology() const noexcept { return topology_; }
    int n_qubits() const noexcept { return n_qubits_; }
    int n_layers() const noexcept { return n_layers_; }

    /// 2*n*l for A1, 4*n*l for A2.
    int parameter_count() const noexcept;
    std::size_t dim() const noexcept { return std::size_t{1} << n_qubits_; }

    /// Canonical text form "A1:RIN:6:3".
    std::string to_string() const;
    static CircuitSpec parse(std::string_view text);

    bool operator==(const CircuitSpec&) const noexcept = default;

private:
    Ansatz ansatz_;
    Topology topology_;
    int n_qubits_;
    int n_layers_;
};

/// Compiled gate list. Every parameter slot in [0, n_params) appears exactly
/// once, numbered in emission order (layer-major, qubit-ascending, RX first).
struct GateSequence {
    std::vector<Gate> gates;
    int n_params = 0;
};

GateSequence compile(const CircuitSpec& spec);

/// Applies the sequence to |0...0> on n_qubits wires, reading rotation angles
/// from `params` by slot.
StateVector run_circuit(const GateSequence& sequence, std::span<const double> params,
                        int n_qubits);

}  // namespace pqcrand
