// Copyright (c) 2026 The pqcrand developers
// SPDX-License-Identifier: Apache-2.0

#include "pqcrand/circuit.hpp"

#include <charconv>
#include <stdexcept>

namespace pqcrand {

std::string_view ansatz_tag(Ansatz ansatz) noexcept {
    return ansatz == Ansatz::A1 ? "A1" : "A2";
}

std::optional<Ansatz> parse_ansatz(std::string_view text) noexcept {
    if (text == "A1" || text == "a1" || text == "1") return Ansatz::A1;
    if (text == "A2" || text == "a2" || text == "2") return Ansatz::A2;
    return std::nullopt;
}

CircuitSpec::CircuitSpec(Ansatz ansatz, Topology topology, int n_qubits, int n_layers)
    : ansatz_(ansatz), topology_(topology), n_qubits_(n_qubits), n_layers_(n_layers) {
    const int min_n = std::max(2, topology_min_qubits(topology));
    if (n_qubits < min_n) {
        throw std::invalid_argument("circuit spec: " + std::string(topology_tag(topology)) +
                                    " needs n_qubits >= " + std::to_string(min_n) +
                                    ", got " + std::to_string(n_qubits));
    }
    if (n_qubits > kMaxQubits) {
        throw std::invalid_argument("circuit spec: n_qubits exceeds simulator capacity of " +
                                    std::to_string(kMaxQubits));
    }
    if (n_layers < 1) {
        throw std::invalid_argument("circuit spec: n_layers must be >= 1");
    }
}

int CircuitSpec::parameter_count() const noexcept {
    const int per_layer = (ansatz_ == Ansatz::A1 ? 2 : 4) * n_qubits_;
    return per_layer * n_layers_;
}

std::string CircuitSpec::to_string() const {
    std::string out(ansatz_tag(ansatz_));
    out += ':';
    out += topology_tag(topology_);
    out += ':';
    out += std::to_string(n_qubits_);
    out += ':';
    out += std::to_string(n_layers_);
    return out;
}

namespace {

int parse_int_field(std::string_view text, const char* what) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw std::invalid_argument(std::string("circuit spec: bad ") + what + " '" +
                                    std::string(text) + "'");
    }
    return value;
}

}  // namespace

CircuitSpec CircuitSpec::parse(std::string_view text) {
    std::array<std::string_view, 4> fields;
    std::size_t start = 0;
    for (int i = 0; i < 4; ++i) {
        const std::size_t colon = text.find(':', start);
        const bool last = i == 3;
        if (last != (colon == std::string_view::npos)) {
            throw std::invalid_argument("circuit spec: expected ansatz:topology:n:l, got '" +
                                        std::string(text) + "'");
        }
        fields[i] = text.substr(start, last ? std::string_view::npos : colon - start);
        start = colon + 1;
    }
    const auto ansatz = parse_ansatz(fields[0]);
    if (!ansatz) {
        throw std::invalid_argument("circuit spec: unknown ansatz '" + std::string(fields[0]) + "'");
    }
    const auto topology = parse_topology(fields[1]);
    if (!topology) {
        throw std::invalid_argument("circuit spec: unknown topology '" + std::string(fields[1]) + "'");
    }
    return CircuitSpec(*ansatz, *topology,
                       parse_int_field(fields[2], "qubit count"),
                       parse_int_field(fields[3], "layer count"));
}

GateSequence compile(const CircuitSpec& spec) {
    const int n = spec.n_qubits();
    const auto edges = connection_edges(spec.topology(), n);

    GateSequence seq;
    seq.gates.reserve(static_cast<std::size_t>(spec.n_layers()) *
                      (static_cast<std::size_t>(spec.parameter_count() / spec.n_layers()) +
                       edges.size()));

    int slot = 0;
    const auto rotation_pass = [&] {
        for (int q = 0; q < n; ++q) {
            seq.gates.push_back(Gate::rx(q, slot++));
            seq.gates.push_back(Gate::ry(q, slot++));
        }
    };

    for (int layer = 0; layer < spec.n_layers(); ++layer) {
        rotation_pass();
        for (const auto& [control, target] : edges) {
            seq.gates.push_back(Gate::cnot(control, target));
        }
        if (spec.ansatz() == Ansatz::A2) rotation_pass();
    }
    seq.n_params = slot;
    return seq;
}

StateVector run_circuit(const GateSequence& sequence, std::span<const double> params,
                        int n_qubits) {
    if (params.size() != static_cast<std::size_t>(sequence.n_params)) {
        throw std::invalid_argument("run_circuit: expected " +
                                    std::to_string(sequence.n_params) + " parameters, got " +
                                    std::to_string(params.size()));
    }
    StateVector state = StateVector::zero_state(n_qubits);
    for (const Gate& gate : sequence.gates) {
        state.apply_gate(gate, params);
    }
    return state;
}

}  // namespace pqcrand
