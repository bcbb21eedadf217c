// Copyright (c) 2026 The pqcrand developers
// SPDX-License-Identifier: Apache-2.0

#include "pqcrand/topology.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace pqcrand {

std::string_view topology_tag(Topology topology) noexcept {
    switch (topology) {
        case Topology::NoConnections: return "NC";
        case Topology::Linear: return "LIN";
        case Topology::Ring: return "RIN";
        case Topology::Star: return "ST";
        case Topology::AllToAll: return "ATA";
    }
    return "?";
}

std::optional<Topology> parse_topology(std::string_view text) noexcept {
    std::string upper;
    upper.reserve(text.size());
    for (char c : text) upper.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    for (Topology t : kAllTopologies) {
        if (upper == topology_tag(t)) return t;
    }
    return std::nullopt;
}

int topology_min_qubits(Topology topology) noexcept {
    switch (topology) {
        case Topology::NoConnections: return 1;
        case Topology::Linear: return 2;
        case Topology::Ring: return 3;
        case Topology::Star: return 2;
        case Topology::AllToAll: return 2;
    }
    return 1;
}

std::vector<std::pair<int, int>> connection_edges(Topology topology, int n_qubits) {
    if (n_qubits < topology_min_qubits(topology)) {
        throw std::invalid_argument(std::string(topology_tag(topology)) +
                                    " topology requires at least " +
                                    std::to_string(topology_min_qubits(topology)) +
                                    " qubits, got " + std::to_string(n_qubits));
    }
    std::vector<std::pair<int, int>> edges;
    switch (topology) {
        case Topology::NoConnections:
            break;
        case Topology::Linear:
            for (int i = 0; i + 1 < n_qubits; ++i) edges.emplace_back(i, i + 1);
            break;
        case Topology::Ring:
            for (int i = 0; i + 1 < n_qubits; ++i) edges.emplace_back(i, i + 1);
            edges.emplace_back(n_qubits - 1, 0);
            break;
        case Topology::Star:
            for (int i = 1; i < n_qubits; ++i) edges.emplace_back(0, i);
            break;
        case Topology::AllToAll:
            for (int i = 0; i < n_qubits; ++i)
                for (int j = i + 1; j < n_qubits; ++j) edges.emplace_back(i, j);
            break;
    }
    return edges;
}

}  // namespace pqcrand
