// Copyright (c) 2026 The pqcrand developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace pqcrand {

/// Qubit connectivity patterns found on current hardware. The graph decides
/// which pairs receive a CNOT in each circuit layer.
enum class Topology { NoConnections, Linear, Ring, Star, AllToAll };

inline constexpr std::array<Topology, 5> kAllTopologies = {
    Topology::NoConnections, Topology::Linear, Topology::Ring,
    Topology::Star, Topology::AllToAll};

/// Canonical short tag: NC, LIN, RIN, ST, ATA.
std::string_view topology_tag(Topology topology) noexcept;

/// Accepts the canonical tag, case-insensitive.
std::optional<Topology> parse_topology(std::string_view text) noexcept;

/// Smallest register the pattern is defined for. Ring starts at 3 qubits;
/// at 2 its closing edge would duplicate the Linear one.
int topology_min_qubits(Topology topology) noexcept;

/// Directed CNOT edges (control, target) in emission order:
///   NoConnections: empty
///   Linear:        (i, i+1) for ascending i
///   Ring:          Linear edges, then (n-1, 0)
///   Star:          (0, i) for ascending i >= 1; qubit 0 is the hub
///   AllToAll:      (i, j) for all i < j in lexicographic order
/// The lower-listed vertex always controls, so a superposition prepared on
/// qubit 0 spreads outward through the block.
std::vector<std::pair<int, int>> connection_edges(Topology topology, int n_qubits);

}  // namespace pqcrand
