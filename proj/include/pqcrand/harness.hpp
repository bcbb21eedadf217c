// Copyright (c) 2026 The pqcrand developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pqcrand/circuit.hpp"

namespace pqcrand {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

/// Pre-expansion sweep description: what the CLI flags and the config file
/// express. Ranges are inclusive.
struct SweepRequest {
    std::vector<Ansatz> ansaetze{Ansatz::A1};
    std::vector<Topology> topologies{kAllTopologies.begin(), kAllTopologies.end()};
    int qubits_lo = 4;
    int qubits_hi = 4;
    int layers_lo = 1;
    int layers_hi = 1;
    std::string quantity = "all";  // expressibility | entanglement | tdesign | all
    int scott_order = 1;
    int tdesign_order = 2;
    std::uint64_t n_states = 10000;
    int n_bins = 75;
    std::optional<int> repetitions;  // unset: 1, except 20 for tdesign
    std::uint64_t master_seed = 1;
    double interval_lo = 0.0;
    double interval_hi = kTwoPi;
    unsigned workers = 0;  // 0 = all hardware threads
};

/// Expanded, validated experiment plan.
struct ExperimentConfig {
    std::vector<CircuitSpec> specs;
    bool expressibility = false;
    bool entanglement = false;
    bool tdesign = false;
    int scott_order = 1;
    int tdesign_order = 2;
    std::uint64_t n_states = 10000;
    int n_bins = 75;
    std::optional<int> repetitions;
    std::uint64_t master_seed = 1;
    double interval_lo = 0.0;
    double interval_hi = kTwoPi;
    unsigned workers = 0;

    int repetitions_for(std::string_view quantity) const noexcept;
};

/// Expands a request into a config. Combinations that violate a topology
/// minimum (Ring below 3 qubits) are reported in `errors` and skipped; the
/// rest of the sweep proceeds. Throws std::invalid_argument for settings
/// that invalidate the whole run (odd n_states, bad interval, empty sweep).
struct BuiltConfig {
    ExperimentConfig config;
    std::vector<std::string> errors;
};
BuiltConfig build_config(const SweepRequest& request);

/// One self-describing result: everything needed to re-run it.
struct ResultRow {
    std::string spec;
    std::string quantity;
    double value = 0.0;
    double dispersion = 0.0;
    std::uint64_t n_samples = 0;
    std::uint64_t seed = 0;
    double wall_ms = 0.0;
};

struct SweepResult {
    std::vector<ResultRow> rows;
    std::vector<std::string> errors;
};

/// Runs every (spec, quantity, repetition) cell. Values depend only on
/// (master_seed, spec string, repetition, sample index), never on the worker
/// count. Per-cell failures are collected in `errors` and the sweep
/// continues. Rows whose (spec, quantity, seed) key already appears in
/// `existing` are skipped, which makes interrupted sweeps resumable.
SweepResult run_sweep(const ExperimentConfig& config,
                      std::span<const ResultRow> existing = {});

/// Oracle statistics: sampled Haar-state entanglement and fidelity moments
/// next to their closed forms, as regular result rows (spec "HAAR:n").
std::vector<ResultRow> haar_reference_rows(int n_qubits, std::uint64_t n_samples,
                                           std::uint64_t master_seed);

enum class OutputFormat { Csv, Jsonl };
std::optional<OutputFormat> parse_output_format(std::string_view text) noexcept;

/// CSV: header `spec,quantity,value,dispersion,n_samples,seed,wall_ms`, one
/// row per line. JSONL: one object per line with identical keys. Doubles are
/// written with 17 significant digits so parsing them back is lossless.
void emit_results(std::span<const ResultRow> rows, OutputFormat format, std::ostream& out);
void emit_results(std::span<const ResultRow> rows, OutputFormat format,
                  const std::filesystem::path& path);

std::vector<ResultRow> read_results(OutputFormat format, std::istream& in);
std::vector<ResultRow> read_results(OutputFormat format, const std::filesystem::path& path);

/// Parses the JSON config-file form of a SweepRequest. Unknown keys and type
/// mismatches are errors; messages carry the offending key or byte offset.
SweepRequest parse_sweep_request_json(const std::string& text);
SweepRequest parse_sweep_request_file(const std::filesystem::path& path);

}  // namespace pqcrand
