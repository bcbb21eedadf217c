// Copyright (c) 2026 The pqcrand developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string_view>

namespace pqcrand {

/// SplitMix64 finalizer; the basis of all seed derivation.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t combine_seed(std::uint64_t seed, std::uint64_t value) noexcept {
    return mix64(seed ^ mix64(value));
}

/// FNV-1a over the bytes of `text`.
constexpr std::uint64_t hash_string(std::string_view text) noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : text) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

/// Stream seed for one (master, label, repetition) context. Per-sample
/// streams are derived from this with combine_seed(base, sample_index), so
/// any sample can be regenerated in isolation on any worker.
constexpr std::uint64_t derive_stream_seed(std::uint64_t master_seed, std::string_view label,
                                           std::uint64_t repetition) noexcept {
    return combine_seed(combine_seed(master_seed, hash_string(label)), repetition);
}

/// Deterministic random stream. Uniform doubles are produced from the top 53
/// bits of the raw engine output rather than std::uniform_real_distribution,
/// so sequences do not depend on the standard library implementation.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Standard normal via Box-Muller; consumes two uniforms per pair.
    double gaussian();

    std::uint64_t raw() { return engine_(); }

private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

/// Source of circuit parameter vectors, indexed by sample so that results are
/// independent of evaluation order and worker count.
class ParameterSampler {
public:
    virtual ~ParameterSampler() = default;
    virtual void fill(std::uint64_t sample_index, std::span<double> out) const = 0;
};

/// Independent uniform angles in [lo, hi) per parameter, one derived stream
/// per sample index.
class UniformParameterSampler final : public ParameterSampler {
public:
    UniformParameterSampler(std::uint64_t stream_seed, double lo, double hi);

    void fill(std::uint64_t sample_index, std::span<double> out) const override;

    std::uint64_t stream_seed() const noexcept { return stream_seed_; }

private:
    std::uint64_t stream_seed_;
    double lo_;
    double hi_;
};

/// Every parameter fixed to one value; degenerate ensembles for tests.
class ConstantParameterSampler final : public ParameterSampler {
public:
    explicit ConstantParameterSampler(double value) : value_(value) {}
    void fill(std::uint64_t, std::span<double> out) const override {
        for (double& x : out) x = value_;
    }

private:
    double value_;
};

}  // namespace pqcrand
