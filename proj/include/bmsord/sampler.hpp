#pragma once

#include <cstdint>
#include <vector>

#include "bmsord/channel.hpp"
#include "bmsord/numerics.hpp"

namespace bmsord {

/// SplitMix64 (Steele/Lea/Vigna). Chosen as the pinned generator because the
/// algorithm is tiny, fully specified, and has published reference outputs,
/// so fixtures reproduce bit-exactly on any platform. Uniform doubles use
/// the usual 53-bit mapping.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform on [0, 1).
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1p-53; }

private:
    std::uint64_t state_;
};

/// Seed of the i-th generator stream derived from a batch seed. Streams for
/// distinct indices are decorrelated by the SplitMix64 finalizer, so batch
/// items can be produced independently and in parallel.
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index);

struct SamplerConfig {
    double capacity;            // target c in (0,1)
    int n_masses;               // 2 or 3
    std::uint64_t seed;
    int max_rejects = 10000;    // cap on rejection loops per channel
};

/// Draws random discrete BMS channels with capacity exactly `capacity`:
/// positions are drawn uniformly and the weights solved from the entropy
/// constraint, so no tuning loop is involved. Construction solves eps_bsc
/// once; sampling is pure in the generator state.
class ChannelSampler {
public:
    explicit ChannelSampler(const SamplerConfig& cfg, const SolverConfig& solver = {});

    /// One channel from a live generator. Throws RejectionExhausted when
    /// max_rejects draws in a row are infeasible.
    DiscreteChannel sample(SplitMix64& rng) const;

    /// Channel `index` of the batch keyed by (cfg.seed, index).
    DiscreteChannel sample_at(std::uint64_t index) const;

    /// The first `count` channels of the batch. Deterministic given
    /// (seed, count) and concatenation-stable: a batch of 2k starts with the
    /// batch of k. `parallel` only affects wall time, never the output.
    std::vector<DiscreteChannel> batch(std::size_t count, bool parallel = true) const;

    double x_bsc() const { return x_bsc_; }

private:
    DiscreteChannel sample_two(SplitMix64& rng) const;
    DiscreteChannel sample_three(SplitMix64& rng) const;

    SamplerConfig cfg_;
    double x_bsc_;  // 1 - 2*eps_bsc(capacity); every channel needs a mass above it
};

/// Convenience wrappers over ChannelSampler.
DiscreteChannel sample_channel(const SamplerConfig& cfg, SplitMix64& rng);
std::vector<DiscreteChannel> sample_batch(const SamplerConfig& cfg, std::size_t count,
                                          bool parallel = true);

}  // namespace bmsord
