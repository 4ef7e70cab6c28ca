#include "bmsord/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "bmsord/extremal.hpp"

namespace bmsord {

namespace {

// Weights this close to 0 or 1 are redrawn: new_channel would drop the
// negligible mass and the channel would no longer have n_masses points.
constexpr double kWeightMargin = 1e-12;
constexpr double kPositionMargin = 1e-9;

}  // namespace

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

ChannelSampler::ChannelSampler(const SamplerConfig& cfg, const SolverConfig& solver)
    : cfg_(cfg) {
    if (!(cfg.capacity > 0.0 && cfg.capacity < 1.0))
        throw InvalidParameter("sampler: capacity must be in (0,1)");
    if (cfg.n_masses != 2 && cfg.n_masses != 3)
        throw InvalidParameter("sampler: n_masses must be 2 or 3");
    if (cfg.max_rejects <= 0)
        throw InvalidParameter("sampler: max_rejects must be positive");
    x_bsc_ = 1.0 - 2.0 * epsilon_bsc(cfg.capacity, solver);
}

DiscreteChannel ChannelSampler::sample_two(SplitMix64& rng) const {
    const double c = cfg_.capacity;
    for (int attempt = 0; attempt < cfg_.max_rejects; ++attempt) {
        // x1 below the BSC position, x2 above it; then h(x1) > 1-c > h(x2)
        // and the solved weight is interior.
        const double x1 = rng.next_unit() * x_bsc_;
        const double x2 = x_bsc_ + rng.next_unit() * (1.0 - x_bsc_);
        if (x2 - x_bsc_ < kPositionMargin) continue;
        const double h1 = kernel_h(x1);
        const double h2 = kernel_h(x2);
        const double a1 = (1.0 - c - h2) / (h1 - h2);
        if (a1 < kWeightMargin || a1 > 1.0 - kWeightMargin) continue;
        return new_channel({{a1, x1}, {1.0 - a1, x2}});
    }
    throw RejectionExhausted("sampler: no feasible two-mass draw");
}

DiscreteChannel ChannelSampler::sample_three(SplitMix64& rng) const {
    const double c = cfg_.capacity;
    for (int attempt = 0; attempt < cfg_.max_rejects; ++attempt) {
        double x1 = rng.next_unit();
        double x2 = rng.next_unit();
        double x3 = rng.next_unit();
        if (x1 > x2) std::swap(x1, x2);
        if (x2 > x3) std::swap(x2, x3);
        if (x1 > x2) std::swap(x1, x2);
        if (x3 <= x_bsc_ + kPositionMargin) continue;
        if (x2 - x1 < kPositionMargin || x3 - x2 < kPositionMargin) continue;

        const double a2 = rng.next_unit();
        if (a2 < kWeightMargin || a2 > 1.0 - kWeightMargin) continue;
        const double h1 = kernel_h(x1);
        const double h2 = kernel_h(x2);
        const double h3 = kernel_h(x3);
        if (std::abs(h1 - h3) < 1e-12) continue;

        // Solve a1 + a3 = 1 - a2 and a1*h1 + a3*h3 = 1 - c - a2*h2.
        const double a1 = (1.0 - c - a2 * h2 - (1.0 - a2) * h3) / (h1 - h3);
        const double a3 = 1.0 - a2 - a1;
        if (a1 < kWeightMargin || a1 > 1.0 - kWeightMargin) continue;
        if (a3 < kWeightMargin || a3 > 1.0 - kWeightMargin) continue;
        return new_channel({{a1, x1}, {a2, x2}, {a3, x3}});
    }
    throw RejectionExhausted("sampler: no feasible three-mass draw");
}

DiscreteChannel ChannelSampler::sample(SplitMix64& rng) const {
    return cfg_.n_masses == 2 ? sample_two(rng) : sample_three(rng);
}

DiscreteChannel ChannelSampler::sample_at(std::uint64_t index) const {
    SplitMix64 rng(stream_seed(cfg_.seed, index));
    return sample(rng);
}

std::vector<DiscreteChannel> ChannelSampler::batch(std::size_t count,
                                                   bool parallel) const {
    std::vector<DiscreteChannel> out;
    out.reserve(count);
#ifdef _OPENMP
    if (parallel && count >= 2) {
        std::vector<std::optional<DiscreteChannel>> slots(count);
#pragma omp parallel for schedule(dynamic, 64)
        for (long long i = 0; i < static_cast<long long>(count); ++i)
            slots[static_cast<std::size_t>(i)] =
                sample_at(static_cast<std::uint64_t>(i));
        for (auto& s : slots) out.push_back(std::move(*s));
        return out;
    }
#else
    (void)parallel;
#endif
    for (std::size_t i = 0; i < count; ++i) out.push_back(sample_at(i));
    return out;
}

DiscreteChannel sample_channel(const SamplerConfig& cfg, SplitMix64& rng) {
    return ChannelSampler(cfg).sample(rng);
}

std::vector<DiscreteChannel> sample_batch(const SamplerConfig& cfg, std::size_t count,
                                          bool parallel) {
    return ChannelSampler(cfg).batch(count, parallel);
}

}  // namespace bmsord
