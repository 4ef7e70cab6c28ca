#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bmsord/errors.hpp"

namespace bmsord {

/// One point mass of a |D|-density: probability `alpha` at position `x`,
/// both in [0,1].
struct MassPoint {
    double alpha;
    double x;
};

/// A discrete BMS channel, represented by its |D|-density: a finite list of
/// point masses with strictly increasing positions summing to one. Immutable
/// after construction; build instances with new_channel / bsc / bec.
class DiscreteChannel {
public:
    const std::vector<MassPoint>& masses() const { return masses_; }
    std::size_t size() const { return masses_.size(); }

    friend DiscreteChannel new_channel(const std::vector<MassPoint>& pairs);

private:
    explicit DiscreteChannel(std::vector<MassPoint> masses)
        : masses_(std::move(masses)) {}
    std::vector<MassPoint> masses_;
};

/// Builds a channel from (alpha, x) pairs: sorts by position, merges
/// positions closer than 1e-12, drops masses below 1e-15 and renormalizes
/// the total mass to one. The pairs must individually lie in [0,1]^2 and
/// their masses must sum to 1 within 1e-9.
DiscreteChannel new_channel(const std::vector<MassPoint>& pairs);

/// BSC with crossover probability epsilon in (0, 0.5]: a single mass at
/// 1 - 2*epsilon.
DiscreteChannel bsc(double epsilon);

/// BEC with the given erasure probability: mass `erasure` at 0 and the rest
/// at 1 (a single mass when erasure is 0 or 1). Capacity is 1 - erasure.
DiscreteChannel bec(double erasure);

/// Binary entropy function h2(p) = -p log2 p - (1-p) log2 (1-p), with
/// h2(0) = h2(1) = 0 exactly.
double binary_entropy(double p);

/// Entropy kernel in the |D| domain: h(x) = h2((1-x)/2) for x in [0,1].
double kernel_h(double x);

/// Entropy of the channel: sum of alpha_i * h(x_i), in [0,1].
double entropy(const DiscreteChannel& ch);

/// Capacity in bits per channel use: 1 - entropy.
double capacity(const DiscreteChannel& ch);

/// Bhattacharyya parameter: sum of alpha_i * sqrt(1 - x_i^2).
double bhattacharyya(const DiscreteChannel& ch);

/// MAP error probability: sum of alpha_i * (1 - x_i) / 2, in [0, 0.5].
double error_probability(const DiscreteChannel& ch);

/// Serializes the channel as {"masses":[{"alpha":..,"x":..},...]} with each
/// decimal written with 17 significant digits (value-preserving).
std::string to_json(const DiscreteChannel& ch);

/// Parses the JSON produced by to_json (field order insensitive).
DiscreteChannel channel_from_json(const std::string& text);

}  // namespace bmsord
