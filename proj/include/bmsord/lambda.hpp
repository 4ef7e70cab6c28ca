#pragma once

#include <vector>

#include "bmsord/channel.hpp"

namespace bmsord {

/// Outcome of comparing two channels through their Lambda profiles.
enum class Ordering {
    Equivalent,   // profiles equal within tolerance everywhere
    DegradedOf,   // first profile lies above the second pointwise
    UpgradedOf,   // first profile lies below the second pointwise
    Incomparable  // the profiles cross
};

const char* to_string(Ordering o);

/// A piecewise-linear function on [0,1] given by its breakpoints: strictly
/// increasing abscissas starting at 0 and ending at 1, with one ordinate
/// each. Lambda profiles of channels are nonincreasing and concave, which
/// the constructor checks (with 1e-12 slack for rounding).
class PiecewiseLinear {
public:
    PiecewiseLinear(std::vector<double> breaks, std::vector<double> values);

    double operator()(double z) const;

    const std::vector<double>& breaks() const { return breaks_; }
    const std::vector<double>& values() const { return values_; }

private:
    std::vector<double> breaks_;
    std::vector<double> values_;
};

/// Lambda function of a channel at a single point:
/// Lambda(z) = sum of alpha_i * (1 - max(z, x_i)), for z in [0,1].
double lambda_eval(const DiscreteChannel& ch, double z);

/// The full Lambda profile of a channel: breakpoints at 0, the mass
/// positions and 1. Between breakpoints Lambda is linear, so the profile
/// is exact.
PiecewiseLinear lambda_profile(const DiscreteChannel& ch);

/// True when the channel behind `candidate` is degraded with respect to the
/// channel behind `reference`, i.e. reference <= candidate pointwise (within
/// 1e-10, checked at the union of the breakpoint sets — sufficient since the
/// difference of two piecewise-linear functions is piecewise linear).
bool is_degraded(const PiecewiseLinear& candidate, const PiecewiseLinear& reference);

/// Two-sided degradation test.
Ordering compare(const PiecewiseLinear& a, const PiecewiseLinear& b);

/// Channel entropy recovered from the Lambda profile alone:
///   H = integral over [0,1] of Lambda(z) / (ln2 * (1 - z^2)) dz,
/// evaluated segment by segment in closed form. On a segment where
/// Lambda(z) = A + B*z the antiderivative is
/// (A*atanh(z) - (B/2)*ln(1-z^2)) / ln2; the last segment, which reaches
/// z = 1, is rewritten as Lambda(z) = (-B)*(1-z) (valid since Lambda(1) = 0)
/// so the (1-z) factor cancels and the endpoint singularity never appears.
///
/// Throws NonZeroTail when the profile does not end at 0 (within 1e-10).
double entropy_from_lambda(const PiecewiseLinear& pl);

}  // namespace bmsord
