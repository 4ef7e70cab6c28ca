#include "bmsord/lambda.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace bmsord {

namespace {

constexpr double kShapeTol = 1e-12;    // slack for monotonicity/concavity checks
constexpr double kCompareTol = 1e-10;  // pointwise ordering tolerance
constexpr double kTailTol = 1e-10;     // Lambda(1) must vanish to this accuracy

// Union of two sorted breakpoint vectors, exact-duplicate free.
std::vector<double> merge_breaks(const std::vector<double>& a,
                                 const std::vector<double>& b) {
    std::vector<double> out;
    out.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

const char* to_string(Ordering o) {
    switch (o) {
        case Ordering::Equivalent: return "Equivalent";
        case Ordering::DegradedOf: return "DegradedOf";
        case Ordering::UpgradedOf: return "UpgradedOf";
        case Ordering::Incomparable: return "Incomparable";
    }
    return "?";
}

PiecewiseLinear::PiecewiseLinear(std::vector<double> breaks, std::vector<double> values)
    : breaks_(std::move(breaks)), values_(std::move(values)) {
    if (breaks_.size() != values_.size() || breaks_.size() < 2)
        throw InvalidParameter("PiecewiseLinear: needs matching breaks/values, >= 2");
    if (breaks_.front() != 0.0 || breaks_.back() != 1.0)
        throw InvalidParameter("PiecewiseLinear: breaks must start at 0 and end at 1");
    for (std::size_t i = 0; i + 1 < breaks_.size(); ++i) {
        if (!(breaks_[i] < breaks_[i + 1]))
            throw InvalidParameter("PiecewiseLinear: breaks must be strictly increasing");
        if (values_[i + 1] > values_[i] + kShapeTol)
            throw InvalidParameter("PiecewiseLinear: values must be nonincreasing");
    }
    // Concavity via cross-multiplied slope comparison, so that narrow
    // segments do not amplify rounding error.
    for (std::size_t i = 0; i + 2 < breaks_.size(); ++i) {
        const double dl = breaks_[i + 1] - breaks_[i];
        const double dr = breaks_[i + 2] - breaks_[i + 1];
        const double lhs = (values_[i + 1] - values_[i]) * dr;
        const double rhs = (values_[i + 2] - values_[i + 1]) * dl;
        if (rhs > lhs + kShapeTol * dl * dr + kShapeTol)
            throw InvalidParameter("PiecewiseLinear: slopes must be nonincreasing");
    }
}

double PiecewiseLinear::operator()(double z) const {
    if (!(z >= 0.0 && z <= 1.0))
        throw DomainError("PiecewiseLinear: argument outside [0,1]");
    auto it = std::upper_bound(breaks_.begin(), breaks_.end(), z);
    if (it == breaks_.end()) return values_.back();  // z == 1
    const std::size_t hi = static_cast<std::size_t>(it - breaks_.begin());
    if (hi == 0) return values_.front();
    const std::size_t lo = hi - 1;
    if (z == breaks_[lo]) return values_[lo];
    const double t = (z - breaks_[lo]) / (breaks_[hi] - breaks_[lo]);
    return values_[lo] + t * (values_[hi] - values_[lo]);
}

double lambda_eval(const DiscreteChannel& ch, double z) {
    if (!(z >= 0.0 && z <= 1.0))
        throw DomainError("lambda_eval: z outside [0,1]");
    double acc = 0.0;
    for (const MassPoint& m : ch.masses())
        acc += m.alpha * (1.0 - std::max(z, m.x));
    return acc;
}

PiecewiseLinear lambda_profile(const DiscreteChannel& ch) {
    std::vector<double> breaks;
    breaks.reserve(ch.size() + 2);
    breaks.push_back(0.0);
    for (const MassPoint& m : ch.masses())
        if (m.x > 1e-12 && m.x < 1.0 - 1e-12) breaks.push_back(m.x);
    breaks.push_back(1.0);

    std::vector<double> values;
    values.reserve(breaks.size());
    for (double z : breaks) values.push_back(lambda_eval(ch, z));
    values.back() = 0.0;
    return PiecewiseLinear(std::move(breaks), std::move(values));
}

bool is_degraded(const PiecewiseLinear& candidate, const PiecewiseLinear& reference) {
    for (double z : merge_breaks(candidate.breaks(), reference.breaks()))
        if (reference(z) > candidate(z) + kCompareTol) return false;
    return true;
}

Ordering compare(const PiecewiseLinear& a, const PiecewiseLinear& b) {
    bool above = true;  // a >= b everywhere
    bool below = true;  // a <= b everywhere
    for (double z : merge_breaks(a.breaks(), b.breaks())) {
        const double d = a(z) - b(z);
        if (d < -kCompareTol) above = false;
        if (d > kCompareTol) below = false;
    }
    if (above && below) return Ordering::Equivalent;
    if (above) return Ordering::DegradedOf;
    if (below) return Ordering::UpgradedOf;
    return Ordering::Incomparable;
}

double entropy_from_lambda(const PiecewiseLinear& pl) {
    const std::vector<double>& zs = pl.breaks();
    const std::vector<double>& vs = pl.values();
    if (std::abs(vs.back()) > kTailTol)
        throw NonZeroTail("entropy_from_lambda: Lambda(1) = " +
                          std::to_string(vs.back()));

    const double ln2 = std::log(2.0);
    double total = 0.0;
    for (std::size_t k = 0; k + 1 < zs.size(); ++k) {
        const double z0 = zs[k], z1 = zs[k + 1];
        const double v0 = vs[k], v1 = vs[k + 1];
        if (k + 2 == zs.size()) {
            // Final segment: Lambda(z) = s*(1-z) with s = v0/(1-z0), so the
            // integrand reduces to s / (ln2*(1+z)).
            const double s = v0 / (1.0 - z0);
            total += s * (ln2 - std::log1p(z0)) / ln2;
        } else {
            const double slope = (v1 - v0) / (z1 - z0);
            const double a = v0 - slope * z0;
            auto antider = [&](double z) {
                return (a * std::atanh(z) - 0.5 * slope * std::log1p(-z * z)) / ln2;
            };
            total += antider(z1) - antider(z0);
        }
    }
    return total;
}

}  // namespace bmsord
