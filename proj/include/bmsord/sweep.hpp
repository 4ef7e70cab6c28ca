#pragma once

#include <cstddef>
#include <vector>

#include "bmsord/extremal.hpp"
#include "bmsord/lambda.hpp"

namespace bmsord {

/// Inclusive uniform grid from `from` to `to`, generated by index so that a
/// rerun with the same arguments produces identical values.
std::vector<double> capacity_grid(double from, double to, double step);

/// Gap-table rows for a list of capacities. `gap_rows_serial` is the plain
/// reference loop; `gap_rows` runs the same per-row computation across
/// OpenMP threads. Rows are independent, so the two agree bit for bit.
std::vector<CapacityGapRow> gap_rows_serial(const std::vector<double>& cs,
                                            const SolverConfig& cfg = {});
std::vector<CapacityGapRow> gap_rows(const std::vector<double>& cs,
                                     const SolverConfig& cfg = {});

struct SweepSummary {
    double max_d_gap = 0.0;
    double argmax_d = 0.0;
    double max_u_gap = 0.0;
    double argmax_u = 0.0;
};

/// Maxima of both gap columns (first index wins ties).
SweepSummary summarize(const std::vector<CapacityGapRow>& rows);

/// Result of checking a set of channels against the extremal envelope
/// lambda_under <= Lambda_A <= lambda_bar.
struct EnvelopeReport {
    std::size_t channels = 0;
    std::size_t points = 0;      // z evaluations performed
    std::size_t violations = 0;  // points outside the envelope beyond `tol`
    double worst_low = 0.0;      // largest lambda_under(z) - Lambda_A(z)
    double worst_high = 0.0;     // largest Lambda_A(z) - lambda_bar(z)
};

/// Evaluates every channel's Lambda on a uniform grid of `grid_points`
/// points plus the channel's own breakpoints and compares against the
/// envelope. Serial reference and OpenMP kernel, bitwise-identical results.
EnvelopeReport check_envelope_serial(const std::vector<DiscreteChannel>& channels,
                                     const ExtremalProfile& p,
                                     std::size_t grid_points, double tol,
                                     const SolverConfig& cfg = {});
EnvelopeReport check_envelope(const std::vector<DiscreteChannel>& channels,
                              const ExtremalProfile& p, std::size_t grid_points,
                              double tol, const SolverConfig& cfg = {});

}  // namespace bmsord
