#include "bmsord/sweep.hpp"

#include <algorithm>
#include <cmath>

namespace bmsord {

std::vector<double> capacity_grid(double from, double to, double step) {
    if (!(step > 0.0)) throw InvalidParameter("capacity_grid: step must be positive");
    if (!(from <= to)) throw InvalidParameter("capacity_grid: from must be <= to");
    const auto n = static_cast<std::size_t>(std::floor((to - from) / step + 0.5)) + 1;
    std::vector<double> cs;
    cs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double c = from + static_cast<double>(i) * step;
        if (c > to + 0.5 * step) break;
        cs.push_back(c);
    }
    return cs;
}

std::vector<CapacityGapRow> gap_rows_serial(const std::vector<double>& cs,
                                            const SolverConfig& cfg) {
    std::vector<CapacityGapRow> rows;
    rows.reserve(cs.size());
    for (double c : cs) rows.push_back(gap_row(c, cfg));
    return rows;
}

std::vector<CapacityGapRow> gap_rows(const std::vector<double>& cs,
                                     const SolverConfig& cfg) {
    std::vector<CapacityGapRow> rows(cs.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long long i = 0; i < static_cast<long long>(cs.size()); ++i)
        rows[static_cast<std::size_t>(i)] = gap_row(cs[static_cast<std::size_t>(i)], cfg);
    return rows;
}

SweepSummary summarize(const std::vector<CapacityGapRow>& rows) {
    SweepSummary s;
    for (const CapacityGapRow& r : rows) {
        if (r.d_gap > s.max_d_gap) {
            s.max_d_gap = r.d_gap;
            s.argmax_d = r.c;
        }
        if (r.u_gap > s.max_u_gap) {
            s.max_u_gap = r.u_gap;
            s.argmax_u = r.c;
        }
    }
    return s;
}

namespace {

struct EnvelopeGrid {
    std::vector<double> z;
    std::vector<double> lo;  // lambda_under at z
    std::vector<double> hi;  // lambda_bar at z
};

EnvelopeGrid make_grid(const ExtremalProfile& p, std::size_t grid_points,
                       const SolverConfig& cfg) {
    EnvelopeGrid g;
    g.z.reserve(grid_points);
    for (std::size_t i = 0; i < grid_points; ++i)
        g.z.push_back(static_cast<double>(i) / static_cast<double>(grid_points - 1));
    g.lo.reserve(grid_points);
    g.hi.reserve(grid_points);
    for (double z : g.z) {
        g.lo.push_back(lambda_under(p, z, cfg));
        g.hi.push_back(lambda_bar(p, z));
    }
    return g;
}

// Envelope comparison for one channel; merging reports is exact because it
// only adds counters and takes maxima.
void check_one(const DiscreteChannel& ch, const ExtremalProfile& p,
               const EnvelopeGrid& g, double tol, const SolverConfig& cfg,
               EnvelopeReport& r) {
    for (std::size_t i = 0; i < g.z.size(); ++i) {
        const double v = lambda_eval(ch, g.z[i]);
        r.points++;
        if (v < g.lo[i] - tol || v > g.hi[i] + tol) r.violations++;
        r.worst_low = std::max(r.worst_low, g.lo[i] - v);
        r.worst_high = std::max(r.worst_high, v - g.hi[i]);
    }
    for (const MassPoint& m : ch.masses()) {
        const double v = lambda_eval(ch, m.x);
        const double lo = lambda_under(p, m.x, cfg);
        const double hi = lambda_bar(p, m.x);
        r.points++;
        if (v < lo - tol || v > hi + tol) r.violations++;
        r.worst_low = std::max(r.worst_low, lo - v);
        r.worst_high = std::max(r.worst_high, v - hi);
    }
}

void merge(EnvelopeReport& into, const EnvelopeReport& from) {
    into.channels += from.channels;
    into.points += from.points;
    into.violations += from.violations;
    into.worst_low = std::max(into.worst_low, from.worst_low);
    into.worst_high = std::max(into.worst_high, from.worst_high);
}

}  // namespace

EnvelopeReport check_envelope_serial(const std::vector<DiscreteChannel>& channels,
                                     const ExtremalProfile& p,
                                     std::size_t grid_points, double tol,
                                     const SolverConfig& cfg) {
    if (grid_points < 2) throw InvalidParameter("check_envelope: grid too small");
    const EnvelopeGrid g = make_grid(p, grid_points, cfg);
    EnvelopeReport r;
    r.channels = channels.size();
    for (const DiscreteChannel& ch : channels) check_one(ch, p, g, tol, cfg, r);
    return r;
}

EnvelopeReport check_envelope(const std::vector<DiscreteChannel>& channels,
                              const ExtremalProfile& p, std::size_t grid_points,
                              double tol, const SolverConfig& cfg) {
    if (grid_points < 2) throw InvalidParameter("check_envelope: grid too small");
    const EnvelopeGrid g = make_grid(p, grid_points, cfg);
    EnvelopeReport total;
    total.channels = channels.size();
#ifdef _OPENMP
#pragma omp parallel
    {
        EnvelopeReport local;
#pragma omp for schedule(dynamic, 64) nowait
        for (long long i = 0; i < static_cast<long long>(channels.size()); ++i)
            check_one(channels[static_cast<std::size_t>(i)], p, g, tol, cfg, local);
#pragma omp critical(bmsord_envelope_merge)
        merge(total, local);  // local.channels stays 0, so the count is not doubled
    }
#else
    for (const DiscreteChannel& ch : channels) check_one(ch, p, g, tol, cfg, total);
#endif
    return total;
}

}  // namespace bmsord
