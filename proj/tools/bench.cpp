// Benchmark comparing the OpenMP kernels against their serial reference
// implementations, verifying along the way that both produce identical
// results. Run from the build directory:  ./bench [repeats]

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "bmsord/sampler.hpp"
#include "bmsord/sweep.hpp"

using namespace bmsord;

namespace {

using clock_type = std::chrono::steady_clock;

template <class F>
double time_best_of(int repeats, F&& f) {
    double best = 1e300;
    for (int r = 0; r < repeats; ++r) {
        const auto t0 = clock_type::now();
        f();
        const auto t1 = clock_type::now();
        best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
    }
    return best;
}

bool rows_equal(const std::vector<CapacityGapRow>& a,
                const std::vector<CapacityGapRow>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].c != b[i].c || a[i].c_star != b[i].c_star ||
            a[i].c_under != b[i].c_under)
            return false;
    return true;
}

bool batches_equal(const std::vector<DiscreteChannel>& a,
                   const std::vector<DiscreteChannel>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != b[i].size()) return false;
        for (std::size_t k = 0; k < a[i].size(); ++k)
            if (a[i].masses()[k].alpha != b[i].masses()[k].alpha ||
                a[i].masses()[k].x != b[i].masses()[k].x)
                return false;
    }
    return true;
}

void report(const char* name, double serial_s, double parallel_s, bool identical) {
    std::printf("%-18s serial %8.3f ms   parallel %8.3f ms   speedup %5.2fx   %s\n",
                name, serial_s * 1e3, parallel_s * 1e3, serial_s / parallel_s,
                identical ? "results identical" : "RESULTS DIFFER");
}

}  // namespace

int main(int argc, char** argv) {
    const int repeats = argc > 1 ? std::atoi(argv[1]) : 3;
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; parallel paths run serially\n");
#endif

    bool all_ok = true;
    const SolverConfig cfg;

    {
        const std::vector<double> cs = capacity_grid(0.05, 0.95, 0.005);
        std::vector<CapacityGapRow> serial_rows, parallel_rows;
        const double ts = time_best_of(repeats, [&] { serial_rows = gap_rows_serial(cs, cfg); });
        const double tp = time_best_of(repeats, [&] { parallel_rows = gap_rows(cs, cfg); });
        const bool ok = rows_equal(serial_rows, parallel_rows);
        all_ok = all_ok && ok;
        report("gap sweep (181c)", ts, tp, ok);
    }

    {
        const SamplerConfig scfg{0.5, 3, 20240521};
        const ChannelSampler sampler(scfg);
        std::vector<DiscreteChannel> serial_batch, parallel_batch;
        const double ts =
            time_best_of(repeats, [&] { serial_batch = sampler.batch(20000, false); });
        const double tp =
            time_best_of(repeats, [&] { parallel_batch = sampler.batch(20000, true); });
        const bool ok = batches_equal(serial_batch, parallel_batch);
        all_ok = all_ok && ok;
        report("sampling (20k ch)", ts, tp, ok);

        const ExtremalProfile p = extremal_profile(0.5, cfg);
        EnvelopeReport rs, rp;
        const double tes = time_best_of(
            repeats, [&] { rs = check_envelope_serial(serial_batch, p, 1001, 1e-9, cfg); });
        const double tep = time_best_of(
            repeats, [&] { rp = check_envelope(parallel_batch, p, 1001, 1e-9, cfg); });
        const bool eok = rs.violations == rp.violations && rs.points == rp.points &&
                         rs.worst_low == rp.worst_low && rs.worst_high == rp.worst_high;
        all_ok = all_ok && eok;
        report("envelope (20k ch)", tes, tep, eok);
        std::printf("  envelope: %zu channels, %zu points, %zu violations\n",
                    rp.channels, rp.points, rp.violations);
    }

    if (!all_ok) {
        std::printf("mismatch between serial and parallel results\n");
        return 1;
    }
    return 0;
}
