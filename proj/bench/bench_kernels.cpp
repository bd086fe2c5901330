// Timing comparison between the serial and OpenMP entry points of the three
// parallel kernels. Not a test; build and run by hand when touching the hot
// loops. Results must match bit for bit, and the table says whether they do.

#include <chrono>
#include <cstdio>
#include <cstring>

#include "wmax/oracle.hpp"
#include "wmax/qstate.hpp"
#include "wmax/witness.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace wmax;
using clock_type = std::chrono::steady_clock;

double ms_since(clock_type::time_point t0) {
    return std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
}

bool bits_equal(double x, double y) {
    return std::memcmp(&x, &y, sizeof(double)) == 0;
}

void report(const char* name, double serial_ms, double parallel_ms, bool match) {
    std::printf("%-28s %10.1f ms %10.1f ms   %5.2fx   %s\n", name, serial_ms,
                parallel_ms, serial_ms / parallel_ms, match ? "match" : "MISMATCH");
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; both columns run the serial kernel\n");
#endif
    std::printf("%-28s %13s %13s %8s\n", "kernel", "serial", "parallel", "speedup");

    {
        auto psi = w_state(WParams::one_param(6, 0.45));
        AlternatingOptions opts;
        opts.starts = 64;
        auto t0 = clock_type::now();
        auto serial = alternating_maximize_serial(psi, opts);
        double ts = ms_since(t0);
        t0 = clock_type::now();
        auto parallel = alternating_maximize(psi, opts);
        double tp = ms_since(t0);
        report("alternating W6 x64 starts", ts, tp, bits_equal(serial.pmax, parallel.pmax));
    }

    {
        auto psi = w_state(WParams({1.0 / std::sqrt(3.0), 1.0 / std::sqrt(3.0),
                                    1.0 / std::sqrt(3.0)}));
        auto t0 = clock_type::now();
        auto serial = grid_search_serial(psi, 48);
        double ts = ms_since(t0);
        t0 = clock_type::now();
        auto parallel = grid_search(psi, 48);
        double tp = ms_since(t0);
        report("grid search W3 res 48", ts, tp, bits_equal(serial.pmax, parallel.pmax));
    }

    {
        auto witness = build_witness(5, 0.4);
        const int samples = 200000;
        auto t0 = clock_type::now();
        double serial = separable_scan_serial(witness, samples, 42);
        double ts = ms_since(t0);
        t0 = clock_type::now();
        double parallel = separable_scan(witness, samples, 42);
        double tp = ms_since(t0);
        report("witness scan 2e5 samples", ts, tp, bits_equal(serial, parallel));
    }

    return 0;
}
