// Times the OpenMP grid scan against the serial reference driver on a
// (t2, t3) fidelity surface and checks that both produce identical bytes.
//
// usage: bench_scan [step_us]   (default 0.5)

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <omp.h>

#include "sss/search.hpp"

using namespace sss;

namespace {

double run_ms(std::vector<ScanRecord> (*driver)(const GridSpec&, const FixedParams&),
              const GridSpec& grid, const FixedParams& fixed, std::vector<ScanRecord>& out) {
    double best = 1e300;
    for (int rep = 0; rep < 3; ++rep) {
        const auto start = std::chrono::steady_clock::now();
        out = driver(grid, fixed);
        const auto stop = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(stop - start).count());
    }
    return best;
}

}  // namespace

int main(int argc, char** argv) {
    const double step = argc > 1 ? std::atof(argv[1]) : 0.5;
    if (!(step > 0.0)) {
        std::fprintf(stderr, "step must be positive\n");
        return 2;
    }

    GridSpec grid;
    grid.t2 = AxisRange(0.0, 60.0, step);
    grid.t3 = AxisRange(0.0, 60.0, step);
    FixedParams fixed;
    fixed.t1 = 23.0;
    fixed.delta = 0.0;
    fixed.g = 1.0;
    const long points = grid.t2->count() * grid.t3->count();

    std::vector<ScanRecord> serial_records, parallel_records;
    const double serial_ms = run_ms(scan_serial, grid, fixed, serial_records);
    const double parallel_ms = run_ms(scan, grid, fixed, parallel_records);

    if (scan_to_csv(serial_records) != scan_to_csv(parallel_records)) {
        std::fprintf(stderr, "FAIL: serial and parallel scans disagree\n");
        return 1;
    }

    std::printf("points   threads  serial_ms  parallel_ms  speedup\n");
    std::printf("%-8ld %-8d %-10.1f %-12.1f %.2fx\n", points, omp_get_max_threads(), serial_ms,
                parallel_ms, serial_ms / parallel_ms);
    std::printf("outputs identical: yes\n");
    return 0;
}
