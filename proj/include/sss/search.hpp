#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sss/params.hpp"

namespace sss {

// One evaluated protocol point (ideal vacuum projection, g1 = g2 = g).
struct ScanRecord {
    double t1, t2, t3;
    double g;
    double delta;
    double fidelity;
    double success_prob;
};

// Inclusive arithmetic range; value(i) = start + i * step.
struct AxisRange {
    double start;
    double stop;
    double step;

    AxisRange(double start_, double stop_, double step_)
        : start(start_), stop(stop_), step(step_) {
        if (!(step > 0.0)) {
            throw std::invalid_argument("AxisRange: step must be > 0");
        }
        if (!(start <= stop)) {
            throw std::invalid_argument("AxisRange: start must be <= stop");
        }
    }

    long count() const {
        return static_cast<long>(std::floor((stop - start) / step + 1e-6)) + 1;
    }
    double value(long i) const { return start + static_cast<double>(i) * step; }
};

// Swept axes. Any subset of {t1, t2, t3, delta} may carry a range; the rest
// must come from FixedParams.
struct GridSpec {
    std::optional<AxisRange> t1, t2, t3, delta;
};

struct FixedParams {
    std::optional<double> t1, t2, t3, delta;
    double g = 1.0;
};

// Single protocol evaluation through the full pipeline: three passes from
// vacuum, ideal projection onto |0>, fidelity against the 3x3 supersinglet.
ScanRecord evaluate_protocol_point(double t1, double t2, double t3, double g, double delta);

// One record per grid point in lexicographic (t1, t2, t3, delta) order.
// `scan` runs the points OpenMP-parallel; `scan_serial` is the reference
// driver. Both produce byte-identical results.
std::vector<ScanRecord> scan(const GridSpec& grid, const FixedParams& fixed);
std::vector<ScanRecord> scan_serial(const GridSpec& grid, const FixedParams& fixed);

// Fidelity-vs-detuning cut at fixed interaction times.
std::vector<ScanRecord> sweep_detuning(const std::array<double, 3>& times, double g,
                                       const AxisRange& delta_grid);

// Dense fidelity surface over (t2, t3) at fixed t1, stored row-major
// (t2 index slow, t3 index fast).
struct FidelitySurface {
    double t1;
    double g;
    double delta;
    std::vector<double> t2_values;
    std::vector<double> t3_values;
    std::vector<double> fidelity;

    double at(std::size_t i2, std::size_t i3) const {
        return fidelity[i2 * t3_values.size() + i3];
    }
};

FidelitySurface scan_surface(double t1, const AxisRange& t2_grid, const AxisRange& t3_grid,
                             double g, double delta);

// Cyclic coordinate ascent (axis order t1, t2, t3) with golden-section line
// searches on a bracket that halves each sweep until it drops below tol.
// Never returns a lower fidelity than the seed; ties move toward smaller
// times. Times are kept >= 0.
ScanRecord refine_optimum(const std::array<double, 3>& seed, double g, double delta,
                          double radius, double tol = 1e-3);

// CSV emission: header
// t1_us,t2_us,t3_us,g_rad_per_us,delta_rad_per_us,fidelity,success_prob
// with 9-significant-digit floats and LF line endings.
std::string scan_to_csv(const std::vector<ScanRecord>& records);

// Matrix CSV: first row "t2_us\t3_us" followed by the t3 axis values, then one
// row per t2 value.
std::string surface_to_csv(const FidelitySurface& surface);

}  // namespace sss
