#include "sss/search.hpp"

#include <cmath>
#include <cstdio>
#include <functional>

#include "sss/joint_state.hpp"
#include "sss/metrics.hpp"

namespace sss {

namespace {

struct Axis {
    const char* name;
    const std::optional<AxisRange>& range;
    const std::optional<double>& fixed;
};

// Resolved per-axis accessor: either a constant or a range index.
struct ResolvedAxis {
    std::optional<AxisRange> range;  // empty -> fixed
    double fixed_value = 0.0;

    long count() const { return range ? range->count() : 1; }
    double value(long i) const { return range ? range->value(i) : fixed_value; }
};

ResolvedAxis resolve_axis(const Axis& axis) {
    if (axis.range && axis.fixed) {
        throw std::invalid_argument(std::string("scan: axis ") + axis.name +
                                    " given both as grid and as fixed value");
    }
    if (!axis.range && !axis.fixed) {
        throw std::invalid_argument(std::string("scan: axis ") + axis.name +
                                    " is undetermined (provide a grid range or a fixed value)");
    }
    ResolvedAxis r;
    if (axis.range) {
        r.range = *axis.range;
    } else {
        r.fixed_value = *axis.fixed;
    }
    return r;
}

std::vector<ScanRecord> run_scan(const GridSpec& grid, const FixedParams& fixed, bool parallel) {
    const ResolvedAxis a1 = resolve_axis({"t1", grid.t1, fixed.t1});
    const ResolvedAxis a2 = resolve_axis({"t2", grid.t2, fixed.t2});
    const ResolvedAxis a3 = resolve_axis({"t3", grid.t3, fixed.t3});
    const ResolvedAxis ad = resolve_axis({"delta", grid.delta, fixed.delta});
    InteractionParams::symmetric(fixed.g);  // validates g up front

    const long n1 = a1.count(), n2 = a2.count(), n3 = a3.count(), nd = ad.count();
    const long total = n1 * n2 * n3 * nd;
    std::vector<ScanRecord> records(total);

#pragma omp parallel for schedule(dynamic, 16) if (parallel)
    for (long idx = 0; idx < total; ++idx) {
        const long id = idx % nd;
        const long i3 = (idx / nd) % n3;
        const long i2 = (idx / (nd * n3)) % n2;
        const long i1 = idx / (nd * n3 * n2);
        records[idx] = evaluate_protocol_point(a1.value(i1), a2.value(i2), a3.value(i3),
                                               fixed.g, ad.value(id));
    }
    return records;
}

double fidelity_at(const std::array<double, 3>& times, double g, double delta) {
    return evaluate_protocol_point(times[0], times[1], times[2], g, delta).fidelity;
}

void append_sig9(std::string& out, double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    out += buf;
}

}  // namespace

ScanRecord evaluate_protocol_point(double t1, double t2, double t3, double g, double delta) {
    static const PureAtomicState target = supersinglet(3);
    const InteractionParams p = InteractionParams::symmetric(g, delta);
    JointState state = vacuum_joint_state(6);
    state = pass_atom(state, PassSpec(AtomState::excited(), t1), p);
    state = pass_atom(state, PassSpec(AtomState::intermediate(), t2), p);
    state = pass_atom(state, PassSpec(AtomState::ground(), t3), p);
    const ProjectionResult projected = project_cavity(state, 0);
    const double f = fidelity(atomic_state(projected.state), target);
    return {t1, t2, t3, g, delta, f, projected.probability};
}

std::vector<ScanRecord> scan(const GridSpec& grid, const FixedParams& fixed) {
    return run_scan(grid, fixed, true);
}

std::vector<ScanRecord> scan_serial(const GridSpec& grid, const FixedParams& fixed) {
    return run_scan(grid, fixed, false);
}

std::vector<ScanRecord> sweep_detuning(const std::array<double, 3>& times, double g,
                                       const AxisRange& delta_grid) {
    GridSpec grid;
    grid.delta = delta_grid;
    FixedParams fixed;
    fixed.t1 = times[0];
    fixed.t2 = times[1];
    fixed.t3 = times[2];
    fixed.g = g;
    return scan(grid, fixed);
}

FidelitySurface scan_surface(double t1, const AxisRange& t2_grid, const AxisRange& t3_grid,
                             double g, double delta) {
    GridSpec grid;
    grid.t2 = t2_grid;
    grid.t3 = t3_grid;
    FixedParams fixed;
    fixed.t1 = t1;
    fixed.delta = delta;
    fixed.g = g;
    const std::vector<ScanRecord> records = scan(grid, fixed);

    FidelitySurface surface;
    surface.t1 = t1;
    surface.g = g;
    surface.delta = delta;
    surface.t2_values.reserve(t2_grid.count());
    for (long i = 0; i < t2_grid.count(); ++i) {
        surface.t2_values.push_back(t2_grid.value(i));
    }
    surface.t3_values.reserve(t3_grid.count());
    for (long i = 0; i < t3_grid.count(); ++i) {
        surface.t3_values.push_back(t3_grid.value(i));
    }
    surface.fidelity.reserve(records.size());
    for (const ScanRecord& r : records) {
        surface.fidelity.push_back(r.fidelity);
    }
    return surface;
}

ScanRecord refine_optimum(const std::array<double, 3>& seed, double g, double delta,
                          double radius, double tol) {
    if (!(radius > 0.0) || !(tol > 0.0)) {
        throw std::invalid_argument("refine_optimum: radius and tol must be > 0");
    }
    constexpr double kInvPhi = 0.6180339887498949;
    std::array<double, 3> x = seed;
    double best_f = fidelity_at(x, g, delta);

    // Golden-section maximization along one axis; plateau comparisons keep the
    // left half so ties drift toward smaller times.
    auto line_max = [&](int axis, double lo, double hi) {
        auto eval = [&](double v) {
            std::array<double, 3> y = x;
            y[axis] = v;
            return fidelity_at(y, g, delta);
        };
        double a = lo, b = hi;
        double c = b - kInvPhi * (b - a);
        double d = a + kInvPhi * (b - a);
        double fc = eval(c), fd = eval(d);
        while (b - a > tol * 1e-2) {
            if (fc >= fd) {
                b = d;
                d = c;
                fd = fc;
                c = b - kInvPhi * (b - a);
                fc = eval(c);
            } else {
                a = c;
                c = d;
                fc = fd;
                d = a + kInvPhi * (b - a);
                fd = eval(d);
            }
        }
        const double mid = 0.5 * (a + b);
        return std::pair<double, double>(mid, eval(mid));
    };

    for (double r = radius; r >= tol; r *= 0.5) {
        for (int axis = 0; axis < 3; ++axis) {
            const double lo = std::max(0.0, x[axis] - r);
            const double hi = x[axis] + r;
            const auto [v, f] = line_max(axis, lo, hi);
            if (f > best_f || (f == best_f && v < x[axis])) {
                x[axis] = v;
                best_f = f;
            }
        }
    }
    ScanRecord out = evaluate_protocol_point(x[0], x[1], x[2], g, delta);
    if (out.fidelity < fidelity_at(seed, g, delta)) {
        out = evaluate_protocol_point(seed[0], seed[1], seed[2], g, delta);
    }
    return out;
}

std::string scan_to_csv(const std::vector<ScanRecord>& records) {
    std::string out = "t1_us,t2_us,t3_us,g_rad_per_us,delta_rad_per_us,fidelity,success_prob\n";
    for (const ScanRecord& r : records) {
        append_sig9(out, r.t1);
        out += ',';
        append_sig9(out, r.t2);
        out += ',';
        append_sig9(out, r.t3);
        out += ',';
        append_sig9(out, r.g);
        out += ',';
        append_sig9(out, r.delta);
        out += ',';
        append_sig9(out, r.fidelity);
        out += ',';
        append_sig9(out, r.success_prob);
        out += '\n';
    }
    return out;
}

std::string surface_to_csv(const FidelitySurface& surface) {
    std::string out = "t2_us\\t3_us";
    for (double t3 : surface.t3_values) {
        out += ',';
        append_sig9(out, t3);
    }
    out += '\n';
    for (std::size_t i2 = 0; i2 < surface.t2_values.size(); ++i2) {
        append_sig9(out, surface.t2_values[i2]);
        for (std::size_t i3 = 0; i3 < surface.t3_values.size(); ++i3) {
            out += ',';
            append_sig9(out, surface.at(i2, i3));
        }
        out += '\n';
    }
    return out;
}

}  // namespace sss
