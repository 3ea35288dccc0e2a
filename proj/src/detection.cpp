#include "sss/detection.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace sss {

namespace {

double nonvacuum_weight(const JointState& state) {
    double acc = 0.0;
    for (const auto& [ket, amp] : state.amplitudes()) {
        if (ket.photons > 0) {
            acc += std::norm(amp);
        }
    }
    return acc;
}

// |g,1> -> |f,0> transfer probability after time t.
double absorption_probability(double t, const InteractionParams& p) {
    const SubspacePropagator u = propagator(SubspaceIndex(-1), t, p);
    return std::norm(u(0, 1));
}

// Golden-section maximization; plateau comparisons keep the left half so exact
// ties drift toward smaller t.
double golden_max(double a, double b, const InteractionParams& p, double tol) {
    constexpr double kInvPhi = 0.6180339887498949;
    double c = b - kInvPhi * (b - a);
    double d = a + kInvPhi * (b - a);
    double fc = absorption_probability(c, p);
    double fd = absorption_probability(d, p);
    while (b - a > tol) {
        if (fc >= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - kInvPhi * (b - a);
            fc = absorption_probability(c, p);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + kInvPhi * (b - a);
            fd = absorption_probability(d, p);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

AuxMeasureResult aux_pass_and_measure(const JointState& state, const DetectionSpec& spec) {
    JointState current = state;
    double prob_g = 1.0;
    for (int k = 0; k < spec.num_aux; ++k) {
        const JointState crossed =
            pass_atom(current, PassSpec(AtomState::ground(), spec.time_of(k)), spec.params);
        ProjectionResult measured = project_last_atom(crossed, Level::g);
        prob_g *= measured.probability;
        current = std::move(measured.state);
    }
    const double residual = prob_g * nonvacuum_weight(current);
    return {std::move(current), prob_g, residual};
}

double optimal_aux_time(const InteractionParams& p, TimeWindow window) {
    constexpr double kGridStep = 1e-3;
    std::vector<double> ts;
    const long count = static_cast<long>(std::floor((window.hi - window.lo) / kGridStep)) + 1;
    ts.reserve(count + 1);
    for (long i = 0; i < count; ++i) {
        ts.push_back(window.lo + static_cast<double>(i) * kGridStep);
    }
    if (ts.back() < window.hi) {
        ts.push_back(window.hi);
    }
    std::vector<double> vals(ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i) {
        vals[i] = absorption_probability(ts[i], p);
    }

    // Refine every local grid maximum, then pick the best refined value;
    // equal peaks resolve to the smallest t'.
    double best_t = ts.front();
    double best_v = vals.front();
    auto consider = [&](double lo, double hi) {
        const double t_star = golden_max(std::max(lo, window.lo), std::min(hi, window.hi), p, 1e-9);
        const double v_star = absorption_probability(t_star, p);
        if (v_star > best_v + 1e-12 || (v_star > best_v - 1e-12 && t_star < best_t)) {
            best_t = t_star;
            best_v = v_star;
        }
    };
    for (std::size_t i = 0; i < ts.size(); ++i) {
        const bool left_ok = i == 0 || vals[i] >= vals[i - 1];
        const bool right_ok = i + 1 == ts.size() || vals[i] >= vals[i + 1];
        if (left_ok && right_ok) {
            consider(i == 0 ? ts[i] : ts[i - 1], i + 1 == ts.size() ? ts[i] : ts[i + 1]);
        }
    }
    return best_t;
}

CertifiedVacuumResult certified_vacuum_protocol(const JointState& state,
                                                const DetectionSpec& spec) {
    AuxMeasureResult aux = aux_pass_and_measure(state, spec);
    const double error_bound = nonvacuum_weight(aux.state);
    ProjectionResult traced = project_cavity(aux.state, 0);
    return {std::move(traced.state), aux.prob_g, error_bound, 1.0 - error_bound};
}

}  // namespace sss
