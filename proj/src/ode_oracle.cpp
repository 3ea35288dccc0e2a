#include "sss/ode_oracle.hpp"

#include <cmath>

namespace sss {

namespace {

constexpr cdouble kI{0.0, 1.0};

// RK4 on the subspace equations with compile-time dimensions so the inner
// loops unroll. State layout: column c of row r at y[r * NCols + c]. The
// e^{i delta t} factor advances by a fixed rotation per step and is
// re-anchored periodically so rounding cannot accumulate.
template <int Dim, int NCols>
void rk4_run(double t, long steps, double delta, double g1s, double g2s, cdouble* y) {
    constexpr int M = Dim * NCols;
    const double h = t / static_cast<double>(steps);

    auto rhs = [g1s, g2s](cdouble ph, const cdouble* yy, cdouble* dy) {
        const cdouble phc = std::conj(ph);
        for (int c = 0; c < NCols; ++c) {
            if constexpr (Dim == 2) {
                dy[0 * NCols + c] = -kI * g2s * ph * yy[1 * NCols + c];
                dy[1 * NCols + c] = -kI * g2s * phc * yy[0 * NCols + c];
            } else {
                dy[0 * NCols + c] = -kI * g1s * phc * yy[1 * NCols + c];
                dy[1 * NCols + c] =
                    -kI * ph * (g1s * yy[0 * NCols + c] + g2s * yy[2 * NCols + c]);
                dy[2 * NCols + c] = -kI * g2s * phc * yy[1 * NCols + c];
            }
        }
    };

    const cdouble rot_half = std::polar(1.0, delta * 0.5 * h);
    const cdouble rot_full = std::polar(1.0, delta * h);
    cdouble ph{1.0, 0.0};
    cdouble k1[M], k2[M], k3[M], k4[M], tmp[M];
    for (long s = 0; s < steps; ++s) {
        if ((s & 511) == 0) {
            ph = std::polar(1.0, delta * h * static_cast<double>(s));
        }
        const cdouble ph_mid = ph * rot_half;
        const cdouble ph_end = ph * rot_full;
        rhs(ph, y, k1);
        for (int i = 0; i < M; ++i) tmp[i] = y[i] + 0.5 * h * k1[i];
        rhs(ph_mid, tmp, k2);
        for (int i = 0; i < M; ++i) tmp[i] = y[i] + 0.5 * h * k2[i];
        rhs(ph_mid, tmp, k3);
        for (int i = 0; i < M; ++i) tmp[i] = y[i] + h * k3[i];
        rhs(ph_end, tmp, k4);
        for (int i = 0; i < M; ++i) {
            y[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        }
        ph = ph_end;
    }
}

void rk4_evolve(SubspaceIndex n, double t, const InteractionParams& p, const OdeConfig& cfg,
                cdouble* y, int ncols) {
    const int dim = n.dimension();
    if (dim == 1 || t == 0.0) {
        return;
    }
    const double g1s = n.n >= 0 ? p.g1 * std::sqrt(static_cast<double>(n.n + 1)) : 0.0;
    const double g2s = p.g2 * std::sqrt(static_cast<double>(n.n + 2));
    const long steps = std::max(1L, static_cast<long>(std::ceil(t / cfg.step)));
    if (dim == 2) {
        if (ncols == 1) {
            rk4_run<2, 1>(t, steps, p.delta, g1s, g2s, y);
        } else {
            rk4_run<2, 2>(t, steps, p.delta, g1s, g2s, y);
        }
    } else {
        if (ncols == 1) {
            rk4_run<3, 1>(t, steps, p.delta, g1s, g2s, y);
        } else {
            rk4_run<3, 3>(t, steps, p.delta, g1s, g2s, y);
        }
    }
}

}  // namespace

std::vector<cdouble> integrate_subspace(SubspaceIndex n, const std::vector<cdouble>& initial,
                                        double t, const InteractionParams& p,
                                        const OdeConfig& cfg) {
    if (t < 0.0) {
        throw std::invalid_argument("integrate_subspace: t must be >= 0");
    }
    if (static_cast<int>(initial.size()) != n.dimension()) {
        throw std::invalid_argument("integrate_subspace: initial vector dimension mismatch");
    }
    std::vector<cdouble> y = initial;
    rk4_evolve(n, t, p, cfg, y.data(), 1);
    return y;
}

SubspacePropagator integrate_propagator(SubspaceIndex n, double t, const InteractionParams& p,
                                        const OdeConfig& cfg) {
    if (t < 0.0) {
        throw std::invalid_argument("integrate_propagator: t must be >= 0");
    }
    SubspacePropagator u{n, t, n.dimension()};
    for (int i = 0; i < u.dim; ++i) {
        u.at(i, i) = 1.0;
    }
    rk4_evolve(n, t, p, cfg, u.entries.data(), u.dim);
    return u;
}

}  // namespace sss
