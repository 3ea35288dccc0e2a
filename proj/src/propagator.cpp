#include "sss/propagator.hpp"

#include <cmath>

namespace sss {

namespace {
constexpr cdouble kI{0.0, 1.0};
}

void SubspacePropagator::apply(const cdouble* in, cdouble* out) const {
    for (int r = 0; r < dim; ++r) {
        cdouble acc{0.0, 0.0};
        for (int c = 0; c < dim; ++c) {
            acc += entries[r * dim + c] * in[c];
        }
        out[r] = acc;
    }
}

double SubspacePropagator::unitarity_defect() const {
    double worst = 0.0;
    for (int r = 0; r < dim; ++r) {
        for (int c = 0; c < dim; ++c) {
            cdouble acc{0.0, 0.0};
            for (int k = 0; k < dim; ++k) {
                acc += std::conj(entries[k * dim + r]) * entries[k * dim + c];
            }
            const double target = r == c ? 1.0 : 0.0;
            worst = std::max(worst, std::abs(acc - target));
        }
    }
    return worst;
}

double SubspacePropagator::identity_defect() const {
    double worst = 0.0;
    for (int r = 0; r < dim; ++r) {
        for (int c = 0; c < dim; ++c) {
            const double target = r == c ? 1.0 : 0.0;
            worst = std::max(worst, std::abs(entries[r * dim + c] - target));
        }
    }
    return worst;
}

cdouble gamma(SubspaceIndex n, double t, const InteractionParams& p) {
    if (n.n < -1) {
        throw std::invalid_argument("gamma: undefined for the stationary singleton (n = -2)");
    }
    if (t < 0.0) {
        throw std::invalid_argument("gamma: t must be >= 0");
    }
    const double lam = rabi(n, p);
    const cdouble half_phase = std::polar(1.0, 0.5 * p.delta * t);
    return (lam * std::cos(lam * t) + kI * (0.5 * p.delta) * std::sin(lam * t) -
            lam * half_phase) *
           std::conj(half_phase);
}

SubspacePropagator propagator(SubspaceIndex n, double t, const InteractionParams& p) {
    if (t < 0.0) {
        throw std::invalid_argument("propagator: t must be >= 0");
    }
    SubspacePropagator u{n, t, n.dimension()};
    if (n.n == -2) {
        u.at(0, 0) = 1.0;  // |g,0> is uncoupled
        return u;
    }

    const double a = alpha(n, p);
    const double lam = rabi(n, p);
    const double s = std::sin(lam * t);
    const double c = std::cos(lam * t);
    const cdouble ep = std::polar(1.0, 0.5 * p.delta * t);   // e^{+i delta t / 2}
    const cdouble em = std::conj(ep);                        // e^{-i delta t / 2}
    const cdouble gm = gamma(n, t, p);
    const double g2s = p.g2 * std::sqrt(static_cast<double>(n.n + 2));
    const cdouble diag_f = (c - kI * (0.5 * p.delta / lam) * s) * ep;

    if (n.n == -1) {
        // Doublet: the g1 sqrt(n+1) couplings vanish, leaving {|f,0>, |g,1>}.
        u.at(0, 0) = diag_f;
        u.at(0, 1) = -kI * (g2s / lam) * s * ep;
        u.at(1, 0) = -kI * (g2s / lam) * s * em;
        u.at(1, 1) = g2s * g2s / (lam * a * a) * gm + 1.0;
        return u;
    }

    const double g1s = p.g1 * std::sqrt(static_cast<double>(n.n + 1));
    u.at(0, 0) = g1s * g1s / (lam * a * a) * gm + 1.0;
    u.at(0, 1) = -kI * (g1s / lam) * s * em;
    u.at(0, 2) = g1s * g2s / (lam * a * a) * gm;
    u.at(1, 0) = -kI * (g1s / lam) * s * ep;
    u.at(1, 1) = diag_f;
    u.at(1, 2) = -kI * (g2s / lam) * s * ep;
    u.at(2, 0) = u.at(0, 2);
    u.at(2, 1) = -kI * (g2s / lam) * s * em;
    u.at(2, 2) = g2s * g2s / (lam * a * a) * gm + 1.0;
    return u;
}

}  // namespace sss
