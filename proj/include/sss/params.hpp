#pragma once

#include <cmath>
#include <stdexcept>

namespace sss {

// Couplings and detuning are angular frequencies in rad/us; times are in us.
// g1 couples the e<->f transition, g2 the f<->g transition.
struct InteractionParams {
    double g1;
    double g2;
    double delta;

    InteractionParams(double g1_, double g2_, double delta_ = 0.0)
        : g1(g1_), g2(g2_), delta(delta_) {
        if (!(g1 > 0.0) || !std::isfinite(g1)) {
            throw std::invalid_argument("InteractionParams: g1 must be finite and > 0");
        }
        if (!(g2 > 0.0) || !std::isfinite(g2)) {
            throw std::invalid_argument("InteractionParams: g2 must be finite and > 0");
        }
        if (!std::isfinite(delta)) {
            throw std::invalid_argument("InteractionParams: delta must be finite");
        }
    }

    static InteractionParams symmetric(double g, double delta = 0.0) {
        return InteractionParams(g, g, delta);
    }
};

// Label of an invariant subspace of the interaction:
//   n >= 0  -> triplet  {|e,n>, |f,n+1>, |g,n+2>}
//   n == -1 -> doublet  {|f,0>, |g,1>}   (e level decoupled)
//   n == -2 -> singleton {|g,0>}         (stationary)
struct SubspaceIndex {
    int n;

    SubspaceIndex(int n_) : n(n_) {
        if (n < -2) {
            throw std::invalid_argument("SubspaceIndex: n must be >= -2");
        }
    }

    int dimension() const { return n >= 0 ? 3 : (n == -1 ? 2 : 1); }

    // Photon number of basis row r (rows ordered e, f, g restricted to the subspace).
    int photon_of_row(int r) const { return n >= 0 ? n + r : (n == -1 ? r : 0); }

    friend bool operator==(SubspaceIndex a, SubspaceIndex b) { return a.n == b.n; }
};

// Effective coupling of subspace n, sqrt(g1^2 (n+1) + g2^2 (n+2)). Positive for n >= -1.
inline double alpha(SubspaceIndex n, const InteractionParams& p) {
    if (n.n < -1) {
        throw std::invalid_argument("alpha: undefined for the stationary singleton (n = -2)");
    }
    const double up = n.n + 1 > 0 ? static_cast<double>(n.n + 1) : 0.0;
    return std::sqrt(p.g1 * p.g1 * up + p.g2 * p.g2 * static_cast<double>(n.n + 2));
}

// Rabi frequency of subspace n, sqrt(delta^2/4 + alpha^2).
inline double rabi(SubspaceIndex n, const InteractionParams& p) {
    const double a = alpha(n, p);
    return std::sqrt(0.25 * p.delta * p.delta + a * a);
}

}  // namespace sss
