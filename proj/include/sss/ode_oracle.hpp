#pragma once

#include <vector>

#include "sss/params.hpp"
#include "sss/propagator.hpp"

namespace sss {

// Fixed-step RK4 settings. The default step keeps the local phase advance per
// step at 1e-3 rad of the subspace Rabi frequency, far inside the 1e-6
// agreement budget of the closed forms.
struct OdeConfig {
    double step;

    explicit OdeConfig(double step_) : step(step_) {
        if (!(step > 0.0)) {
            throw std::invalid_argument("OdeConfig: step must be > 0");
        }
    }

    static OdeConfig for_subspace(SubspaceIndex n, const InteractionParams& p) {
        if (n.n == -2) {
            return OdeConfig(1.0);  // no dynamics; step is irrelevant
        }
        return OdeConfig(1e-3 / rabi(n, p));
    }
};

// Integrates the coupled amplitude equations of subspace n from `initial` to
// time t. The equations carry the explicit e^{+-i delta t} interaction-picture
// phases; this is the ground-truth reference for the closed-form propagator.
std::vector<cdouble> integrate_subspace(SubspaceIndex n, const std::vector<cdouble>& initial,
                                        double t, const InteractionParams& p,
                                        const OdeConfig& cfg);

// Integrates all basis columns at once, yielding the numerically propagated
// subspace matrix for direct comparison with propagator().
SubspacePropagator integrate_propagator(SubspaceIndex n, double t, const InteractionParams& p,
                                        const OdeConfig& cfg);

}  // namespace sss
