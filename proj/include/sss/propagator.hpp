#pragma once

#include <array>
#include <complex>

#include "sss/params.hpp"

namespace sss {

using cdouble = std::complex<double>;

// Unitary propagator restricted to one invariant subspace, stored row-major.
// Rows/columns follow the basis order (e,n), (f,n+1), (g,n+2), restricted to
// the doublet {(f,0), (g,1)} for n = -1 and the singleton {(g,0)} for n = -2.
struct SubspacePropagator {
    SubspaceIndex n;
    double t;
    int dim;
    std::array<cdouble, 9> entries{};

    cdouble operator()(int row, int col) const { return entries[row * dim + col]; }
    cdouble& at(int row, int col) { return entries[row * dim + col]; }

    // out = U * in; `in` and `out` must hold `dim` entries and may not alias.
    void apply(const cdouble* in, cdouble* out) const;

    // max entrywise |U^dagger U - I|
    double unitarity_defect() const;
    // max entrywise |U - I|
    double identity_defect() const;
};

// gamma_n(t) = [Lambda cos(Lambda t) + i(delta/2) sin(Lambda t) - Lambda e^{i delta t/2}] e^{-i delta t/2}
cdouble gamma(SubspaceIndex n, double t, const InteractionParams& p);

// Closed-form propagator of subspace n after interaction time t >= 0.
SubspacePropagator propagator(SubspaceIndex n, double t, const InteractionParams& p);

}  // namespace sss
