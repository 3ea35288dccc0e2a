#pragma once

#include <vector>

#include "sss/joint_state.hpp"
#include "sss/params.hpp"

namespace sss {

// Auxiliary-atom vacuum certification: ground-state atoms cross the cavity
// for t_prime each and are measured; finding every one of them still in |g>
// certifies (up to the reported residual) that the cavity is empty.
struct DetectionSpec {
    double t_prime;
    int num_aux;
    InteractionParams params;
    // Optional per-atom interaction times; when set it must hold num_aux
    // entries and overrides t_prime.
    std::vector<double> per_atom_times;

    DetectionSpec(double t_prime_, int num_aux_, InteractionParams params_,
                  std::vector<double> per_atom_times_ = {})
        : t_prime(t_prime_),
          num_aux(num_aux_),
          params(params_),
          per_atom_times(std::move(per_atom_times_)) {
        if (!(t_prime >= 0.0)) {
            throw std::invalid_argument("DetectionSpec: t_prime must be >= 0");
        }
        if (num_aux < 1) {
            throw std::invalid_argument("DetectionSpec: num_aux must be >= 1");
        }
        if (!per_atom_times.empty() &&
            per_atom_times.size() != static_cast<std::size_t>(num_aux)) {
            throw std::invalid_argument("DetectionSpec: per_atom_times must have num_aux entries");
        }
        for (double t : per_atom_times) {
            if (!(t >= 0.0)) {
                throw std::invalid_argument("DetectionSpec: per-atom times must be >= 0");
            }
        }
    }

    double time_of(int atom_index) const {
        return per_atom_times.empty() ? t_prime : per_atom_times[atom_index];
    }
};

struct AuxMeasureResult {
    // State after all auxiliary atoms were measured in |g> and discarded
    // (renormalized; photons still present).
    JointState state;
    // Probability of obtaining |g> on every auxiliary atom.
    double prob_g;
    // Joint probability that every auxiliary reads |g> AND photons remain:
    // the false-positive weight of the certification.
    double residual_nonvacuum;
};

// Passes spec.num_aux ground-state atoms through the cavity (t_prime each),
// projecting each onto |g> and discarding it.
AuxMeasureResult aux_pass_and_measure(const JointState& state, const DetectionSpec& spec);

struct TimeWindow {
    double lo;
    double hi;

    TimeWindow(double lo_, double hi_) : lo(lo_), hi(hi_) {
        if (!(lo >= 0.0) || !(hi > lo)) {
            throw std::invalid_argument("TimeWindow: need 0 <= lo < hi");
        }
    }
};

// The t' in the window maximizing the one-photon absorption probability
// |g,1> -> |f,0> (dense 1e-3 us grid plus golden-section refinement of each
// candidate peak; exact ties resolve to the smallest t').
double optimal_aux_time(const InteractionParams& p, TimeWindow window);

struct CertifiedVacuumResult {
    // Atomic state after the certified trace-out of the cavity.
    JointState atomic_state;
    // Probability of the full certification record (every auxiliary in |g>).
    double success_probability;
    // Non-vacuum weight discarded at the trace-out, relative to the
    // post-selected branch.
    double error_bound;
    // 1 - error_bound: how much of the post-selected branch really was vacuum.
    double vacuum_confidence;
};

// Runs the auxiliary certification, then keeps the vacuum branch.
CertifiedVacuumResult certified_vacuum_protocol(const JointState& state,
                                                const DetectionSpec& spec);

}  // namespace sss
