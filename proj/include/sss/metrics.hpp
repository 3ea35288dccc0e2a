#pragma once

#include <map>
#include <string>

#include "sss/joint_state.hpp"
#include "sss/params.hpp"

namespace sss {

// Pure state of num_atoms qudits, keyed by digit strings in the canonical
// level order. For qutrits the digits (0, 1, 2) stand for (g, f, e).
class PureAtomicState {
public:
    static PureAtomicState from_amplitudes(int num_atoms, int levels_per_atom,
                                           std::map<std::string, cdouble> amps);

    int num_atoms() const { return num_atoms_; }
    int levels_per_atom() const { return levels_per_atom_; }
    const std::map<std::string, cdouble>& amplitudes() const { return amps_; }

    // Same ray, different global phase; |phase| must be 1.
    PureAtomicState rotated(cdouble phase) const;

private:
    PureAtomicState(int num_atoms, int levels_per_atom) noexcept
        : num_atoms_(num_atoms), levels_per_atom_(levels_per_atom) {}

    int num_atoms_;
    int levels_per_atom_;
    std::map<std::string, cdouble> amps_;
};

// Totally antisymmetric state of N N-level particles: the 1/sqrt(N!) signed
// sum over all permutations of the canonical digit order. 2 <= N <= 6.
PureAtomicState supersinglet(int num_particles);

// |<target|state>|^2.
double fidelity(const PureAtomicState& state, const PureAtomicState& target);

// Converts a photonless JointState (e.g. the output of project_cavity) into
// digit-keyed form.
PureAtomicState atomic_state(const JointState& state);

// The closed-form transition amplitudes entering the three-pass expansion:
// `f1_from_e0` is the amplitude to reach |f,1> from |e,0> after one crossing.
struct ProtocolCoefficients {
    // pass 1, atom in |e>, cavity in |0>
    cdouble e0_from_e0, f1_from_e0, g2_from_e0;
    // pass 2, atom in |f>, cavity in |0>, |1>, |2>
    cdouble f0_from_f0, g1_from_f0;
    cdouble e0_from_f1, f1_from_f1, g2_from_f1;
    cdouble e1_from_f2, f2_from_f2, g3_from_f2;
    // pass 3, atom in |g>, cavity in |1>, |2>, |3>
    cdouble f0_from_g1, g1_from_g1;
    cdouble e0_from_g2, f1_from_g2, g2_from_g2;
    cdouble e1_from_g3, f2_from_g3, g3_from_g3;
};

ProtocolCoefficients protocol_coefficients(double t1, double t2, double t3,
                                           const InteractionParams& p);

// Vacuum-branch probability assembled from the seven surviving products;
// cross-checks project_cavity.
double success_probability_formula(const ProtocolCoefficients& c);

// Post-selected supersinglet fidelity assembled from the printed six-term
// signed expression; cross-checks fidelity() on the simulated state.
double fidelity_formula(const ProtocolCoefficients& c);

}  // namespace sss
