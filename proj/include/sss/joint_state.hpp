#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "sss/params.hpp"
#include "sss/propagator.hpp"

namespace sss {

enum class Level : int { g = 0, f = 1, e = 2 };

inline char to_char(Level l) { return l == Level::g ? 'g' : (l == Level::f ? 'f' : 'e'); }

// Excitation carried by an atomic level (e counts 2, f counts 1, g counts 0).
// This is also the canonical qutrit digit: (g, f, e) <-> (0, 1, 2).
inline int excitation(Level l) { return static_cast<int>(l); }
inline int excitation(char level_char) {
    switch (level_char) {
        case 'g': return 0;
        case 'f': return 1;
        case 'e': return 2;
        default: throw std::invalid_argument("excitation: level must be one of e, f, g");
    }
}

// Normalized single-atom amplitude vector (C_e, C_f, C_g).
struct AtomState {
    cdouble c_e, c_f, c_g;

    AtomState(cdouble e_, cdouble f_, cdouble g_);

    cdouble amplitude(Level l) const {
        return l == Level::e ? c_e : (l == Level::f ? c_f : c_g);
    }

    static AtomState excited() { return AtomState(1.0, 0.0, 0.0); }
    static AtomState intermediate() { return AtomState(0.0, 1.0, 0.0); }
    static AtomState ground() { return AtomState(0.0, 0.0, 1.0); }
};

// One cavity crossing: which atom enters and for how long.
struct PassSpec {
    AtomState atom;
    double duration;

    PassSpec(AtomState atom_, double duration_) : atom(atom_), duration(duration_) {
        if (!(duration >= 0.0)) {
            throw std::invalid_argument("PassSpec: duration must be >= 0");
        }
    }
};

// Basis ket of the joint system: atom levels in pass order plus a Fock index.
struct Ket {
    std::string levels;
    int photons;

    friend auto operator<=>(const Ket&, const Ket&) = default;
};

struct AmplitudeRecord {
    std::string levels;
    int photons;
    double re;
    double im;
};

class CutoffExceededError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ZeroProbabilityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ProjectionResult;

// Sparse pure state of (atoms so far) x (cavity mode truncated at photon_cutoff).
// Amplitudes below 1e-15 in magnitude are dropped. States returned by the
// operations below are normalized; none of the operations mutate their input.
class JointState {
public:
    static constexpr double kAmplitudeFloor = 1e-15;

    int num_atoms() const { return num_atoms_; }
    int photon_cutoff() const { return cutoff_; }
    const std::map<Ket, cdouble>& amplitudes() const { return amps_; }
    double norm_squared() const;
    // Sorted flattening used by the CLI emitters and golden tests.
    std::vector<AmplitudeRecord> records() const;

    friend JointState vacuum_joint_state(int cutoff);
    friend JointState fock_joint_state(int photons, int cutoff);
    friend JointState pass_atom(const JointState&, const PassSpec&, const InteractionParams&);
    friend ProjectionResult project_cavity(const JointState&, int photons);
    friend ProjectionResult project_last_atom(const JointState&, Level outcome);

private:
    JointState(int num_atoms, int cutoff) : num_atoms_(num_atoms), cutoff_(cutoff) {}
    void insert(Ket ket, cdouble amp);
    void require_normalized(const char* where) const;

    int num_atoms_;
    int cutoff_;
    std::map<Ket, cdouble> amps_;
};

struct ProjectionResult {
    JointState state;
    double probability;
};

// Zero atoms, cavity in vacuum. The three-atom protocol reaches |g,g,g,3>,
// so cutoffs below 3 are rejected.
JointState vacuum_joint_state(int cutoff);

// Zero atoms, cavity in the Fock state |photons>.
JointState fock_joint_state(int photons, int cutoff);

// Sends one more (unentangled) atom through the cavity: decomposes every
// branch into invariant subspaces, applies the closed-form propagator for the
// pass duration, and appends the atom to the configuration tuple. Exactly
// norm-preserving; raises CutoffExceededError if any populated subspace would
// reach a photon number above the cutoff.
JointState pass_atom(const JointState& state, const PassSpec& pass, const InteractionParams& p);

// Projects the cavity onto |photons>, removing the photon index from the kept
// branches. Returns the renormalized state and the branch probability.
ProjectionResult project_cavity(const JointState& state, int photons);

// Projects the most recently passed atom onto `outcome` and discards it.
ProjectionResult project_last_atom(const JointState& state, Level outcome);

}  // namespace sss
