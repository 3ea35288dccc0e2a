#include "sss/joint_state.hpp"

#include <cmath>

namespace sss {

namespace {

// Subspace row index of an atomic level within a subspace (-1 if absent).
int row_of_level(SubspaceIndex n, Level l) {
    if (n.n >= 0) {
        return 2 - excitation(l);  // e -> 0, f -> 1, g -> 2
    }
    if (n.n == -1) {
        return l == Level::f ? 0 : (l == Level::g ? 1 : -1);
    }
    return l == Level::g ? 0 : -1;
}

Level level_of_row(SubspaceIndex n, int row) {
    if (n.n >= 0) {
        return row == 0 ? Level::e : (row == 1 ? Level::f : Level::g);
    }
    if (n.n == -1) {
        return row == 0 ? Level::f : Level::g;
    }
    return Level::g;
}

constexpr Level kLevels[3] = {Level::e, Level::f, Level::g};

}  // namespace

AtomState::AtomState(cdouble e_, cdouble f_, cdouble g_) : c_e(e_), c_f(f_), c_g(g_) {
    const double n2 = std::norm(c_e) + std::norm(c_f) + std::norm(c_g);
    if (std::abs(n2 - 1.0) > 1e-12) {
        throw std::invalid_argument("AtomState: amplitudes must be normalized within 1e-12");
    }
}

double JointState::norm_squared() const {
    double acc = 0.0;
    for (const auto& [ket, amp] : amps_) {
        acc += std::norm(amp);
    }
    return acc;
}

std::vector<AmplitudeRecord> JointState::records() const {
    std::vector<AmplitudeRecord> out;
    out.reserve(amps_.size());
    for (const auto& [ket, amp] : amps_) {
        out.push_back({ket.levels, ket.photons, amp.real(), amp.imag()});
    }
    return out;
}

void JointState::insert(Ket ket, cdouble amp) {
    if (std::abs(amp) < kAmplitudeFloor) {
        return;
    }
    amps_[std::move(ket)] = amp;
}

void JointState::require_normalized(const char* where) const {
    if (std::abs(norm_squared() - 1.0) > 1e-10) {
        throw std::invalid_argument(std::string(where) + ": state is not normalized");
    }
}

JointState vacuum_joint_state(int cutoff) {
    if (cutoff < 3) {
        throw std::invalid_argument(
            "vacuum_joint_state: photon cutoff must be >= 3 (the protocol reaches |g,g,g,3>)");
    }
    JointState s(0, cutoff);
    s.insert(Ket{"", 0}, 1.0);
    return s;
}

JointState fock_joint_state(int photons, int cutoff) {
    if (cutoff < 3) {
        throw std::invalid_argument("fock_joint_state: photon cutoff must be >= 3");
    }
    if (photons < 0 || photons > cutoff) {
        throw std::invalid_argument("fock_joint_state: photon number outside [0, cutoff]");
    }
    JointState s(0, cutoff);
    s.insert(Ket{"", photons}, 1.0);
    return s;
}

JointState pass_atom(const JointState& state, const PassSpec& pass, const InteractionParams& p) {
    state.require_normalized("pass_atom");

    // Group the product (prior branch) x (new atom) by invariant subspace:
    // the component (l, nph) lives in the subspace holding (e,n), (f,n+1),
    // (g,n+2), i.e. n = nph - (2 - excitation(l)).
    struct Group {
        cdouble in[3] = {0.0, 0.0, 0.0};
    };
    std::map<std::pair<std::string, int>, Group> groups;
    for (const auto& [ket, amp] : state.amplitudes()) {
        for (Level l : kLevels) {
            const cdouble joint = amp * pass.atom.amplitude(l);
            if (std::abs(joint) < JointState::kAmplitudeFloor) {
                continue;
            }
            const int n_sub = ket.photons - (2 - excitation(l));
            const SubspaceIndex n(n_sub);
            groups[{ket.levels, n_sub}].in[row_of_level(n, l)] += joint;
        }
    }

    JointState out(state.num_atoms() + 1, state.photon_cutoff());
    for (const auto& [key, group] : groups) {
        const auto& [prior_levels, n_sub] = key;
        const SubspaceIndex n(n_sub);
        if (n.n >= -1 && n.n + 2 > state.photon_cutoff()) {
            throw CutoffExceededError(
                "pass_atom: a populated subspace reaches photon number " +
                std::to_string(n.n + 2) + " above the cutoff " +
                std::to_string(state.photon_cutoff()));
        }
        const SubspacePropagator u = propagator(n, pass.duration, p);
        cdouble evolved[3];
        u.apply(group.in, evolved);
        for (int r = 0; r < u.dim; ++r) {
            Ket ket{prior_levels + to_char(level_of_row(n, r)), n.photon_of_row(r)};
            out.insert(std::move(ket), evolved[r]);
        }
    }
    return out;
}

ProjectionResult project_cavity(const JointState& state, int photons) {
    state.require_normalized("project_cavity");
    if (photons < 0 || photons > state.photon_cutoff()) {
        throw std::invalid_argument("project_cavity: photon number outside [0, cutoff]");
    }
    double prob = 0.0;
    for (const auto& [ket, amp] : state.amplitudes()) {
        if (ket.photons == photons) {
            prob += std::norm(amp);
        }
    }
    if (prob < 1e-30) {
        throw ZeroProbabilityError("project_cavity: projection branch has zero probability");
    }
    const double inv = 1.0 / std::sqrt(prob);
    JointState kept(state.num_atoms(), state.photon_cutoff());
    for (const auto& [ket, amp] : state.amplitudes()) {
        if (ket.photons == photons) {
            kept.insert(Ket{ket.levels, 0}, amp * inv);
        }
    }
    return {std::move(kept), prob};
}

ProjectionResult project_last_atom(const JointState& state, Level outcome) {
    state.require_normalized("project_last_atom");
    if (state.num_atoms() == 0) {
        throw std::invalid_argument("project_last_atom: state has no atoms");
    }
    const char wanted = to_char(outcome);
    double prob = 0.0;
    for (const auto& [ket, amp] : state.amplitudes()) {
        if (ket.levels.back() == wanted) {
            prob += std::norm(amp);
        }
    }
    if (prob < 1e-30) {
        throw ZeroProbabilityError("project_last_atom: measurement outcome has zero probability");
    }
    const double inv = 1.0 / std::sqrt(prob);
    JointState kept(state.num_atoms() - 1, state.photon_cutoff());
    for (const auto& [ket, amp] : state.amplitudes()) {
        if (ket.levels.back() == wanted) {
            kept.insert(Ket{ket.levels.substr(0, ket.levels.size() - 1), ket.photons}, amp * inv);
        }
    }
    return {std::move(kept), prob};
}

}  // namespace sss
