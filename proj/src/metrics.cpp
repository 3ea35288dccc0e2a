#include "sss/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace sss {

namespace {

int inversion_parity(const std::vector<int>& perm) {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        for (std::size_t j = i + 1; j < perm.size(); ++j) {
            if (perm[i] > perm[j]) {
                ++inversions;
            }
        }
    }
    return inversions % 2;
}

}  // namespace

PureAtomicState PureAtomicState::from_amplitudes(int num_atoms, int levels_per_atom,
                                                 std::map<std::string, cdouble> amps) {
    if (num_atoms < 1 || levels_per_atom < 2) {
        throw std::invalid_argument("PureAtomicState: need >= 1 atom and >= 2 levels");
    }
    double n2 = 0.0;
    for (const auto& [key, amp] : amps) {
        if (static_cast<int>(key.size()) != num_atoms) {
            throw std::invalid_argument("PureAtomicState: key length != num_atoms");
        }
        for (char d : key) {
            if (d < '0' || d >= '0' + levels_per_atom) {
                throw std::invalid_argument("PureAtomicState: digit outside level range");
            }
        }
        n2 += std::norm(amp);
    }
    if (std::abs(n2 - 1.0) > 1e-12) {
        throw std::invalid_argument("PureAtomicState: amplitudes must be normalized within 1e-12");
    }
    PureAtomicState s(num_atoms, levels_per_atom);
    s.amps_ = std::move(amps);
    return s;
}

PureAtomicState PureAtomicState::rotated(cdouble phase) const {
    if (std::abs(std::abs(phase) - 1.0) > 1e-12) {
        throw std::invalid_argument("PureAtomicState::rotated: |phase| must be 1");
    }
    PureAtomicState s(num_atoms_, levels_per_atom_);
    for (const auto& [key, amp] : amps_) {
        s.amps_[key] = amp * phase;
    }
    return s;
}

PureAtomicState supersinglet(int num_particles) {
    if (num_particles < 2 || num_particles > 6) {
        throw std::invalid_argument("supersinglet: supported range is 2 <= N <= 6");
    }
    std::vector<int> perm(num_particles);
    std::iota(perm.begin(), perm.end(), 0);
    double factorial = 1.0;
    for (int k = 2; k <= num_particles; ++k) {
        factorial *= k;
    }
    const double scale = 1.0 / std::sqrt(factorial);

    std::map<std::string, cdouble> amps;
    do {
        std::string key(perm.size(), '0');
        for (std::size_t i = 0; i < perm.size(); ++i) {
            key[i] = static_cast<char>('0' + perm[i]);
        }
        amps[key] = inversion_parity(perm) == 0 ? scale : -scale;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return PureAtomicState::from_amplitudes(num_particles, num_particles, std::move(amps));
}

double fidelity(const PureAtomicState& state, const PureAtomicState& target) {
    if (state.num_atoms() != target.num_atoms() ||
        state.levels_per_atom() != target.levels_per_atom()) {
        throw std::invalid_argument("fidelity: state and target dimensions differ");
    }
    cdouble overlap{0.0, 0.0};
    for (const auto& [key, amp] : target.amplitudes()) {
        auto it = state.amplitudes().find(key);
        if (it != state.amplitudes().end()) {
            overlap += std::conj(amp) * it->second;
        }
    }
    return std::norm(overlap);
}

PureAtomicState atomic_state(const JointState& state) {
    if (state.num_atoms() < 1) {
        throw std::invalid_argument("atomic_state: joint state has no atoms");
    }
    std::map<std::string, cdouble> amps;
    for (const auto& [ket, amp] : state.amplitudes()) {
        if (ket.photons != 0) {
            throw std::invalid_argument("atomic_state: cavity has not been projected out");
        }
        std::string key(ket.levels.size(), '0');
        for (std::size_t i = 0; i < ket.levels.size(); ++i) {
            key[i] = static_cast<char>('0' + excitation(ket.levels[i]));
        }
        amps[key] = amp;
    }
    return PureAtomicState::from_amplitudes(state.num_atoms(), 3, std::move(amps));
}

ProtocolCoefficients protocol_coefficients(double t1, double t2, double t3,
                                           const InteractionParams& p) {
    const SubspacePropagator u0_t1 = propagator(0, t1, p);
    const SubspacePropagator um1_t2 = propagator(-1, t2, p);
    const SubspacePropagator u0_t2 = propagator(0, t2, p);
    const SubspacePropagator u1_t2 = propagator(1, t2, p);
    const SubspacePropagator um1_t3 = propagator(-1, t3, p);
    const SubspacePropagator u0_t3 = propagator(0, t3, p);
    const SubspacePropagator u1_t3 = propagator(1, t3, p);

    ProtocolCoefficients c{};
    c.e0_from_e0 = u0_t1(0, 0);
    c.f1_from_e0 = u0_t1(1, 0);
    c.g2_from_e0 = u0_t1(2, 0);

    c.f0_from_f0 = um1_t2(0, 0);
    c.g1_from_f0 = um1_t2(1, 0);
    c.e0_from_f1 = u0_t2(0, 1);
    c.f1_from_f1 = u0_t2(1, 1);
    c.g2_from_f1 = u0_t2(2, 1);
    c.e1_from_f2 = u1_t2(0, 1);
    c.f2_from_f2 = u1_t2(1, 1);
    c.g3_from_f2 = u1_t2(2, 1);

    c.f0_from_g1 = um1_t3(0, 1);
    c.g1_from_g1 = um1_t3(1, 1);
    c.e0_from_g2 = u0_t3(0, 2);
    c.f1_from_g2 = u0_t3(1, 2);
    c.g2_from_g2 = u0_t3(2, 2);
    c.e1_from_g3 = u1_t3(0, 2);
    c.f2_from_g3 = u1_t3(1, 2);
    c.g3_from_g3 = u1_t3(2, 2);
    return c;
}

double success_probability_formula(const ProtocolCoefficients& c) {
    const cdouble a_efg = c.e0_from_e0 * c.f0_from_f0;
    const cdouble a_egf = c.e0_from_e0 * c.g1_from_f0 * c.f0_from_g1;
    const cdouble a_fff = c.f1_from_e0 * c.f1_from_f1 * c.f0_from_g1;
    const cdouble a_feg = c.f1_from_e0 * c.e0_from_f1;
    const cdouble a_fge = c.f1_from_e0 * c.g2_from_f1 * c.e0_from_g2;
    const cdouble a_gfe = c.g2_from_e0 * c.f2_from_f2 * c.e0_from_g2;
    const cdouble a_gef = c.g2_from_e0 * c.e1_from_f2 * c.f0_from_g1;
    return std::norm(a_efg) + std::norm(a_egf) + std::norm(a_fff) + std::norm(a_feg) +
           std::norm(a_fge) + std::norm(a_gfe) + std::norm(a_gef);
}

double fidelity_formula(const ProtocolCoefficients& c) {
    const cdouble sum = -c.e0_from_e0 * c.f0_from_f0 +
                        c.e0_from_e0 * c.g1_from_f0 * c.f0_from_g1 +
                        c.f1_from_e0 * c.e0_from_f1 -
                        c.f1_from_e0 * c.g2_from_f1 * c.e0_from_g2 +
                        c.g2_from_e0 * c.f2_from_f2 * c.e0_from_g2 -
                        c.g2_from_e0 * c.e1_from_f2 * c.f0_from_g1;
    return std::norm(sum) / (6.0 * success_probability_formula(c));
}

}  // namespace sss
