#include "doctest.h"

#include <cmath>
#include <complex>
#include <map>

#include "sss/metrics.hpp"
#include "test_helpers.hpp"

using namespace sss;
using doctest::Approx;

namespace {

PureAtomicState swapped_atoms(const PureAtomicState& s, int i, int j) {
    std::map<std::string, cdouble> amps;
    for (const auto& [key, amp] : s.amplitudes()) {
        std::string k = key;
        std::swap(k[i], k[j]);
        amps[k] = amp;
    }
    return PureAtomicState::from_amplitudes(s.num_atoms(), s.levels_per_atom(), std::move(amps));
}

double negation_distance(const PureAtomicState& a, const PureAtomicState& b) {
    double worst = 0.0;
    for (const auto& [key, amp] : a.amplitudes()) {
        worst = std::max(worst, std::abs(amp + b.amplitudes().at(key)));
    }
    return worst;
}

}  // namespace

TEST_CASE("supersinglet(2) is the two-particle singlet") {
    const PureAtomicState s2 = supersinglet(2);
    CHECK(s2.amplitudes().size() == 2);
    CHECK(std::abs(s2.amplitudes().at("01") - cdouble{std::sqrt(0.5), 0.0}) < 1e-15);
    CHECK(std::abs(s2.amplitudes().at("10") + cdouble{std::sqrt(0.5), 0.0}) < 1e-15);
}

TEST_CASE("supersinglet(3) carries the six signed permutations") {
    const PureAtomicState s3 = supersinglet(3);
    const double a = 1.0 / std::sqrt(6.0);
    // digits (0,1,2) = (g,f,e): +|gfe> -|gef> -|fge> +|feg> +|egf> -|efg>
    const std::map<std::string, double> expected = {{"012", a},  {"021", -a}, {"102", -a},
                                                    {"120", a},  {"201", a},  {"210", -a}};
    CHECK(s3.amplitudes().size() == 6);
    for (const auto& [key, value] : expected) {
        CHECK(std::abs(s3.amplitudes().at(key) - cdouble{value, 0.0}) < 1e-15);
    }
}

TEST_CASE("supersinglet: antisymmetry and exact normalization") {
    for (int n = 2; n <= 4; ++n) {
        const PureAtomicState s = supersinglet(n);
        double norm2 = 0.0;
        for (const auto& [key, amp] : s.amplitudes()) {
            norm2 += std::norm(amp);
        }
        CHECK(norm2 == Approx(1.0).epsilon(1e-15));
        for (int i = 0; i + 1 < n; ++i) {
            CHECK(negation_distance(swapped_atoms(s, i, i + 1), s) < 1e-15);
        }
    }
    CHECK_THROWS_AS(supersinglet(1), std::invalid_argument);
    CHECK_THROWS_AS(supersinglet(7), std::invalid_argument);
}

TEST_CASE("fidelity: trivial values and dimension guard") {
    const PureAtomicState s3 = supersinglet(3);
    CHECK(fidelity(s3, s3) == Approx(1.0).epsilon(1e-14));

    const PureAtomicState fff =
        PureAtomicState::from_amplitudes(3, 3, {{"111", cdouble{1.0, 0.0}}});
    CHECK(fidelity(fff, s3) == 0.0);

    CHECK_THROWS_AS(fidelity(supersinglet(2), s3), std::invalid_argument);
}

TEST_CASE("fidelity is invariant under a global phase") {
    const PureAtomicState s3 = supersinglet(3);
    const PureAtomicState rotated = s3.rotated(std::polar(1.0, 1.234));
    CHECK(std::abs(fidelity(rotated, s3) - 1.0) < 1e-15);

    auto gen = testing::rng(31);
    for (int i = 0; i < 20; ++i) {
        const double phase = testing::uniform(gen, 0, 6.28);
        CHECK(std::abs(fidelity(s3.rotated(std::polar(1.0, phase)), s3) - 1.0) < 1e-15);
    }
}

TEST_CASE("fidelity_formula: single surviving cross term gives 1/6") {
    ProtocolCoefficients c{};
    c.f1_from_e0 = 1.0;
    c.e0_from_f1 = 1.0;
    CHECK(fidelity_formula(c) == Approx(1.0 / 6.0).epsilon(1e-15));
    CHECK(success_probability_formula(c) == Approx(1.0).epsilon(1e-15));
}

TEST_CASE("fidelity_formula reproduces the published anchors") {
    const auto c1 = protocol_coefficients(23, 1, 45, InteractionParams(1, 1, 0));
    CHECK(std::abs(fidelity_formula(c1) - 0.976124) < 1e-4);

    const auto c3 = protocol_coefficients(15, 38, 95, InteractionParams(17.5, 17.5, 0));
    CHECK(std::abs(fidelity_formula(c3) - 0.963001) < 1e-4);
}

TEST_CASE("formula path agrees with the inner-product path") {
    auto gen = testing::rng(32);
    for (int i = 0; i < 100; ++i) {
        const double g = i % 2 == 0 ? 1.0 : 17.5;
        const double delta = i % 4 < 2 ? 0.0 : 0.1 * g;
        const InteractionParams p(g, g, delta);
        const double t1 = testing::uniform(gen, 0.1, 100);
        const double t2 = testing::uniform(gen, 0.1, 100);
        const double t3 = testing::uniform(gen, 0.1, 100);

        JointState s = vacuum_joint_state(6);
        s = pass_atom(s, PassSpec(AtomState::excited(), t1), p);
        s = pass_atom(s, PassSpec(AtomState::intermediate(), t2), p);
        s = pass_atom(s, PassSpec(AtomState::ground(), t3), p);
        const ProjectionResult vac = project_cavity(s, 0);
        const double f_inner = fidelity(atomic_state(vac.state), supersinglet(3));
        const double f_formula = fidelity_formula(protocol_coefficients(t1, t2, t3, p));
        CHECK(std::abs(f_inner - f_formula) < 1e-12);
    }
}

TEST_CASE("atomic_state requires a projected-out cavity") {
    const InteractionParams p(1, 1, 0);
    JointState s = vacuum_joint_state(6);
    s = pass_atom(s, PassSpec(AtomState::excited(), 5.0), p);
    CHECK_THROWS_AS(atomic_state(s), std::invalid_argument);
}
