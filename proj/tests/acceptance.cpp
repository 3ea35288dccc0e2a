// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "sss/detection.hpp"
#include "sss/joint_state.hpp"
#include "sss/metrics.hpp"
#include "sss/ode_oracle.hpp"
#include "sss/propagator.hpp"
#include "sss/search.hpp"

using namespace sss;

namespace {

int g_failures = 0;

void report(int id, const char* name, bool pass, const std::string& detail) {
    std::printf("%s  criterion %d: %s (%s)\n", pass ? "PASS" : "FAIL", id, name, detail.c_str());
    if (!pass) {
        ++g_failures;
    }
}

std::string fmt(const char* format, double a, double b = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), format, a, b);
    return buf;
}

JointState protocol_state(double t1, double t2, double t3, const InteractionParams& p) {
    JointState s = vacuum_joint_state(6);
    s = pass_atom(s, PassSpec(AtomState::excited(), t1), p);
    s = pass_atom(s, PassSpec(AtomState::intermediate(), t2), p);
    s = pass_atom(s, PassSpec(AtomState::ground(), t3), p);
    return s;
}

void criterion_1_oracle_equivalence() {
    struct Cell {
        int n;
        double g;
        double delta;
        double t;
    };
    std::vector<Cell> cells;
    for (int n = -2; n <= 4; ++n) {
        for (double g : {1.0, 17.5}) {
            for (double dfrac : {0.0, 0.1, 0.5}) {
                for (double t : {0.5, 5.0, 23.0, 95.0}) {
                    cells.push_back({n, g, dfrac * g, t});
                }
            }
        }
    }
    double worst = 0.0;
#pragma omp parallel for schedule(dynamic) reduction(max : worst)
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const Cell& c = cells[i];
        const InteractionParams p(c.g, c.g, c.delta);
        const SubspacePropagator closed = propagator(c.n, c.t, p);
        const SubspacePropagator ode =
            integrate_propagator(c.n, c.t, p, OdeConfig::for_subspace(c.n, p));
        double dev = 0.0;
        for (int k = 0; k < closed.dim * closed.dim; ++k) {
            dev = std::max(dev, std::abs(closed.entries[k] - ode.entries[k]));
        }
        worst = std::max(worst, dev);
    }
    report(1, "closed-form propagator matches the RK4 oracle within 1e-6", worst < 1e-6,
           fmt("168 cells, max entry deviation %.3g", worst));
}

void criterion_2_unitarity_and_norm() {
    std::mt19937_64 gen(2024);
    auto uniform = [&gen](double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(gen);
    };
    double worst_u = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const double g1 = uniform(0.1, 20.0);
        const double g2 = uniform(0.1, 20.0);
        const double gmax = std::max(g1, g2);
        const InteractionParams p(g1, g2, uniform(-gmax, gmax));
        const int n = static_cast<int>(uniform(-2.0, 7.0));
        worst_u = std::max(worst_u, propagator(n, uniform(0.0, 100.0), p).unitarity_defect());
    }

    double worst_norm = 0.0;
    for (int i = 0; i < 50; ++i) {
        const double g = i % 2 == 0 ? 1.0 : 17.5;
        const InteractionParams p(g, g, i % 3 == 0 ? 0.1 * g : 0.0);
        JointState s = vacuum_joint_state(6);
        const AtomState atoms[3] = {AtomState::excited(), AtomState::intermediate(),
                                    AtomState::ground()};
        for (const AtomState& atom : atoms) {
            s = pass_atom(s, PassSpec(atom, uniform(0.0, 100.0)), p);
            worst_norm = std::max(worst_norm, std::abs(s.norm_squared() - 1.0));
        }
    }
    const bool pass = worst_u < 1e-10 && worst_norm < 1e-10;
    report(2, "unitarity of 10^4 random propagators and protocol norm preservation", pass,
           fmt("max |U+U - I| = %.3g, max norm defect = %.3g", worst_u, worst_norm));
}

bool check_row(double t1, double t2, double t3, double g, double delta, double f_expected,
               double p_percent_expected, double tol_f, double tol_pp, double& dev_f,
               double& dev_pp) {
    const ScanRecord r = evaluate_protocol_point(t1, t2, t3, g, delta);
    dev_f = std::abs(r.fidelity - f_expected);
    dev_pp = std::abs(100.0 * r.success_prob - p_percent_expected);
    return dev_f < tol_f && dev_pp < tol_pp;
}

void criterion_3_table1_anchors() {
    double f1, p1, f2, p2;
    const bool a = check_row(23, 1, 45, 1.0, 0.0, 0.976124, 62.9, 1e-4, 0.1, f1, p1);
    const bool b = check_row(12, 1, 45, 1.0, 0.0, 0.975297, 67.0, 1e-4, 0.1, f2, p2);
    report(3, "table 1 anchor rows (23,1,45) and (12,1,45)", a && b,
           fmt("|dF| = %.2g / %.2g", f1, f2) + fmt(", |dP| = %.2g / %.2g pp", p1, p2));
}

void criterion_4_table3_anchors() {
    double f1, p1, f2, p2;
    const bool a = check_row(15, 38, 95, 17.5, 0.0, 0.963001, 32.0, 1e-4, 0.1, f1, p1);
    const bool b = check_row(55, 38, 25, 17.5, 0.0, 0.950950, 54.3, 1e-4, 0.1, f2, p2);
    report(4, "table 3 anchor rows (15,38,95) and (55,38,25)", a && b,
           fmt("|dF| = %.2g / %.2g", f1, f2) + fmt(", |dP| = %.2g / %.2g pp", p1, p2));
}

void criterion_5_detuned_rows() {
    double f1, p1, f2, p2;
    const bool a = check_row(5, 1, 2, 1.0, 0.1, 0.923425, 65.1, 1e-3, 0.2, f1, p1);
    const bool b = check_row(18, 27, 50, 17.5, 1.75, 0.921186, 20.4, 1e-3, 0.2, f2, p2);
    report(5, "off-resonance rows, tables 2 and 4", a && b,
           fmt("|dF| = %.2g / %.2g", f1, f2) + fmt(", |dP| = %.2g / %.2g pp", p1, p2));
}

void criterion_6_detection() {
    const InteractionParams p(1, 1, 0);
    const DetectionSpec one_aux(4.71, 1, p);
    const double r1 = aux_pass_and_measure(fock_joint_state(1, 6), one_aux).residual_nonvacuum;
    const double r2 = aux_pass_and_measure(fock_joint_state(2, 6), one_aux).residual_nonvacuum;
    const double r3 = aux_pass_and_measure(fock_joint_state(3, 6), one_aux).residual_nonvacuum;
    const double r2_two =
        aux_pass_and_measure(fock_joint_state(2, 6), DetectionSpec(4.71, 2, p)).residual_nonvacuum;
    const double t_opt = optimal_aux_time(p, TimeWindow(4, 5));

    const bool pass = r1 < 1e-5 && r2 >= 0.016 && r2 <= 0.019 && r3 >= 0.016 && r3 <= 0.019 &&
                      r2_two <= 4e-4 &&
                      std::abs(t_opt - 1.5 * std::numbers::pi) < 1e-3;
    report(6, "auxiliary-atom residuals and optimal t' on [4,5]", pass,
           fmt("residuals %.2g / %.4g", r1, r2) + fmt(" / %.4g, two-aux %.2g", r3, r2_two) +
               fmt(", t' = %.6f", t_opt));
}

void criterion_7_detuning_monotonicity() {
    const double f0 = evaluate_protocol_point(23, 1, 45, 1.0, 0.0).fidelity;
    bool pass = true;
    double worst_excess = 0.0;
    for (int k = 1; k <= 20; ++k) {
        const double delta = static_cast<double>(k) / 20.0;
        const double f = evaluate_protocol_point(23, 1, 45, 1.0, delta).fidelity;
        worst_excess = std::max(worst_excess, f - f0);
        pass = pass && f <= f0;
    }
    report(7, "fidelity at delta = 0 dominates 20 sampled detunings in (0, g]", pass,
           fmt("F(0) = %.6f, max F(delta) - F(0) = %.3g", f0, worst_excess));
}

void criterion_8_structure() {
    const InteractionParams p(1, 1, 0);
    const JointState s = protocol_state(23, 1, 45, p);
    std::set<Ket> kets;
    for (const auto& [ket, amp] : s.amplitudes()) {
        kets.insert(ket);
    }
    const std::set<Ket> expected_pass3 = {
        {"efg", 0}, {"egg", 1}, {"egf", 0}, {"ffg", 1}, {"fff", 0}, {"feg", 0},
        {"fgg", 2}, {"fgf", 1}, {"fge", 0}, {"gfg", 2}, {"gff", 1}, {"gfe", 0},
        {"geg", 1}, {"gef", 0}, {"ggg", 3}, {"ggf", 2}, {"gge", 1}};
    const bool branches_ok = kets == expected_pass3;

    const ProjectionResult vac = project_cavity(s, 0);
    std::set<Ket> vac_kets;
    for (const auto& [ket, amp] : vac.state.amplitudes()) {
        vac_kets.insert(ket);
    }
    const std::set<Ket> expected_vacuum = {{"efg", 0}, {"egf", 0}, {"fff", 0}, {"feg", 0},
                                           {"fge", 0}, {"gfe", 0}, {"gef", 0}};
    const bool vacuum_ok = vac_kets == expected_vacuum;

    const PureAtomicState s3 = supersinglet(3);
    bool antisym_ok = true;
    for (const auto& [i, j] : std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {0, 2}}) {
        for (const auto& [key, amp] : s3.amplitudes()) {
            std::string swapped = key;
            std::swap(swapped[i], swapped[j]);
            antisym_ok = antisym_ok && std::abs(amp + s3.amplitudes().at(swapped)) < 1e-15;
        }
    }
    const bool self_fidelity_ok = std::abs(fidelity(s3, s3) - 1.0) < 1e-14;

    report(8, "branch structure of the three-pass and post-selected states; antisymmetry",
           branches_ok && vacuum_ok && antisym_ok && self_fidelity_ok,
           fmt("branches %g/17, vacuum %g/7", static_cast<double>(kets.size()),
               static_cast<double>(vac_kets.size())) +
               (antisym_ok ? ", antisymmetric" : ", antisymmetry BROKEN") +
               fmt(", F(S3,S3) - 1 = %.2g", fidelity(s3, s3) - 1.0));
}

void criterion_9_dual_paths() {
    std::mt19937_64 gen(909);
    auto uniform = [&gen](double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(gen);
    };
    double worst_f = 0.0;
    double worst_p = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double g = i % 2 == 0 ? 1.0 : 17.5;
        const double delta = i % 4 < 2 ? 0.0 : 0.1 * g;
        const InteractionParams p(g, g, delta);
        const double t1 = uniform(0.1, 100.0);
        const double t2 = uniform(0.1, 100.0);
        const double t3 = uniform(0.1, 100.0);

        const ProjectionResult vac = project_cavity(protocol_state(t1, t2, t3, p), 0);
        const double f_inner = fidelity(atomic_state(vac.state), supersinglet(3));
        const ProtocolCoefficients c = protocol_coefficients(t1, t2, t3, p);
        worst_f = std::max(worst_f, std::abs(f_inner - fidelity_formula(c)));
        worst_p = std::max(worst_p, std::abs(vac.probability - success_probability_formula(c)));
    }
    report(9, "fidelity and success probability agree across both code paths",
           worst_f < 1e-12 && worst_p < 1e-12,
           fmt("100 draws, max |dF| = %.3g, max |dP| = %.3g", worst_f, worst_p));
}

}  // namespace

int main() {
    criterion_1_oracle_equivalence();
    criterion_2_unitarity_and_norm();
    criterion_3_table1_anchors();
    criterion_4_table3_anchors();
    criterion_5_detuned_rows();
    criterion_6_detection();
    criterion_7_detuning_monotonicity();
    criterion_8_structure();
    criterion_9_dual_paths();

    if (g_failures == 0) {
        std::printf("all 9 criteria passed\n");
        return 0;
    }
    std::printf("%d criteria FAILED\n", g_failures);
    return 1;
}
