// Command-line front end for the supersinglet protocol simulator.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>

#include "CLI11.hpp"

#include "sss/detection.hpp"
#include "sss/io.hpp"
#include "sss/joint_state.hpp"
#include "sss/metrics.hpp"
#include "sss/ode_oracle.hpp"
#include "sss/reference_tables.hpp"
#include "sss/search.hpp"

namespace {

using namespace sss;

// Coupling/detuning/output options shared by every subcommand. Couplings are
// angular: the --mhz-angular alias makes the "g = 1 MHz" convention explicit
// (1 MHz of angular frequency = 1 rad/us).
struct CommonOpts {
    double g = 1.0;
    std::optional<double> g1;
    std::optional<double> g2;
    double delta = 0.0;
    int cutoff = 6;
    std::string output;
    std::string format = "text";
    std::uint64_t seed = 12345;

    InteractionParams params() const {
        return InteractionParams(g1.value_or(g), g2.value_or(g), delta);
    }
};

void add_coupling_options(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--g,--mhz-angular", opts.g,
                    "symmetric coupling g1 = g2 in rad/us (angular MHz)")
        ->capture_default_str();
    cmd->add_option("--g1", opts.g1, "override for the e<->f coupling (rad/us)");
    cmd->add_option("--g2", opts.g2, "override for the f<->g coupling (rad/us)");
    cmd->add_option("--delta", opts.delta, "detuning in rad/us")->capture_default_str();
}

void add_output_options(CLI::App* cmd, CommonOpts& opts, const std::string& formats) {
    cmd->add_option("--output,-o", opts.output,
                    "output file (default stdout; relative paths resolve against "
                    "$SUPERSINGLET_OUTPUT_DIR when set)");
    cmd->add_option("--format", opts.format, "output format: " + formats)
        ->capture_default_str();
}

std::array<double, 3> to_times(const std::vector<double>& values) {
    return {values[0], values[1], values[2]};
}

void add_times_option(CLI::App* cmd, std::vector<double>& target) {
    cmd->add_option("--times", target, "interaction times t1,t2,t3 in us")
        ->required()
        ->expected(3)
        ->delimiter(',');
}

// "x" -> fixed value; "start:stop:step" -> range.
struct AxisSpec {
    std::optional<double> fixed;
    std::optional<AxisRange> range;
};

AxisSpec parse_axis(const std::string& text) {
    AxisSpec spec;
    double a = 0.0, b = 0.0, c = 0.0;
    char extra = '\0';
    if (std::sscanf(text.c_str(), "%lf:%lf:%lf%c", &a, &b, &c, &extra) == 3) {
        spec.range = AxisRange(a, b, c);
        return spec;
    }
    if (std::sscanf(text.c_str(), "%lf%c", &a, &extra) == 1) {
        spec.fixed = a;
        return spec;
    }
    throw CLI::ValidationError("axis", "expected 'value' or 'start:stop:step': " + text);
}

void write_output(const std::string& content, const std::string& path) {
    if (path.empty()) {
        std::fputs(content.c_str(), stdout);
        return;
    }
    std::filesystem::path target(path);
    if (target.is_relative()) {
        if (const char* dir = std::getenv("SUPERSINGLET_OUTPUT_DIR")) {
            target = std::filesystem::path(dir) / target;
        }
    }
    std::ofstream out(target, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open output file: " + target.string());
    }
    out << content;
}

ProtocolRunReport run_protocol(const std::array<double, 3>& times, const CommonOpts& opts,
                               bool auxiliary, double t_prime, int num_aux) {
    const InteractionParams p = opts.params();
    JointState state = vacuum_joint_state(opts.cutoff);
    state = pass_atom(state, PassSpec(AtomState::excited(), times[0]), p);
    state = pass_atom(state, PassSpec(AtomState::intermediate(), times[1]), p);
    state = pass_atom(state, PassSpec(AtomState::ground(), times[2]), p);

    ProtocolRunReport report;
    report.record.t1 = times[0];
    report.record.t2 = times[1];
    report.record.t3 = times[2];
    report.record.g = opts.g1 || opts.g2 ? p.g1 : opts.g;
    report.record.delta = opts.delta;

    if (auxiliary) {
        const DetectionSpec spec(t_prime, num_aux, p);
        const AuxMeasureResult aux = aux_pass_and_measure(state, spec);
        const CertifiedVacuumResult cert = certified_vacuum_protocol(state, spec);
        report.auxiliary = true;
        report.t_prime = t_prime;
        report.num_aux = num_aux;
        report.residual_nonvacuum = aux.residual_nonvacuum;
        report.error_bound = cert.error_bound;
        report.vacuum_confidence = cert.vacuum_confidence;
        report.record.success_prob = cert.success_probability;
        report.record.fidelity = fidelity(atomic_state(cert.atomic_state), supersinglet(3));
        report.amplitudes = cert.atomic_state.records();
    } else {
        const ProjectionResult vac = project_cavity(state, 0);
        report.record.success_prob = vac.probability;
        report.record.fidelity = fidelity(atomic_state(vac.state), supersinglet(3));
        report.amplitudes = vac.state.records();
    }
    return report;
}

void emit_report(const ProtocolRunReport& report, const CommonOpts& opts) {
    if (opts.format == "json") {
        write_output(to_json(report), opts.output);
    } else if (opts.format == "text") {
        write_output(to_text(report), opts.output);
    } else {
        throw std::runtime_error("unsupported --format for this command: " + opts.format);
    }
}

void emit_records(const std::vector<ScanRecord>& records, const CommonOpts& opts) {
    if (opts.format == "json") {
        write_output(records_to_json(records), opts.output);
    } else if (opts.format == "csv") {
        write_output(scan_to_csv(records), opts.output);
    } else {
        throw std::runtime_error("unsupported --format for this command: " + opts.format);
    }
}

int run_oracle_check(const CommonOpts& opts, int n, double t, std::optional<double> step,
                     double tol, int random_draws) {
    auto deviation = [&](SubspaceIndex sub, double time, const InteractionParams& p) {
        const OdeConfig cfg = step ? OdeConfig(*step) : OdeConfig::for_subspace(sub, p);
        const SubspacePropagator closed = propagator(sub, time, p);
        const SubspacePropagator ode = integrate_propagator(sub, time, p, cfg);
        double dev = 0.0;
        for (int k = 0; k < closed.dim * closed.dim; ++k) {
            dev = std::max(dev, std::abs(closed.entries[k] - ode.entries[k]));
        }
        return dev;
    };

    double worst = 0.0;
    if (random_draws > 0) {
        std::mt19937_64 gen(opts.seed);
        auto uniform = [&gen](double lo, double hi) {
            return std::uniform_real_distribution<double>(lo, hi)(gen);
        };
        for (int i = 0; i < random_draws; ++i) {
            const double g1 = uniform(0.1, 5.0);
            const double g2 = uniform(0.1, 5.0);
            const double gmax = std::max(g1, g2);
            const InteractionParams p(g1, g2, uniform(-gmax, gmax));
            const int sub = static_cast<int>(uniform(-2.0, 7.0));
            worst = std::max(worst, deviation(sub, uniform(0.0, 25.0), p));
        }
        std::printf("%d random draws: max |closed - rk4| = %.3g (tol %.3g)\n", random_draws,
                    worst, tol);
    } else {
        worst = deviation(n, t, opts.params());
        std::printf("n = %d, t = %.9g: max |closed - rk4| = %.3g (tol %.3g)\n", n, t, worst,
                    tol);
    }
    return worst <= tol ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Simulator and parameter search for a cavity-QED protocol that drives\n"
                 "three ladder-type three-level atoms through a single vacuum cavity mode\n"
                 "and post-selects the 3x3 supersinglet state."};
    app.require_subcommand(1);
    app.set_config("--config", "", "config file with key = value lines");

    // --- protocol
    CommonOpts po;
    std::vector<double> po_times;
    std::string po_project = "ideal";
    double po_t_prime = 4.71;
    int po_num_aux = 1;
    CLI::App* protocol = app.add_subcommand("protocol", "run the three-pass protocol");
    add_times_option(protocol, po_times);
    add_coupling_options(protocol, po);
    protocol->add_option("--cutoff", po.cutoff, "photon-number cutoff")->capture_default_str();
    protocol->add_option("--project", po_project, "cavity projection: ideal | auxiliary")
        ->capture_default_str();
    protocol->add_option("--t-prime", po_t_prime, "auxiliary interaction time (us)")
        ->capture_default_str();
    protocol->add_option("--num-aux", po_num_aux, "number of auxiliary atoms")
        ->capture_default_str();
    add_output_options(protocol, po, "text | json");

    // --- scan
    CommonOpts so;
    so.format = "csv";
    std::string so_t1, so_t2, so_t3, so_delta = "0";
    CLI::App* scan_cmd = app.add_subcommand("scan", "grid scan over times and detuning");
    scan_cmd->add_option("--t1", so_t1, "t1 axis: value or start:stop:step")->required();
    scan_cmd->add_option("--t2", so_t2, "t2 axis: value or start:stop:step")->required();
    scan_cmd->add_option("--t3", so_t3, "t3 axis: value or start:stop:step")->required();
    scan_cmd->add_option("--delta", so_delta, "detuning axis: value or start:stop:step")
        ->capture_default_str();
    scan_cmd->add_option("--g,--mhz-angular", so.g, "coupling g1 = g2 (rad/us)")
        ->capture_default_str();
    add_output_options(scan_cmd, so, "csv | json");

    // --- sweep-detuning
    CommonOpts wo;
    wo.format = "csv";
    std::vector<double> wo_times;
    std::string wo_range;
    CLI::App* sweep = app.add_subcommand("sweep-detuning", "fidelity vs detuning at fixed times");
    add_times_option(sweep, wo_times);
    sweep->add_option("--delta", wo_range, "detuning range start:stop:step")->required();
    sweep->add_option("--g,--mhz-angular", wo.g, "coupling g1 = g2 (rad/us)")
        ->capture_default_str();
    add_output_options(sweep, wo, "csv | json");

    // --- surface
    CommonOpts fo;
    fo.format = "csv";
    double fo_t1 = 23.0;
    std::string fo_t2, fo_t3;
    CLI::App* surface = app.add_subcommand("surface", "fidelity over (t2, t3) at fixed t1");
    surface->add_option("--t1", fo_t1, "fixed t1 (us)")->required();
    surface->add_option("--t2", fo_t2, "t2 range start:stop:step")->required();
    surface->add_option("--t3", fo_t3, "t3 range start:stop:step")->required();
    surface->add_option("--g,--mhz-angular", fo.g, "coupling g1 = g2 (rad/us)")
        ->capture_default_str();
    surface->add_option("--delta", fo.delta, "detuning (rad/us)")->capture_default_str();
    add_output_options(surface, fo, "csv | json");

    // --- detect
    CommonOpts dd;
    std::vector<double> dd_times;
    std::string dd_window;
    double dd_t_prime = 4.71;
    int dd_num_aux = 1;
    CLI::App* detect = app.add_subcommand("detect", "auxiliary-atom vacuum certification");
    add_times_option(detect, dd_times);
    add_coupling_options(detect, dd);
    detect->add_option("--cutoff", dd.cutoff, "photon-number cutoff")->capture_default_str();
    detect->add_option("--t-prime", dd_t_prime, "auxiliary interaction time (us)")
        ->capture_default_str();
    detect->add_option("--window", dd_window,
                       "pick t' automatically: maximize one-photon absorption over lo:hi");
    detect->add_option("--num-aux", dd_num_aux, "number of auxiliary atoms")
        ->capture_default_str();
    add_output_options(detect, dd, "text | json");

    // --- oracle-check
    CommonOpts oo;
    int oo_n = 0;
    double oo_t = 5.0;
    std::optional<double> oo_step;
    double oo_tol = 1e-6;
    int oo_random = 0;
    CLI::App* oracle = app.add_subcommand(
        "oracle-check", "compare the closed-form propagator against RK4 integration");
    oracle->add_option("--n", oo_n, "subspace index (>= -2)")->capture_default_str();
    oracle->add_option("--t", oo_t, "interaction time (us)")->capture_default_str();
    add_coupling_options(oracle, oo);
    oracle->add_option("--step", oo_step, "RK4 step (us); default 1e-3 / Rabi frequency");
    oracle->add_option("--tol", oo_tol, "failure threshold")->capture_default_str();
    oracle->add_option("--random", oo_random,
                       "check this many random (n, t, couplings, detuning) draws instead");
    oracle->add_option("--seed", oo.seed, "seed for --random draws")->capture_default_str();

    // --- reproduce
    CommonOpts ro;
    ro.format = "csv";
    int ro_table = 1;
    CLI::App* reproduce = app.add_subcommand("reproduce", "re-emit a published table as CSV");
    reproduce->add_option("--table", ro_table, "table index 1..4")->required();
    add_output_options(reproduce, ro, "csv | json");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*protocol) {
            if (po_project != "ideal" && po_project != "auxiliary") {
                throw std::runtime_error("--project must be 'ideal' or 'auxiliary'");
            }
            const ProtocolRunReport report = run_protocol(
                to_times(po_times), po, po_project == "auxiliary", po_t_prime, po_num_aux);
            emit_report(report, po);
        } else if (*scan_cmd) {
            GridSpec grid;
            FixedParams fixed;
            fixed.g = so.g;
            const AxisSpec a1 = parse_axis(so_t1);
            const AxisSpec a2 = parse_axis(so_t2);
            const AxisSpec a3 = parse_axis(so_t3);
            const AxisSpec ad = parse_axis(so_delta);
            grid.t1 = a1.range;
            grid.t2 = a2.range;
            grid.t3 = a3.range;
            grid.delta = ad.range;
            fixed.t1 = a1.fixed;
            fixed.t2 = a2.fixed;
            fixed.t3 = a3.fixed;
            fixed.delta = ad.fixed;
            emit_records(scan(grid, fixed), so);
        } else if (*sweep) {
            double lo = 0.0, hi = 0.0, step = 0.0;
            char extra = '\0';
            if (std::sscanf(wo_range.c_str(), "%lf:%lf:%lf%c", &lo, &hi, &step, &extra) != 3) {
                throw std::runtime_error("--delta expects start:stop:step");
            }
            emit_records(sweep_detuning(to_times(wo_times), wo.g, AxisRange(lo, hi, step)),
                         wo);
        } else if (*surface) {
            const AxisSpec a2 = parse_axis(fo_t2);
            const AxisSpec a3 = parse_axis(fo_t3);
            if (!a2.range || !a3.range) {
                throw std::runtime_error("surface: --t2 and --t3 must be start:stop:step ranges");
            }
            const FidelitySurface result =
                scan_surface(fo_t1, *a2.range, *a3.range, fo.g, fo.delta);
            if (fo.format == "json") {
                write_output(surface_to_json(result), fo.output);
            } else if (fo.format == "csv") {
                write_output(surface_to_csv(result), fo.output);
            } else {
                throw std::runtime_error("unsupported --format for this command: " + fo.format);
            }
        } else if (*detect) {
            if (!dd_window.empty()) {
                double lo = 0.0, hi = 0.0;
                char extra = '\0';
                if (std::sscanf(dd_window.c_str(), "%lf:%lf%c", &lo, &hi, &extra) != 2) {
                    throw std::runtime_error("--window expects lo:hi");
                }
                dd_t_prime = optimal_aux_time(dd.params(), TimeWindow(lo, hi));
            }
            const ProtocolRunReport report =
                run_protocol(to_times(dd_times), dd, true, dd_t_prime, dd_num_aux);
            emit_report(report, dd);
        } else if (*oracle) {
            return run_oracle_check(oo, oo_n, oo_t, oo_step, oo_tol, oo_random);
        } else if (*reproduce) {
            const ReferenceTable& table = reference_table(ro_table);
            std::vector<ScanRecord> records;
            records.reserve(table.times.size());
            for (const auto& t : table.times) {
                records.push_back(evaluate_protocol_point(t[0], t[1], t[2], table.g,
                                                          table.delta_over_g * table.g));
            }
            emit_records(records, ro);
        }
    } catch (const std::exception& err) {
        std::fprintf(stderr, "error: %s\n", err.what());
        return 1;
    }
    return 0;
}
