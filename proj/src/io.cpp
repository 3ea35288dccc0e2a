#include "sss/io.hpp"

#include <cstdio>

namespace sss {

namespace {

void append_record_fields(std::string& out, const ScanRecord& r) {
    out += "\"t1_us\":" + format_full(r.t1);
    out += ",\"t2_us\":" + format_full(r.t2);
    out += ",\"t3_us\":" + format_full(r.t3);
    out += ",\"g_rad_per_us\":" + format_full(r.g);
    out += ",\"delta_rad_per_us\":" + format_full(r.delta);
    out += ",\"fidelity\":" + format_full(r.fidelity);
    out += ",\"success_prob\":" + format_full(r.success_prob);
}

void append_amplitudes(std::string& out, const std::vector<AmplitudeRecord>& amps) {
    out += "[";
    bool first = true;
    for (const AmplitudeRecord& a : amps) {
        if (!first) {
            out += ",";
        }
        first = false;
        out += "{\"levels\":\"" + a.levels + "\",\"n\":" + std::to_string(a.photons) +
               ",\"re\":" + format_full(a.re) + ",\"im\":" + format_full(a.im) + "}";
    }
    out += "]";
}

}  // namespace

std::string format_full(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string to_json(const ProtocolRunReport& report) {
    std::string out = "{";
    append_record_fields(out, report.record);
    out += ",\"projection\":\"";
    out += report.auxiliary ? "auxiliary" : "ideal";
    out += "\"";
    if (report.auxiliary) {
        out += ",\"t_prime_us\":" + format_full(report.t_prime);
        out += ",\"num_aux\":" + std::to_string(report.num_aux);
        out += ",\"residual_nonvacuum\":" + format_full(report.residual_nonvacuum);
        out += ",\"error_bound\":" + format_full(report.error_bound);
        out += ",\"vacuum_confidence\":" + format_full(report.vacuum_confidence);
    }
    out += ",\"amplitudes\":";
    append_amplitudes(out, report.amplitudes);
    out += "}\n";
    return out;
}

std::string to_text(const ProtocolRunReport& report) {
    const ScanRecord& r = report.record;
    char buf[256];
    std::string out;
    std::snprintf(buf, sizeof(buf),
                  "times (us):        %.9g, %.9g, %.9g\n"
                  "g (rad/us):        %.9g\n"
                  "delta (rad/us):    %.9g\n",
                  r.t1, r.t2, r.t3, r.g, r.delta);
    out += buf;
    if (report.auxiliary) {
        std::snprintf(buf, sizeof(buf),
                      "projection:        auxiliary (t' = %.9g us, %d atom%s)\n",
                      report.t_prime, report.num_aux, report.num_aux == 1 ? "" : "s");
        out += buf;
    } else {
        out += "projection:        ideal vacuum\n";
    }
    std::snprintf(buf, sizeof(buf),
                  "fidelity:          %.9g\n"
                  "success prob:      %.9g\n",
                  r.fidelity, r.success_prob);
    out += buf;
    if (report.auxiliary) {
        std::snprintf(buf, sizeof(buf),
                      "residual nonvac:   %.9g\n"
                      "error bound:       %.9g\n"
                      "vacuum confidence: %.9g\n",
                      report.residual_nonvacuum, report.error_bound, report.vacuum_confidence);
        out += buf;
    }
    out += "post-selected atomic state:\n";
    for (const AmplitudeRecord& a : report.amplitudes) {
        std::snprintf(buf, sizeof(buf), "  |%s>  % .12g %+.12gi\n", a.levels.c_str(), a.re,
                      a.im);
        out += buf;
    }
    return out;
}

std::string records_to_json(const std::vector<ScanRecord>& records) {
    std::string out = "{\"records\":[";
    bool first = true;
    for (const ScanRecord& r : records) {
        if (!first) {
            out += ",";
        }
        first = false;
        out += "{";
        append_record_fields(out, r);
        out += "}";
    }
    out += "]}\n";
    return out;
}

std::string surface_to_json(const FidelitySurface& surface) {
    std::string out = "{";
    out += "\"t1_us\":" + format_full(surface.t1);
    out += ",\"g_rad_per_us\":" + format_full(surface.g);
    out += ",\"delta_rad_per_us\":" + format_full(surface.delta);
    auto append_axis = [&out](const char* name, const std::vector<double>& values) {
        out += ",\"";
        out += name;
        out += "\":[";
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (i > 0) {
                out += ",";
            }
            out += format_full(values[i]);
        }
        out += "]";
    };
    append_axis("t2_us", surface.t2_values);
    append_axis("t3_us", surface.t3_values);
    out += ",\"fidelity\":[";
    for (std::size_t i2 = 0; i2 < surface.t2_values.size(); ++i2) {
        if (i2 > 0) {
            out += ",";
        }
        out += "[";
        for (std::size_t i3 = 0; i3 < surface.t3_values.size(); ++i3) {
            if (i3 > 0) {
                out += ",";
            }
            out += format_full(surface.at(i2, i3));
        }
        out += "]";
    }
    out += "]}\n";
    return out;
}

}  // namespace sss
