#pragma once

#include <string>
#include <vector>

#include "sss/joint_state.hpp"
#include "sss/search.hpp"

namespace sss {

// JSON numbers are rendered with 17 significant digits so every double
// round-trips exactly.
std::string format_full(double v);

// Result bundle for a single protocol run, in both projection modes.
struct ProtocolRunReport {
    ScanRecord record;
    std::vector<AmplitudeRecord> amplitudes;  // post-selected atomic state
    bool auxiliary = false;
    double t_prime = 0.0;
    int num_aux = 0;
    double residual_nonvacuum = 0.0;
    double error_bound = 0.0;
    double vacuum_confidence = 1.0;
};

std::string to_json(const ProtocolRunReport& report);
std::string to_text(const ProtocolRunReport& report);

std::string records_to_json(const std::vector<ScanRecord>& records);
std::string surface_to_json(const FidelitySurface& surface);

}  // namespace sss
