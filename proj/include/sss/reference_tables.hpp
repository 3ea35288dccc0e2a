#pragma once

#include <array>
#include <vector>

namespace sss {

// Benchmark configurations for the four published fidelity/success tables:
// interaction-time triples with their coupling and detuning (delta is given
// as a fraction of g).
struct ReferenceTable {
    double g;
    double delta_over_g;
    std::vector<std::array<double, 3>> times;
};

// index in 1..4: 1 = (g=1, delta=0), 2 = (g=1, delta=0.1g),
// 3 = (g=17.5, delta=0), 4 = (g=17.5, delta=0.1g).
const ReferenceTable& reference_table(int index);

}  // namespace sss
