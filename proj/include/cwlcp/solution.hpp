#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cwlcp/checkmodel.hpp"
#include "cwlcp/weights.hpp"

namespace cwlcp {

using Coloring = std::vector<Color>;  // indexed by model vertex

struct SolveStats {
    int nodes = 0;
    std::size_t memo_entries = 0;
    std::size_t root_candidates = 0;
    double elapsed_ms = 0;
};

struct Solution {
    WeightValue weight;
    std::optional<Coloring> coloring;
    SolveStats stats;
};

}  // namespace cwlcp
