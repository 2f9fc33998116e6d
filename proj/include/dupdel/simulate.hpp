#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dupdel/choice_stream.hpp"
#include "dupdel/coupling.hpp"
#include "dupdel/graph_stats.hpp"

namespace dupdel {

// Geometric schedule: 1, 2, 4, ..., plus the final step. O(log n) entries.
std::vector<std::uint64_t> pow2_checkpoints(std::uint64_t steps);

struct RunSpec {
    int version = 2;  // 1 = protected new edges, 2 = clique partition
    std::uint64_t steps = 0;
    std::uint64_t seed = 0;
    std::vector<std::uint64_t> checkpoints;  // ascending, each <= steps
    bool couple = false;                     // version 1 only: run the coloring + shadow
    bool check_invariants = false;           // recheck structure after every step
};

struct CheckpointData {
    std::uint64_t n = 0;
    std::vector<std::uint64_t> degree_counts;  // X[n,d] by degree
    std::vector<std::uint64_t> clique_counts;  // Y[n,k] by size (version 2 / shadow); empty otherwise
    GrowthRow growth;
    bool couple_match = true;  // black subgraph equals shadow (coupled runs)
};

struct RunResult {
    RunSpec spec;
    std::vector<CheckpointData> checkpoints;
    ClusteringStats clustering;  // final state
    bool coupled = false;
    bool couple_all_match = true;
};

// Evolves the requested variant from the single-vertex start for spec.steps
// steps, recording histograms and growth diagnostics at the checkpoints.
// Deterministic in (version, steps, seed).
RunResult simulate_run(const RunSpec& spec);

}  // namespace dupdel
