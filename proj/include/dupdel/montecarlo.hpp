#pragma once

#include <cstdint>
#include <vector>

#include "dupdel/report.hpp"
#include "dupdel/simulate.hpp"

namespace dupdel {

struct MonteCarloConfig {
    int version = 2;
    std::uint64_t steps = 1;
    std::vector<std::uint64_t> seeds;
    std::vector<std::uint64_t> checkpoints;  // empty -> powers-of-two schedule
    int dmax = 8;
    bool couple = false;
    bool check_invariants = false;
    int parallelism = 0;  // worker bound; 0 = all hardware threads
};

// Expands "--num-seeds K --base-seed S" into S, S+1, ..., S+K-1.
std::vector<std::uint64_t> seed_range(std::uint64_t base, std::uint64_t count);

// One simulation per seed, workers bounded by parallelism, then plain
// mean / sample-standard-error aggregation. Aggregation reads the per-seed
// results in seed order, so the report is independent of thread count.
RunReport monte_carlo(const MonteCarloConfig& config);

}  // namespace dupdel
