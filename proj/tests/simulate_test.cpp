#include "dupdel/simulate.hpp"

#include <gtest/gtest.h>

namespace dupdel {
namespace {

TEST(Checkpoints, PowersOfTwoPlusFinalStep) {
    EXPECT_EQ(pow2_checkpoints(1), (std::vector<std::uint64_t>{1}));
    EXPECT_EQ(pow2_checkpoints(2), (std::vector<std::uint64_t>{1, 2}));
    EXPECT_EQ(pow2_checkpoints(10), (std::vector<std::uint64_t>{1, 2, 4, 8, 10}));
    EXPECT_EQ(pow2_checkpoints(16), (std::vector<std::uint64_t>{1, 2, 4, 8, 16}));
}

RunSpec base_spec(int version, std::uint64_t steps, std::uint64_t seed) {
    RunSpec spec;
    spec.version = version;
    spec.steps = steps;
    spec.seed = seed;
    spec.checkpoints = pow2_checkpoints(steps);
    return spec;
}

TEST(SimulateRun, RejectsInvalidSpecs) {
    RunSpec spec = base_spec(3, 10, 1);
    EXPECT_THROW(simulate_run(spec), std::invalid_argument);
    spec = base_spec(2, 10, 1);
    spec.couple = true;  // coupling needs the protected-edge variant
    EXPECT_THROW(simulate_run(spec), std::invalid_argument);
    spec = base_spec(2, 10, 1);
    spec.checkpoints = {4, 2};
    EXPECT_THROW(simulate_run(spec), std::invalid_argument);
    spec.checkpoints = {11};
    EXPECT_THROW(simulate_run(spec), std::invalid_argument);
    spec.checkpoints = {0};
    EXPECT_THROW(simulate_run(spec), std::invalid_argument);
}

// One step of the clique variant: two singletons, whatever the seed.
TEST(SimulateRun, ForcedFirstCheckpointOfVersion2) {
    const RunResult r = simulate_run(base_spec(2, 1, 987));
    ASSERT_EQ(r.checkpoints.size(), 1u);
    const CheckpointData& cp = r.checkpoints[0];
    EXPECT_EQ(cp.n, 1u);
    ASSERT_GE(cp.clique_counts.size(), 2u);
    EXPECT_EQ(cp.clique_counts[1], 2u);
    EXPECT_EQ(cp.degree_counts[0], 2u);
    EXPECT_DOUBLE_EQ(r.clustering.global, 0.0);
    EXPECT_DOUBLE_EQ(r.clustering.average, 0.0);
}

TEST(SimulateRun, DeterministicInTheSeed) {
    for (int version : {1, 2}) {
        const RunResult a = simulate_run(base_spec(version, 2000, 5));
        const RunResult b = simulate_run(base_spec(version, 2000, 5));
        const RunResult c = simulate_run(base_spec(version, 2000, 6));
        ASSERT_EQ(a.checkpoints.size(), b.checkpoints.size());
        for (std::size_t i = 0; i < a.checkpoints.size(); ++i) {
            EXPECT_EQ(a.checkpoints[i].degree_counts, b.checkpoints[i].degree_counts);
            EXPECT_EQ(a.checkpoints[i].growth.edges, b.checkpoints[i].growth.edges);
        }
        EXPECT_DOUBLE_EQ(a.clustering.global, b.clustering.global);
        EXPECT_DOUBLE_EQ(a.clustering.average, b.clustering.average);
        EXPECT_NE(a.checkpoints.back().degree_counts, c.checkpoints.back().degree_counts);
    }
}

TEST(SimulateRun, CheckpointsRecordTheRequestedSteps) {
    RunSpec spec = base_spec(2, 100, 3);
    spec.checkpoints = {10, 50, 100};
    const RunResult r = simulate_run(spec);
    ASSERT_EQ(r.checkpoints.size(), 3u);
    std::uint64_t total = 0;
    for (std::uint64_t c : r.checkpoints[1].degree_counts) total += c;
    EXPECT_EQ(r.checkpoints[1].n, 50u);
    EXPECT_EQ(total, 51u);  // X[n,*] sums to n+1 vertices
}

TEST(SimulateRun, GrowthRowsForBothVersions) {
    for (int version : {1, 2}) {
        const RunResult r = simulate_run(base_spec(version, 512, 17));
        const GrowthRow& row = r.checkpoints.back().growth;
        EXPECT_EQ(row.n, 512u);
        EXPECT_GT(row.edges, 0u);
        EXPECT_DOUBLE_EQ(row.edges_per_step, static_cast<double>(row.edges) / 512.0);
        EXPECT_GT(row.max_degree, 0u);
    }
}

TEST(SimulateRun, CoupledRunMatchesAtEveryCheckpoint) {
    RunSpec spec = base_spec(1, 4096, 99);
    spec.couple = true;
    spec.check_invariants = true;  // exhaustive per-step checking
    const RunResult r = simulate_run(spec);
    EXPECT_TRUE(r.coupled);
    EXPECT_TRUE(r.couple_all_match);
    for (const CheckpointData& cp : r.checkpoints) {
        EXPECT_TRUE(cp.couple_match);
        EXPECT_FALSE(cp.clique_counts.empty());  // the shadow partition is recorded
    }
}

// The coupled run's primary graph must be byte-for-byte the plain variant-1
// run: coupling only adds bookkeeping.
TEST(SimulateRun, CouplingDoesNotPerturbTheRun) {
    RunSpec plain = base_spec(1, 3000, 123);
    RunSpec coupled = plain;
    coupled.couple = true;
    const RunResult a = simulate_run(plain);
    const RunResult b = simulate_run(coupled);
    for (std::size_t i = 0; i < a.checkpoints.size(); ++i) {
        EXPECT_EQ(a.checkpoints[i].degree_counts, b.checkpoints[i].degree_counts);
        EXPECT_EQ(a.checkpoints[i].growth.edges, b.checkpoints[i].growth.edges);
        EXPECT_EQ(a.checkpoints[i].growth.max_degree, b.checkpoints[i].growth.max_degree);
    }
    EXPECT_DOUBLE_EQ(a.clustering.global, b.clustering.global);
    EXPECT_DOUBLE_EQ(a.clustering.average, b.clustering.average);
}

}  // namespace
}  // namespace dupdel
