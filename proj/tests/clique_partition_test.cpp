#include "dupdel/clique_partition.hpp"

#include <gtest/gtest.h>

#include <vector>

#include "dupdel/choice_stream.hpp"

namespace dupdel {
namespace {

TEST(CliquePartition, StartsAsOneSingleton) {
    CliquePartition p;
    EXPECT_EQ(p.vertex_count(), 1u);
    EXPECT_EQ(p.live_clique_count(), 1u);
    EXPECT_EQ(p.edge_count(), 0u);
    p.check_invariants();
}

// The only possible first step: duplication makes a 2-clique, then the
// erased vertex is extracted, leaving two singletons.
TEST(CliquePartition, ForcedFirstStep) {
    CliquePartition p;
    p.step({0, 0});
    p.check_invariants();
    EXPECT_EQ(p.vertex_count(), 2u);
    const auto hist = p.clique_size_histogram();
    ASSERT_EQ(hist.size(), 2u);
    EXPECT_EQ(hist[1], 2u);
    EXPECT_EQ(p.edge_count(), 0u);
}

// Grow-then-extract inside one clique: {0,1} with picks (0,1) ends as
// {0,2} and {1}.
TEST(CliquePartition, ExtractionFromTheGrownClique) {
    CliquePartition p({0, 0});
    p.step({0, 1});
    p.check_invariants();
    EXPECT_EQ(p.vertex_count(), 3u);
    EXPECT_EQ(p.clique_of(0), p.clique_of(2));
    EXPECT_NE(p.clique_of(1), p.clique_of(0));
    EXPECT_EQ(p.clique_size(p.clique_of(0)), 2u);
    EXPECT_EQ(p.clique_size(p.clique_of(1)), 1u);
}

// {0,1} and {2} with picks (2,0): the singleton grows to {2,3} and 0 is
// pulled out of its 2-clique, leaving {1}, {0}, {2,3}.
TEST(CliquePartition, ExtractionFromAnotherClique) {
    CliquePartition p({0, 0, 1});
    p.step({2, 0});
    p.check_invariants();
    EXPECT_EQ(p.vertex_count(), 4u);
    EXPECT_EQ(p.clique_of(2), p.clique_of(3));
    EXPECT_EQ(p.clique_size(p.clique_of(2)), 2u);
    EXPECT_EQ(p.clique_size(p.clique_of(0)), 1u);
    EXPECT_EQ(p.clique_size(p.clique_of(1)), 1u);
    const auto hist = p.clique_size_histogram();
    EXPECT_EQ(hist[1], 2u);
    EXPECT_EQ(hist[2], 1u);
}

TEST(CliquePartition, ExtractingAnIsolatedVertexIsANoOp) {
    CliquePartition p({0, 1});  // two singletons
    p.step({0, 1});
    p.check_invariants();
    EXPECT_EQ(p.clique_of(0), p.clique_of(2));
    EXPECT_EQ(p.clique_size(p.clique_of(1)), 1u);
    EXPECT_EQ(p.live_clique_count(), 2u);
}

TEST(CliquePartition, RejectsPicksOutsideOldVertices) {
    CliquePartition p;
    EXPECT_THROW(p.step({1, 0}), std::out_of_range);
    EXPECT_THROW(p.step({0, 1}), std::out_of_range);
}

TEST(CliquePartition, DegreeHistogramMirrorsCliqueSizes) {
    CliquePartition p({0, 0, 0, 1, 1, 2});  // sizes 3, 2, 1
    const DegreeHistogram h = p.degree_histogram();
    EXPECT_EQ(h.vertex_count, 6u);
    EXPECT_EQ(h.count(0), 1u);
    EXPECT_EQ(h.count(1), 2u);
    EXPECT_EQ(h.count(2), 3u);
    EXPECT_EQ(h.max_degree(), 2u);
    EXPECT_EQ(p.edge_count(), 3u + 1u);
    EXPECT_EQ(p.max_clique_size(), 3u);
}

TEST(CliquePartition, ClosedFormClustering) {
    EXPECT_DOUBLE_EQ(CliquePartition({0}).clustering_global(), 0.0);
    EXPECT_DOUBLE_EQ(CliquePartition({0}).clustering_average(), 0.0);
    EXPECT_DOUBLE_EQ(CliquePartition({0, 0, 1, 1}).clustering_global(), 0.0);
    EXPECT_DOUBLE_EQ(CliquePartition({0, 0, 0, 1, 2}).clustering_global(), 1.0);
    // sizes {3,1,1}: 3 of 5 vertices have degree >= 2
    EXPECT_DOUBLE_EQ(CliquePartition({0, 0, 0, 1, 2}).clustering_average(), 3.0 / 5.0);
}

TEST(CliquePartition, InvariantsHoldAlongARandomRun) {
    CliquePartition p;
    ChoiceStream picks(2024);
    std::uint64_t vertices = 1;
    for (int n = 1; n <= 3000; ++n) {
        p.step(picks.next(static_cast<std::uint32_t>(n)));
        vertices += 1;
        p.check_invariants();
        ASSERT_EQ(p.vertex_count(), vertices);
    }
    // histogram identities: sum k*Y[k] = vertices, edges = sum k(k-1)/2 * Y[k]
    const auto hist = p.clique_size_histogram();
    std::uint64_t total = 0, edges = 0;
    for (std::size_t k = 1; k < hist.size(); ++k) {
        total += k * hist[k];
        edges += hist[k] * k * (k - 1) / 2;
    }
    EXPECT_EQ(total, vertices);
    EXPECT_EQ(edges, p.edge_count());
}

}  // namespace
}  // namespace dupdel
