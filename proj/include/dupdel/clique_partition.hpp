#pragma once

#include <cstdint>
#include <vector>

#include "dupdel/choice_stream.hpp"
#include "dupdel/degree_histogram.hpp"

namespace dupdel {

// State of the model variant whose graph is always a disjoint union of
// cliques. Only clique sizes and the vertex->clique map are stored; the
// edges are implied. Vertex ids are stable and never reused; clique slots
// are tombstoned (size 0) when emptied.
class CliquePartition {
public:
    // Starts from the single-vertex configuration: one clique of size 1.
    CliquePartition();

    // Rebuilds an arbitrary partition from a vertex -> clique-id map
    // (test scaffolding; evolution always starts from the single vertex).
    explicit CliquePartition(const std::vector<std::uint32_t>& clique_of);

    std::uint32_t vertex_count() const { return static_cast<std::uint32_t>(clique_of_.size()); }
    std::uint32_t clique_of(std::uint32_t v) const;
    std::uint32_t clique_size(std::uint32_t c) const { return clique_size_[c]; }
    std::uint64_t live_clique_count() const { return live_cliques_; }

    // One evolution step. The new vertex joins the clique of picks.u; then
    // picks.v is extracted from its clique into a singleton. When u and v
    // share a clique (including u == v) the grow-then-extract order applies.
    // Extracting an already isolated vertex leaves the structure unchanged.
    void step(PickPair picks);

    // Y[k] = number of cliques of size k; index 0 unused.
    std::vector<std::uint64_t> clique_size_histogram() const;

    // Each clique of size k holds k vertices of degree k-1.
    DegreeHistogram degree_histogram() const;

    std::uint32_t max_clique_size() const;

    // Total edge count: sum over cliques of k(k-1)/2.
    std::uint64_t edge_count() const;

    // Closed forms valid for any disjoint union of cliques.
    double clustering_global() const;   // 1 if some clique has size >= 3, else 0
    double clustering_average() const;  // proportion of vertices with degree >= 2

    // Throws std::logic_error on any violated structural invariant.
    void check_invariants() const;

private:
    std::vector<std::uint32_t> clique_of_;    // vertex id -> clique id
    std::vector<std::uint32_t> clique_size_;  // clique id -> size, 0 when dead
    std::uint64_t live_cliques_ = 0;
};

}  // namespace dupdel
