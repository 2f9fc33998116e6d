#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dupdel/choice_stream.hpp"
#include "dupdel/degree_histogram.hpp"

namespace dupdel {

// Simple undirected graph with per-vertex sorted neighbor lists. New vertex
// ids are always the current maximum + 1, so appending the new vertex to a
// neighbor list keeps it sorted.
class AdjacencyGraph {
public:
    // Single-vertex start configuration.
    AdjacencyGraph() : adj_(1) {}

    // n isolated vertices; for tests and ad-hoc construction.
    explicit AdjacencyGraph(std::uint32_t n) : adj_(n) {}

    std::uint32_t vertex_count() const { return static_cast<std::uint32_t>(adj_.size()); }
    std::uint64_t edge_count() const { return edge_count_; }
    std::uint32_t degree(std::uint32_t v) const { return static_cast<std::uint32_t>(adj_[v].size()); }
    std::span<const std::uint32_t> neighbors(std::uint32_t v) const { return adj_[v]; }

    bool has_edge(std::uint32_t u, std::uint32_t v) const;
    void add_edge(std::uint32_t u, std::uint32_t v);

    // Duplication half-step: adds a vertex adjacent to u and to all of u's
    // current neighbors. Returns the new vertex id.
    std::uint32_t duplicate(std::uint32_t u);

    // Erasure half-step: deletes every edge of v except a surviving edge to
    // `spared` (pass the step's new vertex). Returns true when {v, spared}
    // existed and was kept.
    bool erase_edges_except(std::uint32_t v, std::uint32_t spared);

    // One evolution step of the variant whose new edges are protected from
    // same-step deletion: duplicate picks.u, then erase picks.v's edges
    // sparing those of the new vertex.
    void step(PickPair picks);

    DegreeHistogram degree_histogram() const;
    std::uint32_t max_degree() const;

    void check_invariants() const;

private:
    void remove_directed(std::uint32_t from, std::uint32_t to);

    std::vector<std::vector<std::uint32_t>> adj_;
    std::uint64_t edge_count_ = 0;
};

}  // namespace dupdel
