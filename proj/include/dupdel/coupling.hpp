#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "dupdel/adjacency_graph.hpp"
#include "dupdel/clique_partition.hpp"

namespace dupdel {

// Diagnostic snapshot of a run: edge count, red-vertex and red-edge counts,
// maximum degree.
struct GrowthRow {
    std::uint64_t n = 0;
    std::uint64_t edges = 0;       // S_n
    double edges_per_step = 0.0;   // S_n / n
    std::uint64_t red_vertices = 0;  // Z_n
    std::uint64_t red_edges = 0;     // R_n
    std::uint32_t max_degree = 0;    // M_n
};

// Joint run of both model variants on one pick stream. The protected-edge
// variant evolves as a colored graph; edges that the unprotected variant
// would have deleted are red, everything else black. A shadow clique
// partition advances on the same picks, and the black subgraph must stay
// equal to it edge-for-edge.
//
// Coloring rules per step (duplication of u, erasure of v, new vertex w):
//   - copied edges inherit the color of the original; {w,u} starts black;
//   - w is red iff u is red;
//   - erasure removes v's edges except {v,w}; if {v,w} survives it turns
//     red and both endpoints turn red, otherwise v is recolored black.
// A vertex may stay red with no red edges; nothing un-reds it except the
// lost-all-edges rule above.
class CoupledRun {
public:
    CoupledRun() : red_vertex_(1, 0) {}

    void step(PickPair picks);

    const AdjacencyGraph& graph() const { return graph_; }
    const CliquePartition& shadow() const { return shadow_; }

    std::uint32_t vertex_count() const { return graph_.vertex_count(); }
    std::uint64_t edge_count() const { return graph_.edge_count(); }
    std::uint64_t red_vertex_count() const { return red_vertex_count_; }
    std::uint64_t red_edge_count() const { return red_edge_count_; }

    bool is_red_vertex(std::uint32_t v) const { return red_vertex_[v] != 0; }
    bool is_red_edge(std::uint32_t a, std::uint32_t b) const;

    GrowthRow growth_row(std::uint64_t steps_done) const;

    // Exact per-vertex test that the black subgraph is the shadow partition:
    // every vertex's black neighborhood must be exactly its shadow clique
    // minus itself.
    bool black_subgraph_equals_shadow() const;

    // Component sizes of the black subgraph, sorted ascending.
    std::vector<std::uint32_t> black_component_sizes() const;

    // Live shadow clique sizes, sorted ascending.
    std::vector<std::uint32_t> shadow_clique_sizes() const;

    // Color soundness: black vertices carry no red edges, red edges have two
    // red endpoints, red lists are symmetric subsets of the adjacency, and
    // the Z/R counters match. Throws std::logic_error on violation.
    void check_color_invariants() const;

private:
    std::vector<std::uint32_t>& red_list(std::uint32_t v) { return red_adj_[v]; }
    const std::vector<std::uint32_t>* red_list_if_any(std::uint32_t v) const;
    void set_vertex_color(std::uint32_t v, bool red);
    void mark_edge_red(std::uint32_t a, std::uint32_t b);
    void drop_red_edge(std::uint32_t a, std::uint32_t b);

    AdjacencyGraph graph_;
    CliquePartition shadow_;
    std::vector<std::uint8_t> red_vertex_;
    // Sparse red-edge store: only vertices with at least one red edge have an
    // entry; values are sorted. Red edges are polylog-few, so this stays tiny.
    std::unordered_map<std::uint32_t, std::vector<std::uint32_t>> red_adj_;
    std::uint64_t red_vertex_count_ = 0;
    std::uint64_t red_edge_count_ = 0;
};

}  // namespace dupdel
