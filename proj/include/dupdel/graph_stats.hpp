#pragma once

#include <cstdint>
#include <vector>

#include "dupdel/adjacency_graph.hpp"

namespace dupdel {

// t[v] = number of triangles containing v, computed by sorted neighbor-list
// intersection along each incident edge (each triangle at v is seen twice).
// OpenMP over vertices; every element is independent of thread scheduling.
std::vector<std::uint64_t> local_triangles(const AdjacencyGraph& g);

// Reference implementation: probes each neighbor pair with binary search.
// Kept serial and algorithmically separate for testing the kernel above.
std::vector<std::uint64_t> local_triangles_serial(const AdjacencyGraph& g);

std::uint64_t triangle_count(const AdjacencyGraph& g);
std::uint64_t triangle_count_serial(const AdjacencyGraph& g);

// Connected triplets: sum over v of C(deg v, 2).
std::uint64_t path2_count(const AdjacencyGraph& g);

// 3 * triangles / connected triplets; 0 by convention when the graph has no
// path of length 2.
double clustering_global(const AdjacencyGraph& g);

// Mean of the per-vertex local coefficients, vertices of degree < 2
// contributing 0. The per-vertex values are reduced in index order so the
// result does not depend on the thread count.
double clustering_average(const AdjacencyGraph& g);

struct ClusteringStats {
    double global = 0.0;
    double average = 0.0;
};

// Both coefficients from one pass of the triangle kernel.
ClusteringStats clustering_stats(const AdjacencyGraph& g);

}  // namespace dupdel
