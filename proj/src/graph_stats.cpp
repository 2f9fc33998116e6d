#include "dupdel/graph_stats.hpp"

#include <algorithm>

namespace dupdel {

namespace {

std::uint64_t sorted_intersection_size(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) {
    std::uint64_t count = 0;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib)
            ++ia;
        else if (*ib < *ia)
            ++ib;
        else {
            ++count;
            ++ia;
            ++ib;
        }
    }
    return count;
}

}  // namespace

std::vector<std::uint64_t> local_triangles(const AdjacencyGraph& g) {
    const std::int64_t n = g.vertex_count();
    std::vector<std::uint64_t> t(static_cast<std::size_t>(n), 0);
#pragma omp parallel for schedule(dynamic, 1024)
    for (std::int64_t v = 0; v < n; ++v) {
        const auto nv = g.neighbors(static_cast<std::uint32_t>(v));
        std::uint64_t twice = 0;
        for (std::uint32_t x : nv) twice += sorted_intersection_size(nv, g.neighbors(x));
        t[static_cast<std::size_t>(v)] = twice / 2;
    }
    return t;
}

std::vector<std::uint64_t> local_triangles_serial(const AdjacencyGraph& g) {
    const std::uint32_t n = g.vertex_count();
    std::vector<std::uint64_t> t(n, 0);
    for (std::uint32_t v = 0; v < n; ++v) {
        const auto nv = g.neighbors(v);
        std::uint64_t pairs = 0;
        for (std::size_t i = 0; i < nv.size(); ++i)
            for (std::size_t j = i + 1; j < nv.size(); ++j)
                if (g.has_edge(nv[i], nv[j])) ++pairs;
        t[v] = pairs;
    }
    return t;
}

namespace {

std::uint64_t total_from_local(const std::vector<std::uint64_t>& t) {
    std::uint64_t s = 0;
    for (std::uint64_t x : t) s += x;
    return s / 3;  // each triangle appears at all three vertices
}

}  // namespace

std::uint64_t triangle_count(const AdjacencyGraph& g) { return total_from_local(local_triangles(g)); }

std::uint64_t triangle_count_serial(const AdjacencyGraph& g) { return total_from_local(local_triangles_serial(g)); }

std::uint64_t path2_count(const AdjacencyGraph& g) {
    std::uint64_t p2 = 0;
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
        const std::uint64_t d = g.degree(v);
        p2 += d * (d - 1) / 2;
    }
    return p2;
}

double clustering_global(const AdjacencyGraph& g) {
    const std::uint64_t p2 = path2_count(g);
    if (p2 == 0) return 0.0;
    return 3.0 * static_cast<double>(triangle_count(g)) / static_cast<double>(p2);
}

double clustering_average(const AdjacencyGraph& g) {
    return clustering_stats(g).average;
}

ClusteringStats clustering_stats(const AdjacencyGraph& g) {
    const std::uint32_t n = g.vertex_count();
    const std::vector<std::uint64_t> t = local_triangles(g);

    std::uint64_t triangles3 = 0;  // 3 * triangle count
    std::uint64_t p2 = 0;
    double local_sum = 0.0;
    for (std::uint32_t v = 0; v < n; ++v) {
        const std::uint64_t d = g.degree(v);
        const std::uint64_t pairs = d * (d - 1) / 2;
        triangles3 += t[v];
        p2 += pairs;
        if (pairs > 0) local_sum += static_cast<double>(t[v]) / static_cast<double>(pairs);
    }

    ClusteringStats s;
    s.global = p2 == 0 ? 0.0 : static_cast<double>(triangles3) / static_cast<double>(p2);
    s.average = n == 0 ? 0.0 : local_sum / static_cast<double>(n);
    return s;
}

}  // namespace dupdel
