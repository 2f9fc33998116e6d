#include "dupdel/adjacency_graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace dupdel {

bool AdjacencyGraph::has_edge(std::uint32_t u, std::uint32_t v) const {
    const auto& nu = adj_[u];
    return std::binary_search(nu.begin(), nu.end(), v);
}

void AdjacencyGraph::add_edge(std::uint32_t u, std::uint32_t v) {
    if (u == v) throw std::invalid_argument("add_edge: loops not allowed");
    if (u >= adj_.size() || v >= adj_.size()) throw std::out_of_range("add_edge: vertex id");
    if (has_edge(u, v)) return;
    adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
    ++edge_count_;
}

std::uint32_t AdjacencyGraph::duplicate(std::uint32_t u) {
    if (u >= adj_.size()) throw std::out_of_range("duplicate: vertex id " + std::to_string(u));
    const std::uint32_t w = vertex_count();

    std::vector<std::uint32_t> nw = adj_[u];
    nw.insert(std::lower_bound(nw.begin(), nw.end(), u), u);
    for (std::uint32_t x : nw) adj_[x].push_back(w);  // w is the max id, order kept
    edge_count_ += nw.size();
    adj_.push_back(std::move(nw));
    return w;
}

void AdjacencyGraph::remove_directed(std::uint32_t from, std::uint32_t to) {
    auto& nf = adj_[from];
    auto it = std::lower_bound(nf.begin(), nf.end(), to);
    nf.erase(it);
}

bool AdjacencyGraph::erase_edges_except(std::uint32_t v, std::uint32_t spared) {
    if (v >= adj_.size()) throw std::out_of_range("erase_edges_except: vertex id " + std::to_string(v));
    auto& nv = adj_[v];
    bool kept = false;
    for (std::uint32_t x : nv) {
        if (x == spared) {
            kept = true;
            continue;
        }
        remove_directed(x, v);
        --edge_count_;
    }
    if (kept)
        nv.assign(1, spared);
    else
        nv.clear();
    return kept;
}

void AdjacencyGraph::step(PickPair picks) {
    const std::uint32_t n = vertex_count();
    if (picks.u >= n || picks.v >= n)
        throw std::out_of_range("AdjacencyGraph::step: pick outside old vertices");
    const std::uint32_t w = duplicate(picks.u);
    erase_edges_except(picks.v, w);
}

DegreeHistogram AdjacencyGraph::degree_histogram() const {
    DegreeHistogram h;
    h.vertex_count = vertex_count();
    h.counts.assign(static_cast<std::size_t>(max_degree()) + 1, 0);
    for (const auto& nv : adj_) h.counts[nv.size()] += 1;
    return h;
}

std::uint32_t AdjacencyGraph::max_degree() const {
    std::size_t m = 0;
    for (const auto& nv : adj_) m = std::max(m, nv.size());
    return static_cast<std::uint32_t>(m);
}

void AdjacencyGraph::check_invariants() const {
    std::uint64_t half_edges = 0;
    for (std::uint32_t v = 0; v < adj_.size(); ++v) {
        const auto& nv = adj_[v];
        if (!std::is_sorted(nv.begin(), nv.end())) throw std::logic_error("neighbor list not sorted");
        if (std::adjacent_find(nv.begin(), nv.end()) != nv.end()) throw std::logic_error("duplicate edge entry");
        for (std::uint32_t x : nv) {
            if (x == v) throw std::logic_error("self loop");
            if (x >= adj_.size()) throw std::logic_error("neighbor id out of range");
            if (!has_edge(x, v)) throw std::logic_error("asymmetric edge");
        }
        half_edges += nv.size();
    }
    if (half_edges != 2 * edge_count_) throw std::logic_error("edge count drifted");
}

}  // namespace dupdel
