#include "dupdel/coupling.hpp"

#include <algorithm>
#include <stdexcept>

namespace dupdel {

const std::vector<std::uint32_t>* CoupledRun::red_list_if_any(std::uint32_t v) const {
    auto it = red_adj_.find(v);
    return it == red_adj_.end() ? nullptr : &it->second;
}

bool CoupledRun::is_red_edge(std::uint32_t a, std::uint32_t b) const {
    const auto* ra = red_list_if_any(a);
    return ra && std::binary_search(ra->begin(), ra->end(), b);
}

void CoupledRun::set_vertex_color(std::uint32_t v, bool red) {
    if ((red_vertex_[v] != 0) == red) return;
    red_vertex_[v] = red ? 1 : 0;
    red_vertex_count_ += red ? 1 : -1;
}

void CoupledRun::mark_edge_red(std::uint32_t a, std::uint32_t b) {
    if (is_red_edge(a, b)) return;
    auto& ra = red_adj_[a];
    ra.insert(std::lower_bound(ra.begin(), ra.end(), b), b);
    auto& rb = red_adj_[b];
    rb.insert(std::lower_bound(rb.begin(), rb.end(), a), a);
    ++red_edge_count_;
}

void CoupledRun::drop_red_edge(std::uint32_t a, std::uint32_t b) {
    auto ita = red_adj_.find(a);
    auto& ra = ita->second;
    ra.erase(std::lower_bound(ra.begin(), ra.end(), b));
    if (ra.empty()) red_adj_.erase(ita);
    auto itb = red_adj_.find(b);
    auto& rb = itb->second;
    rb.erase(std::lower_bound(rb.begin(), rb.end(), a));
    if (rb.empty()) red_adj_.erase(itb);
    --red_edge_count_;
}

void CoupledRun::step(PickPair picks) {
    const std::uint32_t u = picks.u;
    const std::uint32_t v = picks.v;

    // Duplication: copied edges keep their color, {w,u} is black, and the
    // new vertex inherits u's color.
    const std::uint32_t w = graph_.duplicate(u);
    red_vertex_.push_back(0);
    if (auto it = red_adj_.find(u); it != red_adj_.end()) {
        const std::vector<std::uint32_t> reds = it->second;  // copy: map mutates below
        for (std::uint32_t x : reds) mark_edge_red(w, x);
    }
    set_vertex_color(w, is_red_vertex(u));

    // Erasure: drop v's red marks for the edges about to go, then the edges.
    if (auto it = red_adj_.find(v); it != red_adj_.end()) {
        const std::vector<std::uint32_t> reds = it->second;
        for (std::uint32_t x : reds)
            if (x != w) drop_red_edge(v, x);
    }
    const bool survived = graph_.erase_edges_except(v, w);

    if (survived) {
        mark_edge_red(v, w);
        set_vertex_color(v, true);
        set_vertex_color(w, true);
    } else {
        set_vertex_color(v, false);
    }

    shadow_.step(picks);
}

GrowthRow CoupledRun::growth_row(std::uint64_t steps_done) const {
    GrowthRow row;
    row.n = steps_done;
    row.edges = graph_.edge_count();
    row.edges_per_step = steps_done == 0 ? 0.0 : static_cast<double>(row.edges) / static_cast<double>(steps_done);
    row.red_vertices = red_vertex_count_;
    row.red_edges = red_edge_count_;
    row.max_degree = graph_.max_degree();
    return row;
}

bool CoupledRun::black_subgraph_equals_shadow() const {
    const std::uint32_t n = graph_.vertex_count();
    if (shadow_.vertex_count() != n) return false;
    for (std::uint32_t x = 0; x < n; ++x) {
        const std::uint32_t c = shadow_.clique_of(x);
        const auto* reds = red_list_if_any(x);
        const std::uint64_t red_deg = reds ? reds->size() : 0;
        if (graph_.degree(x) - red_deg != shadow_.clique_size(c) - 1) return false;
        for (std::uint32_t y : graph_.neighbors(x)) {
            if (reds && std::binary_search(reds->begin(), reds->end(), y)) continue;
            if (shadow_.clique_of(y) != c) return false;
        }
    }
    return true;
}

std::vector<std::uint32_t> CoupledRun::black_component_sizes() const {
    const std::uint32_t n = graph_.vertex_count();
    std::vector<std::uint8_t> seen(n, 0);
    std::vector<std::uint32_t> sizes;
    std::vector<std::uint32_t> stack;
    for (std::uint32_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        seen[s] = 1;
        stack.assign(1, s);
        std::uint32_t size = 0;
        while (!stack.empty()) {
            const std::uint32_t x = stack.back();
            stack.pop_back();
            ++size;
            const auto* reds = red_list_if_any(x);
            for (std::uint32_t y : graph_.neighbors(x)) {
                if (seen[y]) continue;
                if (reds && std::binary_search(reds->begin(), reds->end(), y)) continue;
                seen[y] = 1;
                stack.push_back(y);
            }
        }
        sizes.push_back(size);
    }
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

std::vector<std::uint32_t> CoupledRun::shadow_clique_sizes() const {
    std::vector<std::uint32_t> sizes;
    const auto hist = shadow_.clique_size_histogram();
    for (std::uint32_t k = 1; k < hist.size(); ++k)
        sizes.insert(sizes.end(), hist[k], k);
    return sizes;
}

void CoupledRun::check_color_invariants() const {
    std::uint64_t red_half_edges = 0;
    for (const auto& [x, reds] : red_adj_) {
        if (reds.empty()) throw std::logic_error("empty red list kept alive");
        if (!std::is_sorted(reds.begin(), reds.end())) throw std::logic_error("red list not sorted");
        if (!is_red_vertex(x)) throw std::logic_error("black vertex with red edges");
        for (std::uint32_t y : reds) {
            if (!is_red_vertex(y)) throw std::logic_error("red edge with black endpoint");
            if (!graph_.has_edge(x, y)) throw std::logic_error("red mark on missing edge");
            if (!is_red_edge(y, x)) throw std::logic_error("asymmetric red mark");
        }
        red_half_edges += reds.size();
    }
    if (red_half_edges != 2 * red_edge_count_) throw std::logic_error("red edge count drifted");
    std::uint64_t z = 0;
    for (std::uint8_t r : red_vertex_) z += r;
    if (z != red_vertex_count_) throw std::logic_error("red vertex count drifted");
}

}  // namespace dupdel
