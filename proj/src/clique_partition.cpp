#include "dupdel/clique_partition.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace dupdel {

CliquePartition::CliquePartition() {
    clique_of_.push_back(0);
    clique_size_.push_back(1);
    live_cliques_ = 1;
}

CliquePartition::CliquePartition(const std::vector<std::uint32_t>& clique_of) : clique_of_(clique_of) {
    if (clique_of_.empty()) throw std::invalid_argument("CliquePartition: need at least one vertex");
    const std::uint32_t max_id = *std::max_element(clique_of_.begin(), clique_of_.end());
    clique_size_.assign(static_cast<std::size_t>(max_id) + 1, 0);
    for (std::uint32_t c : clique_of_) clique_size_[c] += 1;
    for (std::uint32_t s : clique_size_)
        if (s > 0) live_cliques_ += 1;
}

std::uint32_t CliquePartition::clique_of(std::uint32_t v) const {
    if (v >= clique_of_.size()) throw std::out_of_range("CliquePartition: vertex id " + std::to_string(v));
    return clique_of_[v];
}

void CliquePartition::step(PickPair picks) {
    const std::uint32_t n = vertex_count();
    if (picks.u >= n || picks.v >= n)
        throw std::out_of_range("CliquePartition::step: pick outside old vertices");

    // Duplication: the new vertex joins u's clique.
    const std::uint32_t grown = clique_of_[picks.u];
    clique_size_[grown] += 1;
    clique_of_.push_back(grown);

    // Erasure: v becomes a singleton unless it already is one.
    const std::uint32_t cv = clique_of_[picks.v];
    if (clique_size_[cv] > 1) {
        clique_size_[cv] -= 1;
        clique_of_[picks.v] = static_cast<std::uint32_t>(clique_size_.size());
        clique_size_.push_back(1);
        live_cliques_ += 1;
    }
}

std::vector<std::uint64_t> CliquePartition::clique_size_histogram() const {
    std::vector<std::uint64_t> hist(static_cast<std::size_t>(max_clique_size()) + 1, 0);
    for (std::uint32_t s : clique_size_)
        if (s > 0) hist[s] += 1;
    return hist;
}

DegreeHistogram CliquePartition::degree_histogram() const {
    DegreeHistogram h;
    h.vertex_count = vertex_count();
    h.counts.assign(max_clique_size(), 0);
    for (std::uint32_t s : clique_size_)
        if (s > 0) h.counts[s - 1] += s;
    return h;
}

std::uint32_t CliquePartition::max_clique_size() const {
    std::uint32_t m = 0;
    for (std::uint32_t s : clique_size_) m = std::max(m, s);
    return m;
}

std::uint64_t CliquePartition::edge_count() const {
    std::uint64_t e = 0;
    for (std::uint32_t s : clique_size_) e += static_cast<std::uint64_t>(s) * (s - 1) / 2;
    return e;
}

double CliquePartition::clustering_global() const {
    return max_clique_size() >= 3 ? 1.0 : 0.0;
}

double CliquePartition::clustering_average() const {
    std::uint64_t deg_ge_2 = 0;
    for (std::uint32_t s : clique_size_)
        if (s >= 3) deg_ge_2 += s;
    return static_cast<double>(deg_ge_2) / static_cast<double>(vertex_count());
}

void CliquePartition::check_invariants() const {
    std::vector<std::uint64_t> seen(clique_size_.size(), 0);
    for (std::uint32_t v = 0; v < clique_of_.size(); ++v) {
        const std::uint32_t c = clique_of_[v];
        if (c >= clique_size_.size()) throw std::logic_error("clique id out of range");
        if (clique_size_[c] == 0) throw std::logic_error("vertex mapped to dead clique");
        seen[c] += 1;
    }
    std::uint64_t total = 0;
    std::uint64_t live = 0;
    for (std::uint32_t c = 0; c < clique_size_.size(); ++c) {
        if (seen[c] != clique_size_[c])
            throw std::logic_error("clique size disagrees with vertex map");
        total += clique_size_[c];
        if (clique_size_[c] > 0) live += 1;
    }
    if (total != vertex_count()) throw std::logic_error("clique sizes do not sum to vertex count");
    if (live != live_cliques_) throw std::logic_error("live clique count drifted");
}

}  // namespace dupdel
