#pragma once

#include <cstdint>
#include <vector>

namespace dupdel {

// Exact degree counts of one graph snapshot: counts[d] vertices of degree d.
struct DegreeHistogram {
    std::vector<std::uint64_t> counts;
    std::uint64_t vertex_count = 0;

    std::uint64_t count(std::uint32_t d) const {
        return d < counts.size() ? counts[d] : 0;
    }

    double proportion(std::uint32_t d) const {
        return vertex_count == 0 ? 0.0 : static_cast<double>(count(d)) / static_cast<double>(vertex_count);
    }

    std::uint32_t max_degree() const {
        for (std::size_t d = counts.size(); d-- > 0;)
            if (counts[d] > 0) return static_cast<std::uint32_t>(d);
        return 0;
    }
};

}  // namespace dupdel
