#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

namespace dupdel {

// One step's random picks: u is duplicated, v has its edges erased.
struct PickPair {
    std::uint32_t u;
    std::uint32_t v;
};

// Seeded source of the per-step vertex picks shared by all model variants.
// Both picks at step n are uniform on the n old vertices {0,...,n-1}, drawn
// independently with replacement. mt19937_64 is bit-specified by the
// standard and the bounded draw uses rejection sampling, so a seed replays
// to the identical stream on any platform.
class ChoiceStream {
public:
    explicit ChoiceStream(std::uint64_t seed) : seed_(seed), rng_(seed) {}

    std::uint64_t seed() const { return seed_; }
    std::uint64_t step_index() const { return step_; }

    // Picks for the step that grows the graph from old_count to old_count+1
    // vertices. old_count must be >= 1.
    PickPair next(std::uint32_t old_count) {
        if (old_count == 0) throw std::invalid_argument("ChoiceStream: old_count must be positive");
        ++step_;
        std::uint32_t u = draw_bounded(old_count);
        std::uint32_t v = draw_bounded(old_count);
        return {u, v};
    }

    void reset() {
        rng_.seed(seed_);
        step_ = 0;
    }

private:
    // Uniform on [0, n) without modulo bias.
    std::uint32_t draw_bounded(std::uint32_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = rng_();
        } while (x >= limit);
        return static_cast<std::uint32_t>(x % n);
    }

    std::uint64_t seed_;
    std::uint64_t step_ = 0;
    std::mt19937_64 rng_;
};

}  // namespace dupdel
