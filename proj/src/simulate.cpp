#include "dupdel/simulate.hpp"

#include <algorithm>
#include <stdexcept>

namespace dupdel {

std::vector<std::uint64_t> pow2_checkpoints(std::uint64_t steps) {
    std::vector<std::uint64_t> cps;
    for (std::uint64_t c = 1; c < steps; c *= 2) cps.push_back(c);
    if (steps >= 1) cps.push_back(steps);
    return cps;
}

namespace {

void validate(const RunSpec& spec) {
    if (spec.version != 1 && spec.version != 2)
        throw std::invalid_argument("simulate_run: version must be 1 or 2");
    if (spec.couple && spec.version != 1)
        throw std::invalid_argument("simulate_run: coupling applies to version 1 only");
    for (std::size_t i = 0; i < spec.checkpoints.size(); ++i) {
        if (spec.checkpoints[i] == 0 || spec.checkpoints[i] > spec.steps)
            throw std::invalid_argument("simulate_run: checkpoint outside 1..steps");
        if (i > 0 && spec.checkpoints[i] <= spec.checkpoints[i - 1])
            throw std::invalid_argument("simulate_run: checkpoints must be strictly increasing");
    }
}

GrowthRow growth_from_partition(const CliquePartition& p, std::uint64_t n) {
    GrowthRow row;
    row.n = n;
    row.edges = p.edge_count();
    row.edges_per_step = n == 0 ? 0.0 : static_cast<double>(row.edges) / static_cast<double>(n);
    std::uint32_t m = p.max_clique_size();
    row.max_degree = m == 0 ? 0 : m - 1;
    return row;
}

GrowthRow growth_from_graph(const AdjacencyGraph& g, std::uint64_t n) {
    GrowthRow row;
    row.n = n;
    row.edges = g.edge_count();
    row.edges_per_step = n == 0 ? 0.0 : static_cast<double>(row.edges) / static_cast<double>(n);
    row.max_degree = g.max_degree();
    return row;
}

}  // namespace

RunResult simulate_run(const RunSpec& spec) {
    validate(spec);
    RunResult result;
    result.spec = spec;
    result.coupled = spec.couple;

    ChoiceStream stream(spec.seed);
    auto at_checkpoint = spec.checkpoints.begin();

    if (spec.version == 2) {
        CliquePartition state;
        for (std::uint64_t step = 1; step <= spec.steps; ++step) {
            state.step(stream.next(state.vertex_count()));
            if (spec.check_invariants) state.check_invariants();
            if (at_checkpoint != spec.checkpoints.end() && *at_checkpoint == step) {
                CheckpointData cp;
                cp.n = step;
                cp.degree_counts = state.degree_histogram().counts;
                cp.clique_counts = state.clique_size_histogram();
                cp.growth = growth_from_partition(state, step);
                result.checkpoints.push_back(std::move(cp));
                ++at_checkpoint;
            }
        }
        result.clustering.global = state.clustering_global();
        result.clustering.average = state.clustering_average();
        return result;
    }

    if (!spec.couple) {
        AdjacencyGraph graph;
        for (std::uint64_t step = 1; step <= spec.steps; ++step) {
            graph.step(stream.next(graph.vertex_count()));
            if (spec.check_invariants) graph.check_invariants();
            if (at_checkpoint != spec.checkpoints.end() && *at_checkpoint == step) {
                CheckpointData cp;
                cp.n = step;
                cp.degree_counts = graph.degree_histogram().counts;
                cp.growth = growth_from_graph(graph, step);
                result.checkpoints.push_back(std::move(cp));
                ++at_checkpoint;
            }
        }
        result.clustering = clustering_stats(graph);
        return result;
    }

    CoupledRun run;
    for (std::uint64_t step = 1; step <= spec.steps; ++step) {
        run.step(stream.next(run.vertex_count()));
        if (spec.check_invariants) {
            run.graph().check_invariants();
            run.shadow().check_invariants();
            run.check_color_invariants();
        }
        if (at_checkpoint != spec.checkpoints.end() && *at_checkpoint == step) {
            CheckpointData cp;
            cp.n = step;
            cp.degree_counts = run.graph().degree_histogram().counts;
            cp.clique_counts = run.shadow().clique_size_histogram();
            cp.growth = run.growth_row(step);
            cp.couple_match = run.black_subgraph_equals_shadow();
            result.couple_all_match = result.couple_all_match && cp.couple_match;
            result.checkpoints.push_back(std::move(cp));
            ++at_checkpoint;
        }
    }
    result.clustering = clustering_stats(run.graph());
    return result;
}

}  // namespace dupdel
