#include "dupdel/montecarlo.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dupdel {

namespace {

struct MeanStderr {
    double mean = 0.0;
    double stderr_ = 0.0;
};

MeanStderr mean_stderr(const std::vector<double>& xs) {
    MeanStderr out;
    const double n = static_cast<double>(xs.size());
    for (double x : xs) out.mean += x;
    out.mean /= n;
    if (xs.size() < 2) return out;  // stderr of a single sample: reported as 0
    double ss = 0.0;
    for (double x : xs) ss += (x - out.mean) * (x - out.mean);
    out.stderr_ = std::sqrt(ss / (n - 1.0) / n);
    return out;
}

std::uint64_t count_at(const std::vector<std::uint64_t>& counts, std::size_t i) {
    return i < counts.size() ? counts[i] : 0;
}

}  // namespace

std::vector<std::uint64_t> seed_range(std::uint64_t base, std::uint64_t count) {
    std::vector<std::uint64_t> seeds(count);
    for (std::uint64_t i = 0; i < count; ++i) seeds[i] = base + i;
    return seeds;
}

RunReport monte_carlo(const MonteCarloConfig& config) {
    if (config.version != 1 && config.version != 2) throw std::invalid_argument("monte_carlo: version must be 1 or 2");
    if (config.steps == 0) throw std::invalid_argument("monte_carlo: steps must be >= 1");
    if (config.seeds.empty()) throw std::invalid_argument("monte_carlo: need at least one seed");
    if (config.dmax < 0) throw std::invalid_argument("monte_carlo: dmax must be >= 0");
    if (config.couple && config.version != 1) throw std::invalid_argument("monte_carlo: --couple requires version 1");

    const std::vector<std::uint64_t> checkpoints =
        config.checkpoints.empty() ? pow2_checkpoints(config.steps) : config.checkpoints;
    const std::size_t num_seeds = config.seeds.size();
    const int workers = config.parallelism > 0 ? config.parallelism : omp_get_max_threads();

    std::vector<RunResult> results(num_seeds);
    std::exception_ptr failure = nullptr;
#pragma omp parallel for schedule(dynamic) num_threads(workers)
    for (std::size_t i = 0; i < num_seeds; ++i) {
        try {
            RunSpec spec;
            spec.version = config.version;
            spec.steps = config.steps;
            spec.seed = config.seeds[i];
            spec.checkpoints = checkpoints;
            spec.couple = config.couple;
            spec.check_invariants = config.check_invariants;
            results[i] = simulate_run(spec);
        } catch (...) {
#pragma omp critical
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);

    RunReport report;
    report.config.version = config.version;
    report.config.steps = config.steps;
    report.config.seeds = config.seeds;
    report.config.checkpoints = checkpoints;
    report.config.dmax = config.dmax;
    report.config.couple = config.couple;

    std::vector<double> samples(num_seeds);
    for (std::size_t c = 0; c < checkpoints.size(); ++c) {
        CheckpointReport cp;
        cp.step = checkpoints[c];
        cp.vertex_count = checkpoints[c] + 1;
        const double vertices = static_cast<double>(cp.vertex_count);
        for (int d = 0; d <= config.dmax; ++d) {
            for (std::size_t i = 0; i < num_seeds; ++i)
                samples[i] = static_cast<double>(count_at(results[i].checkpoints[c].degree_counts, d)) / vertices;
            const MeanStderr ms = mean_stderr(samples);
            cp.degrees.push_back({d, ms.mean, ms.stderr_});
        }
        if (config.version == 2) {
            for (int k = 1; k <= config.dmax + 1; ++k) {
                double per_step = 0.0;
                for (std::size_t i = 0; i < num_seeds; ++i) {
                    const double y = static_cast<double>(count_at(results[i].checkpoints[c].clique_counts, k));
                    samples[i] = y / vertices;
                    per_step += y / static_cast<double>(cp.step);
                }
                const MeanStderr ms = mean_stderr(samples);
                cp.cliques.push_back({k, ms.mean, ms.stderr_, per_step / static_cast<double>(num_seeds)});
            }
        }
        GrowthReport& g = cp.growth;
        g.edges_per_step_min = results[0].checkpoints[c].growth.edges_per_step;
        g.edges_per_step_max = g.edges_per_step_min;
        for (std::size_t i = 0; i < num_seeds; ++i) {
            const GrowthRow& row = results[i].checkpoints[c].growth;
            g.edges_mean += static_cast<double>(row.edges);
            g.edges_per_step_mean += row.edges_per_step;
            g.edges_per_step_min = std::min(g.edges_per_step_min, row.edges_per_step);
            g.edges_per_step_max = std::max(g.edges_per_step_max, row.edges_per_step);
            g.max_degree_max = std::max<std::uint64_t>(g.max_degree_max, row.max_degree);
            if (config.couple) {
                g.red_vertices_max = std::max(g.red_vertices_max, row.red_vertices);
                g.red_edges_max = std::max(g.red_edges_max, row.red_edges);
            }
        }
        g.edges_mean /= static_cast<double>(num_seeds);
        g.edges_per_step_mean /= static_cast<double>(num_seeds);
        g.has_red = config.couple;
        if (config.couple) {
            bool all = true;
            for (const RunResult& r : results) all = all && r.checkpoints[c].couple_match;
            cp.couple_match = all;
        }
        report.checkpoints.push_back(std::move(cp));
    }

    auto clustering_stat = [&](auto pick) {
        for (std::size_t i = 0; i < num_seeds; ++i) samples[i] = pick(results[i].clustering);
        return mean_stderr(samples);
    };
    const MeanStderr global = clustering_stat([](const ClusteringStats& s) { return s.global; });
    const MeanStderr average = clustering_stat([](const ClusteringStats& s) { return s.average; });
    report.clustering.global_mean = global.mean;
    report.clustering.global_stderr = global.stderr_;
    report.clustering.average_mean = average.mean;
    report.clustering.average_stderr = average.stderr_;
    report.clustering.global_min = report.clustering.global_max = results[0].clustering.global;
    report.clustering.average_min = report.clustering.average_max = results[0].clustering.average;
    for (const RunResult& r : results) {
        report.clustering.global_min = std::min(report.clustering.global_min, r.clustering.global);
        report.clustering.global_max = std::max(report.clustering.global_max, r.clustering.global);
        report.clustering.average_min = std::min(report.clustering.average_min, r.clustering.average);
        report.clustering.average_max = std::max(report.clustering.average_max, r.clustering.average);
    }
    if (config.couple) {
        bool all = true;
        for (const RunResult& r : results) all = all && r.couple_all_match;
        for (const CheckpointReport& cp : report.checkpoints) all = all && cp.couple_match.value_or(true);
        report.couple_all_match = all;
    }
    return report;
}

}  // namespace dupdel
