#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dupdel {

enum class Format { csv, json };

Format format_from_name(const std::string& name);  // "csv" | "json"

// Fixed 9-significant-digit rendering. Nine digits round-trip through a
// double exactly (decimal -> binary -> decimal is the identity up to 15
// digits), which is what makes serialize/parse/serialize byte-stable.
std::string format_decimal(double x);
double parse_decimal(const std::string& s);

// --------------------------------------------------------------------------
// Simulation report (aggregated over seeds)
// --------------------------------------------------------------------------

struct ReportConfig {
    int version = 2;
    std::uint64_t steps = 0;
    std::vector<std::uint64_t> seeds;
    std::vector<std::uint64_t> checkpoints;
    int dmax = 8;
    bool couple = false;
};

struct DegreeRow {
    int d = 0;
    double proportion = 0.0;  // mean over seeds of X[n,d] / (n+1)
    double stderr_ = 0.0;     // sample standard error of that mean
};

struct CliqueRow {
    int k = 0;
    double proportion = 0.0;  // mean over seeds of Y[n,k] / (n+1)
    double stderr_ = 0.0;
    double per_step = 0.0;    // mean over seeds of Y[n,k] / n
};

struct GrowthReport {
    double edges_mean = 0.0;
    double edges_per_step_mean = 0.0;
    double edges_per_step_min = 0.0;
    double edges_per_step_max = 0.0;
    std::uint64_t max_degree_max = 0;
    bool has_red = false;
    std::uint64_t red_vertices_max = 0;
    std::uint64_t red_edges_max = 0;
};

struct CheckpointReport {
    std::uint64_t step = 0;
    std::uint64_t vertex_count = 0;
    std::vector<DegreeRow> degrees;
    std::vector<CliqueRow> cliques;  // version 2 only
    GrowthReport growth;
    std::optional<bool> couple_match;  // all seeds matched (coupled runs)
};

struct ClusteringReport {
    double global_mean = 0.0, global_stderr = 0.0, global_min = 0.0, global_max = 0.0;
    double average_mean = 0.0, average_stderr = 0.0, average_min = 0.0, average_max = 0.0;
};

struct RunReport {
    ReportConfig config;
    std::vector<CheckpointReport> checkpoints;
    ClusteringReport clustering;
    std::optional<bool> couple_all_match;
};

// --------------------------------------------------------------------------
// Theory table
// --------------------------------------------------------------------------

struct TheoryFixedPointMeta {
    int k_max = 0;
    std::uint64_t sweeps = 0;
    double enclosure = 0.0;
};

struct TheoryRow {
    int d = 0;
    std::optional<double> fixed_point;
    std::optional<double> quadrature;
    std::optional<double> asymptotic;
    std::optional<double> recursion_residual;  // |(2d+3)c_d - (d+1)(c_{d-1}+c_{d+1})|, |3c_0 - 1 - c_1| at d=0
    std::optional<double> cross_method_gap;    // |fixed_point - quadrature|
};

struct TheoryTable {
    int dmax = 0;
    double tol = 0.0;
    std::vector<std::string> methods;
    std::optional<TheoryFixedPointMeta> fixed_point;
    std::vector<TheoryRow> rows;
    std::optional<double> normalization_residual;
    std::string asymptotic_note;  // set when the asymptotic column is present
};

// --------------------------------------------------------------------------
// Comparison report
// --------------------------------------------------------------------------

struct CompareRow {
    std::string label;  // "0", "1", ... or "clustering_global" / "clustering_average"
    std::optional<double> empirical_mean;
    std::optional<double> empirical_stderr;
    std::optional<double> theoretical;
    std::optional<double> gap;
    std::string verdict;  // "pass" | "fail"
};

struct CompareReport {
    std::vector<CompareRow> rows;
    std::string verdict;  // overall
};

// --------------------------------------------------------------------------
// Serialization. JSON nests; CSV flattens to key,value rows with dot paths —
// except comparison CSV, which uses the fixed tabular schema
//   d,empirical_mean,empirical_stderr,theoretical,gap,verdict
// Every float is written via format_decimal, so serialize -> parse ->
// serialize is byte-identical and both formats carry the same numbers.
// --------------------------------------------------------------------------

std::string serialize(const RunReport& report, Format format);
std::string serialize(const TheoryTable& table, Format format);
std::string serialize(const CompareReport& report, Format format);

// Parsers sniff the format (JSON starts with '{') and validate the kind.
// Unknown or missing fields are errors, not warnings.
RunReport parse_run_report(const std::string& text);
TheoryTable parse_theory_table(const std::string& text);
CompareReport parse_compare_report(const std::string& text);

// "simulate", "theory" or "compare" — without fully parsing.
std::string detect_kind(const std::string& text);

}  // namespace dupdel
