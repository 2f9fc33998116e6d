#include <omp.h>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dupdel/montecarlo.hpp"
#include "dupdel/report.hpp"
#include "dupdel/theory.hpp"

namespace {

using namespace dupdel;

constexpr int kExitPass = 0;
constexpr int kExitComparisonFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitRuntime = 3;

std::string read_input(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open '" + path + "' for reading");
    std::ostringstream buf;
    buf << f.rdbuf();
    if (f.bad()) throw std::runtime_error("read failed for '" + path + "'");
    return buf.str();
}

void write_output(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        std::cout.flush();
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
    f << content;
    f.flush();
    if (!f) throw std::runtime_error("write failed for '" + path + "'");
}

std::vector<std::uint64_t> parse_checkpoints(const std::string& text) {
    if (text == "pow2") return {};  // resolved to the geometric schedule downstream
    std::vector<std::uint64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        const std::uint64_t v = std::stoull(item, &used);
        if (used != item.size()) throw std::invalid_argument("bad checkpoint '" + item + "'");
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("empty checkpoint list");
    return out;
}

// Shared simulate/couple-check option block.
struct SimArgs {
    int version = 2;
    std::uint64_t steps = 0;  // 0 = per-version default
    std::vector<std::uint64_t> seeds;
    std::uint64_t num_seeds = 1;
    std::uint64_t base_seed = 1;
    std::string checkpoints = "pow2";
    int dmax = 8;
    bool couple = false;
    bool check_invariants = false;
    int parallelism = 0;
    std::string format = "json";
    std::string out = "-";
};

void add_sim_options(CLI::App& cmd, SimArgs& args, bool with_version) {
    if (with_version) cmd.add_option("--version", args.version, "Model version")->check(CLI::IsMember({1, 2}));
    cmd.add_option("--steps", args.steps, "Steps to run (default: 1e6 for version 2, 1e5 for version 1)");
    auto* seeds = cmd.add_option("--seeds", args.seeds, "Explicit seed list")->delimiter(',');
    cmd.add_option("--num-seeds", args.num_seeds, "Number of consecutive seeds")->excludes(seeds);
    cmd.add_option("--base-seed", args.base_seed, "First seed of the consecutive range")->excludes(seeds);
    cmd.add_option("--checkpoints", args.checkpoints, "'pow2' or explicit comma-separated steps");
    cmd.add_option("--dmax", args.dmax, "Largest degree reported")->check(CLI::NonNegativeNumber);
    cmd.add_option("--parallelism", args.parallelism, "Worker bound (0 = hardware)");
    cmd.add_flag("--check-invariants", args.check_invariants, "Recheck structural invariants after every step");
    cmd.add_option("--format", args.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    cmd.add_option("--out", args.out, "Output path ('-' = stdout)");
}

MonteCarloConfig to_config(SimArgs& args) {
    if (args.steps == 0) args.steps = args.version == 2 ? 1'000'000 : 100'000;
    MonteCarloConfig config;
    config.version = args.version;
    config.steps = args.steps;
    config.seeds = args.seeds.empty() ? seed_range(args.base_seed, args.num_seeds) : args.seeds;
    config.checkpoints = parse_checkpoints(args.checkpoints);
    config.dmax = args.dmax;
    config.couple = args.couple;
    config.check_invariants = args.check_invariants;
    config.parallelism = args.parallelism;
    return config;
}

int cmd_simulate(SimArgs& args) {
    const RunReport report = monte_carlo(to_config(args));
    write_output(args.out, serialize(report, format_from_name(args.format)));
    if (report.couple_all_match && !*report.couple_all_match) return kExitComparisonFail;
    return kExitPass;
}

struct TheoryArgs {
    int dmax = 10;
    double tol = 1e-8;
    int kmax = 2000;
    std::vector<std::string> methods = {"fixed-point", "quadrature", "asymptotic"};
    int parallelism = 0;
    std::string format = "json";
    std::string out = "-";
};

int cmd_theory(const TheoryArgs& args) {
    if (args.parallelism > 0) omp_set_num_threads(args.parallelism);
    bool want_fp = false, want_quad = false, want_asym = false;
    for (const std::string& m : args.methods) {
        if (m == "fixed-point") want_fp = true;
        else if (m == "quadrature") want_quad = true;
        else if (m == "asymptotic") want_asym = true;
        else throw std::invalid_argument("unknown method '" + m + "'");
    }

    TheoryTable table;
    table.dmax = args.dmax;
    table.tol = args.tol;
    table.methods = args.methods;
    table.rows.resize(args.dmax + 1);
    for (int d = 0; d <= args.dmax; ++d) table.rows[d].d = d;

    std::vector<double> fp_cd, quad_cd;
    if (want_fp) {
        if (args.dmax + 1 > args.kmax / 2)
            throw std::invalid_argument("fixed-point needs kmax >= 2*(dmax+1); got kmax=" + std::to_string(args.kmax));
        const FixedPointResult fp = fixed_point_yk(args.kmax, args.tol);
        table.fixed_point = TheoryFixedPointMeta{args.kmax, static_cast<std::uint64_t>(fp.sweeps), fp.enclosure};
        fp_cd.resize(args.dmax + 1);
        for (int d = 0; d <= args.dmax; ++d) {
            fp_cd[d] = (d + 1) * fp.y[d + 1];
            table.rows[d].fixed_point = fp_cd[d];
        }
    }
    if (want_quad) {
        quad_cd = cd_table_quadrature(args.dmax, args.tol);
        for (int d = 0; d <= args.dmax; ++d) table.rows[d].quadrature = quad_cd[d];
        table.normalization_residual = normalization_check(quad_cd, true);
    }
    if (want_asym) {
        for (int d = 1; d <= args.dmax; ++d) table.rows[d].asymptotic = cd_asymptotic(d);
        table.asymptotic_note = "asymptotic, not exact";
    }

    // Residuals of the degree recursion, computed on the best exact column.
    const std::vector<double>& cd = want_quad ? quad_cd : fp_cd;
    if (!cd.empty()) {
        for (int d = 0; d + 1 <= args.dmax; ++d) {
            table.rows[d].recursion_residual =
                d == 0 ? std::abs(3.0 * cd[0] - 1.0 - cd[1])
                       : std::abs((2.0 * d + 3.0) * cd[d] - (d + 1.0) * (cd[d - 1] + cd[d + 1]));
        }
    }
    if (want_fp && want_quad)
        for (int d = 0; d <= args.dmax; ++d) table.rows[d].cross_method_gap = std::abs(fp_cd[d] - quad_cd[d]);

    write_output(args.out, serialize(table, format_from_name(args.format)));
    return kExitPass;
}

struct CompareArgs {
    std::string sim_path;
    std::string theory_path;
    int dmax = -1;  // -1 = the simulation report's dmax
    double tol = 0.01;
    double tol_global = 0.1;
    double tol_average = 0.02;
    std::string format = "csv";
    std::string out = "-";
};

int cmd_compare(const CompareArgs& args) {
    const std::string sim_text = read_input(args.sim_path);
    const std::string theory_text = read_input(args.theory_path);
    if (detect_kind(sim_text) != "simulate")
        throw std::invalid_argument("first input must be a simulation report: " + args.sim_path);
    if (detect_kind(theory_text) != "theory")
        throw std::invalid_argument("second input must be a theory table: " + args.theory_path);
    const RunReport sim = parse_run_report(sim_text);
    const TheoryTable theory = parse_theory_table(theory_text);
    if (sim.checkpoints.empty()) throw std::invalid_argument("simulation report has no checkpoints");

    const int dmax = args.dmax >= 0 ? args.dmax : sim.config.dmax;
    if (dmax > sim.config.dmax)
        throw std::invalid_argument("simulation report only covers d <= " + std::to_string(sim.config.dmax));

    // Theoretical column preference: quadrature, then fixed-point, then asymptotic.
    std::map<int, double> theoretical;
    for (const TheoryRow& row : theory.rows) {
        if (row.quadrature) theoretical[row.d] = *row.quadrature;
        else if (row.fixed_point) theoretical[row.d] = *row.fixed_point;
        else if (row.asymptotic) theoretical[row.d] = *row.asymptotic;
    }
    for (int d = 0; d <= std::max(dmax, 1); ++d)
        if (!theoretical.count(d))
            throw std::invalid_argument("theory table lacks a value at d=" + std::to_string(d) +
                                        " (incompatible dmax; rerun theory)");

    const CheckpointReport& last = sim.checkpoints.back();
    CompareReport out;
    bool all_pass = true;
    auto push_row = [&](const std::string& label, double mean, double stderr_, double theo, double tol) {
        CompareRow row;
        row.label = label;
        row.empirical_mean = mean;
        row.empirical_stderr = stderr_;
        row.theoretical = theo;
        row.gap = std::abs(mean - theo);
        row.verdict = *row.gap < tol ? "pass" : "fail";
        all_pass = all_pass && row.verdict == "pass";
        out.rows.push_back(std::move(row));
    };
    for (int d = 0; d <= dmax; ++d) {
        const DegreeRow* emp = nullptr;
        for (const DegreeRow& row : last.degrees)
            if (row.d == d) emp = &row;
        if (!emp) throw std::invalid_argument("simulation report lacks degree row d=" + std::to_string(d));
        push_row(std::to_string(d), emp->proportion, emp->stderr_, theoretical.at(d), args.tol);
    }
    push_row("clustering_global", sim.clustering.global_mean, sim.clustering.global_stderr, 1.0, args.tol_global);
    push_row("clustering_average", sim.clustering.average_mean, sim.clustering.average_stderr,
             1.0 - theoretical.at(0) - theoretical.at(1), args.tol_average);
    out.verdict = all_pass ? "pass" : "fail";

    write_output(args.out, serialize(out, format_from_name(args.format)));
    return all_pass ? kExitPass : kExitComparisonFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Duplication-deletion random graph simulator and c_d toolkit"};
    app.require_subcommand(1);

    SimArgs sim_args;
    CLI::App* simulate = app.add_subcommand("simulate", "Run the model over seeds and write an aggregated report");
    add_sim_options(*simulate, sim_args, /*with_version=*/true);
    simulate->add_flag("--couple", sim_args.couple, "Color-coupled run with the clique shadow (version 1 only)");

    TheoryArgs theory_args;
    CLI::App* theory = app.add_subcommand("theory", "Tabulate the limiting degree distribution c_d");
    theory->add_option("--dmax", theory_args.dmax, "Largest degree")->check(CLI::NonNegativeNumber);
    theory->add_option("--tol", theory_args.tol, "Enclosure / relative tolerance")->check(CLI::PositiveNumber);
    theory->add_option("--kmax", theory_args.kmax, "Fixed-point truncation index")->check(CLI::PositiveNumber);
    theory->add_option("--methods", theory_args.methods, "Any of fixed-point,quadrature,asymptotic")->delimiter(',');
    theory->add_option("--parallelism", theory_args.parallelism, "Worker bound (0 = hardware)");
    theory->add_option("--format", theory_args.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    theory->add_option("--out", theory_args.out, "Output path ('-' = stdout)");

    CompareArgs compare_args;
    CLI::App* compare = app.add_subcommand("compare", "Compare a simulation report against a theory table");
    compare->add_option("simulation", compare_args.sim_path, "Simulation report (csv or json)")->required();
    compare->add_option("theory", compare_args.theory_path, "Theory table (csv or json)")->required();
    compare->add_option("--dmax", compare_args.dmax, "Largest degree compared (default: the report's dmax)");
    compare->add_option("--tol", compare_args.tol, "Tolerance per degree row")->check(CLI::PositiveNumber);
    compare->add_option("--tol-global", compare_args.tol_global, "Tolerance for global clustering vs 1")
        ->check(CLI::PositiveNumber);
    compare->add_option("--tol-average", compare_args.tol_average, "Tolerance for average clustering vs 1-c0-c1")
        ->check(CLI::PositiveNumber);
    compare->add_option("--format", compare_args.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    compare->add_option("--out", compare_args.out, "Output path ('-' = stdout)");

    SimArgs couple_args;
    couple_args.version = 1;
    couple_args.steps = 10'000;
    CLI::App* couple = app.add_subcommand("couple-check", "Coupled version-1 run; fails unless the black subgraph "
                                                          "matches the clique shadow at every checkpoint");
    add_sim_options(*couple, couple_args, /*with_version=*/false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (simulate->parsed()) return cmd_simulate(sim_args);
        if (theory->parsed()) return cmd_theory(theory_args);
        if (compare->parsed()) return cmd_compare(compare_args);
        couple_args.couple = true;
        return cmd_simulate(couple_args);
    } catch (const SolverError& e) {
        std::cerr << "solver failure: " << e.what() << "\n";
        return kExitRuntime;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
}
