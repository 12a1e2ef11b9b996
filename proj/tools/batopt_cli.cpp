#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "batopt/assignment.hpp"
#include "batopt/experiment.hpp"
#include "batopt/functions.hpp"
#include "batopt/stats.hpp"
#include "batopt/swarm.hpp"

namespace {

using namespace batopt;

struct CommonOptions {
    std::vector<std::string> functions{"all"};
    int runs = 30;
    int dim = 0;
    std::string preset;
    std::string out;
    std::string format = "csv";
    SwarmConfig cfg;
};

void add_swarm_flags(CLI::App& cmd, SwarmConfig& cfg) {
    cmd.add_option("--pop", cfg.population_size, "Population size")->capture_default_str();
    cmd.add_option("--iters", cfg.max_iterations, "Iterations per run")->capture_default_str();
    cmd.add_option("--seed", cfg.rng_seed, "Base RNG seed")->capture_default_str();
    cmd.add_option("--alpha", cfg.alpha, "Loudness decay factor")->capture_default_str();
    cmd.add_option("--gamma", cfg.gamma, "Pulse-rate growth factor")->capture_default_str();
    cmd.add_option("--fmin", cfg.f_min, "Frequency lower bound")->capture_default_str();
    cmd.add_option("--fmax", cfg.f_max, "Frequency upper bound")->capture_default_str();
    cmd.add_option("--a0", cfg.initial_loudness, "Initial loudness")->capture_default_str();
    cmd.add_option("--r0", cfg.initial_pulse_rate, "Pulse-rate asymptote")
        ->capture_default_str();
}

void add_report_flags(CLI::App& cmd, CommonOptions& opts) {
    cmd.add_option("--fn", opts.functions,
                   "Functions to run: F1..F23, comma separated, or 'all'")
        ->delimiter(',')
        ->capture_default_str();
    cmd.add_option("--runs", opts.runs, "Independent runs per function")->capture_default_str();
    cmd.add_option("--dim", opts.dim, "Dimension override for F1-F13");
    cmd.add_option("--preset", opts.preset, "Named preset: 'yang' (pop 40, large dims)");
    cmd.add_option("--out", opts.out, "Output file (stdout when omitted)");
    cmd.add_option("--format", opts.format, "Report format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    add_swarm_flags(cmd, opts.cfg);
}

std::vector<FunctionTask> resolve_tasks(const CommonOptions& opts) {
    std::vector<FunctionTask> tasks;
    const bool want_all =
        opts.functions.size() == 1 && (opts.functions[0] == "all" || opts.functions[0] == "ALL");
    if (want_all) {
        for (const BenchmarkSpec& spec : all_functions())
            tasks.push_back({spec.id, opts.dim});
    } else {
        for (const std::string& name : opts.functions) {
            const auto id = parse_function_id(name);
            if (!id) throw std::invalid_argument("unknown function '" + name + "'");
            tasks.push_back({*id, opts.dim});
        }
    }
    return tasks;
}

ExperimentPlan build_plan(const CommonOptions& opts, AlgorithmChoice algorithm) {
    ExperimentPlan plan;
    plan.algorithm = algorithm;
    plan.runs = opts.runs;
    plan.cfg = opts.cfg;
    plan.tasks = resolve_tasks(opts);
    if (!opts.preset.empty()) {
        if (opts.preset != "yang")
            throw std::invalid_argument("unknown preset '" + opts.preset + "'");
        apply_yang_preset(plan);
    }
    plan.validate();
    return plan;
}

void emit_report(const CommonOptions& opts, const std::string& csv, const std::string& json) {
    const std::string& text = opts.format == "json" ? json : csv;
    if (opts.out.empty()) {
        std::cout << text;
    } else {
        write_file_atomic(opts.out, text);
    }
}

AlgorithmChoice parse_algorithm(const std::string& name) {
    if (name == "ba") return AlgorithmChoice::ba;
    if (name == "mba") return AlgorithmChoice::mba;
    if (name == "both") return AlgorithmChoice::both;
    throw std::invalid_argument("unknown algorithm '" + name + "'");
}

int cmd_list_functions() {
    std::printf("%-5s %-22s %-18s %s\n", "id", "name", "dim", "bounds");
    for (const BenchmarkSpec& spec : all_functions()) {
        std::string dim = spec.fixed_dim > 0
                              ? "fixed " + std::to_string(spec.fixed_dim)
                              : "configurable (" + std::to_string(default_dimension) + ")";
        std::ostringstream bounds;
        if (spec.lower.size() == 1) {
            bounds << '[' << spec.lower[0] << ", " << spec.upper[0] << ']';
        } else {
            for (std::size_t d = 0; d < spec.lower.size(); ++d) {
                if (d) bounds << " x ";
                bounds << '[' << spec.lower[d] << ", " << spec.upper[d] << ']';
            }
        }
        std::printf("%-5s %-22s %-18s %s\n", to_string(spec.id).c_str(),
                    std::string(spec.name).c_str(), dim.c_str(), bounds.str().c_str());
    }
    return 0;
}

int cmd_bench(const CommonOptions& opts, const std::string& algo) {
    const ExperimentPlan plan = build_plan(opts, parse_algorithm(algo));
    const BenchReport report = run_bench(plan);
    emit_report(opts, to_csv(report), to_json(report));
    return 0;
}

int cmd_compare(const CommonOptions& opts) {
    const ExperimentPlan plan = build_plan(opts, AlgorithmChoice::both);
    const ComparisonReport report = run_compare(plan);
    emit_report(opts, to_csv(report), to_json(report));
    return 0;
}

void print_assignment(const CostMatrix& matrix, const Assignment& solution) {
    std::printf("jobs: %zu\n", matrix.n);
    for (std::size_t j = 0; j < matrix.n; ++j) {
        const auto w = static_cast<std::size_t>(solution.perm[j]);
        std::printf("  job %zu -> worker %zu (%g s)\n", j, w, matrix.at(j, w));
    }
    std::printf("total: %g seconds (%.4f minutes)\n", solution.total_cost,
                solution.total_cost / 60.0);
}

int run_assignment_study(const std::string& range, const CommonOptions& opts) {
    std::size_t lo = 0, hi = 0;
    char dash = 0;
    std::istringstream in(range);
    if (!(in >> lo >> dash >> hi) || dash != '-' || lo < 1 || hi < lo)
        throw std::invalid_argument("--study expects a range like 4-8");

    std::ostringstream csv;
    csv << "dimension,runs,average_value,std_dev,minutes\n";
    for (std::size_t n = lo; n <= hi; ++n) {
        std::vector<double> costs;
        for (int run = 0; run < opts.runs; ++run) {
            SwarmConfig cfg = opts.cfg;
            cfg.rng_seed = opts.cfg.rng_seed + static_cast<std::uint64_t>(run);
            Rng matrix_rng(cfg.rng_seed);
            const CostMatrix matrix = random_cost_matrix(n, matrix_rng);
            const auto [solution, result] = solve_assignment_mba(matrix, cfg);
            costs.push_back(solution.total_cost);
        }
        const SampleSummary summary = summarize(costs);
        csv << n << ',' << opts.runs << ',' << format_sci(summary.mean) << ','
            << format_sci(summary.std_dev) << ',' << format_sci(summary.mean / 60.0) << '\n';
    }
    if (opts.out.empty()) {
        std::cout << csv.str();
    } else {
        write_file_atomic(opts.out, csv.str());
    }
    return 0;
}

int cmd_assign(const std::string& matrix_file, bool oracle, const std::string& study,
               const CommonOptions& opts) {
    if (!study.empty()) return run_assignment_study(study, opts);
    if (matrix_file.empty())
        throw std::invalid_argument("assign needs a cost matrix file (or --study)");

    const CostMatrix matrix = CostMatrix::load(matrix_file);
    const auto [solution, result] = solve_assignment_mba(matrix, opts.cfg);
    print_assignment(matrix, solution);

    bool matched = true;
    std::optional<Assignment> optimum;
    if (oracle) {
        optimum = brute_force_optimum(matrix);
        matched = optimum->total_cost == solution.total_cost;
        std::printf("oracle: %g seconds, match: %s\n", optimum->total_cost,
                    matched ? "yes" : "no");
    }

    if (!opts.out.empty()) {
        std::ostringstream text;
        if (opts.format == "json") {
            text << "{\n  \"assignment\": [";
            for (std::size_t j = 0; j < solution.perm.size(); ++j)
                text << (j ? ", " : "") << solution.perm[j];
            text << "],\n  \"total_seconds\": " << solution.total_cost
                 << ",\n  \"total_minutes\": " << solution.total_cost / 60.0;
            if (optimum) {
                text << ",\n  \"oracle_seconds\": " << optimum->total_cost
                     << ",\n  \"oracle_match\": " << (matched ? "true" : "false");
            }
            text << "\n}\n";
        } else {
            text << "job,worker,seconds\n";
            for (std::size_t j = 0; j < solution.perm.size(); ++j)
                text << j << ',' << solution.perm[j] << ','
                     << matrix.at(j, static_cast<std::size_t>(solution.perm[j])) << '\n';
            text << "total,," << solution.total_cost << '\n';
        }
        write_file_atomic(opts.out, text.str());
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bat-algorithm optimization experiments"};
    app.require_subcommand(1);

    auto* list_cmd = app.add_subcommand("list-functions", "Print the benchmark registry");

    CommonOptions bench_opts;
    std::string bench_algo = "both";
    auto* bench_cmd = app.add_subcommand("bench", "Run seeded experiments");
    bench_cmd->add_option("--algo", bench_algo, "Algorithm: ba, mba or both")
        ->check(CLI::IsMember({"ba", "mba", "both"}))
        ->capture_default_str();
    add_report_flags(*bench_cmd, bench_opts);

    CommonOptions compare_opts;
    auto* compare_cmd =
        app.add_subcommand("compare", "Seed-paired BA vs MBA comparison with rank-sum test");
    add_report_flags(*compare_cmd, compare_opts);

    CommonOptions assign_opts;
    std::string matrix_file;
    std::string study;
    bool oracle = false;
    auto* assign_cmd = app.add_subcommand("assign", "Solve a job-assignment cost matrix");
    assign_cmd->add_option("matrix", matrix_file, "Cost matrix file (.csv or .json)");
    assign_cmd->add_flag("--oracle", oracle,
                         "Also solve by brute force (n <= 10) and report agreement");
    assign_cmd->add_option("--study", study,
                           "Random-instance study over a dimension range, e.g. 4-8");
    assign_cmd->add_option("--runs", assign_opts.runs, "Runs per dimension for --study")
        ->capture_default_str();
    assign_cmd->add_option("--out", assign_opts.out, "Output file");
    assign_cmd->add_option("--format", assign_opts.format, "Output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    add_swarm_flags(*assign_cmd, assign_opts.cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (list_cmd->parsed()) return cmd_list_functions();
        if (bench_cmd->parsed()) return cmd_bench(bench_opts, bench_algo);
        if (compare_cmd->parsed()) return cmd_compare(compare_opts);
        if (assign_cmd->parsed()) return cmd_assign(matrix_file, oracle, study, assign_opts);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "runtime error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
