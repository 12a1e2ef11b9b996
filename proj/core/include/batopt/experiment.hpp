#ifndef BATOPT_EXPERIMENT_HPP
#define BATOPT_EXPERIMENT_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "batopt/functions.hpp"
#include "batopt/stats.hpp"
#include "batopt/swarm.hpp"

namespace batopt {

enum class AlgorithmChoice { ba, mba, both };

enum class ReportFormat { csv, json };

/// One function to optimize; dim 0 means the function's default dimension.
struct FunctionTask {
    FunctionId id;
    int dim = 0;
};

/// A batch of seeded runs. Run k of every (function, algorithm) pair uses
/// seed cfg.rng_seed + k, so the two algorithms are compared pairwise on
/// identical seeds.
struct ExperimentPlan {
    AlgorithmChoice algorithm = AlgorithmChoice::both;
    std::vector<FunctionTask> tasks;
    int runs = 30;
    SwarmConfig cfg;

    /// Throws std::invalid_argument on an empty task list, non-positive run
    /// count, a dimension override on a fixed-dimension function, or an
    /// invalid SwarmConfig.
    void validate() const;
};

/// Tasks and population of the large-dimension preset: population 40 with
/// F5 at dim 16, F1 at dim 256, F3 at dim 128 and F10 at dim 128.
void apply_yang_preset(ExperimentPlan& plan);

struct RunRecord {
    int run = 0;
    std::uint64_t seed = 0;
    double best_fitness = 0.0;
    long long evaluations = 0;
    double initial_best = 0.0;
};

/// All runs of one (function, algorithm) pair. summary_valid is false when
/// fewer than two runs were requested.
struct BenchEntry {
    FunctionId id;
    int dim = 0;
    std::string algorithm;
    std::vector<RunRecord> runs;
    SampleSummary summary;
    bool summary_valid = false;
};

struct BenchReport {
    ExperimentPlan plan;
    std::vector<BenchEntry> entries;
};

/// Per-function head-to-head row. Winners follow the min-average convention:
/// '+' when the modified engine's value is strictly smaller, '-' when the
/// plain engine's is, '=' on ties.
struct CompareRow {
    FunctionId id;
    int dim = 0;
    SampleSummary ba;
    SampleSummary mba;
    char min_avg_winner = '=';
    char min_std_winner = '=';
    RankSumReport rank_sum;
    bool significant = false;
    std::vector<double> ba_finals;
    std::vector<double> mba_finals;
    std::vector<double> ba_initial_bests;
    std::vector<double> mba_initial_bests;
};

struct ComparisonReport {
    ExperimentPlan plan;
    std::vector<CompareRow> rows;
};

/// Executes the plan's runs for the selected algorithm(s).
BenchReport run_bench(const ExperimentPlan& plan);

/// Executes seed-paired runs of both algorithms and assembles summaries,
/// winners and rank-sum p-values per function. Requires runs >= 2.
ComparisonReport run_compare(const ExperimentPlan& plan);

/// CSV renderings with a fixed, documented column set. Floating-point cells
/// use scientific notation with three decimals (e.g. 3.406E+00).
std::string to_csv(const BenchReport& report);
std::string to_csv(const ComparisonReport& report);

/// JSON renderings at full precision.
std::string to_json(const BenchReport& report);
std::string to_json(const ComparisonReport& report);

/// Scientific-notation cell formatting used by the CSV writers.
std::string format_sci(double value);

/// Writes atomically: the text lands in a temporary file that is renamed
/// over the target.
void write_file_atomic(const std::filesystem::path& path, const std::string& text);

} // namespace batopt

#endif
