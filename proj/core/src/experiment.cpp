#include "batopt/experiment.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "json.hpp"

namespace batopt {

namespace {

using nlohmann::json;

Objective make_objective(FunctionId id) {
    return [id](std::span<const double> x, Rng& rng) { return evaluate(id, x, rng); };
}

RunRecord make_record(int run, std::uint64_t seed, const RunResult& result) {
    RunRecord record;
    record.run = run;
    record.seed = seed;
    record.best_fitness = result.best.best_fitness;
    record.evaluations = result.evaluations;
    record.initial_best = result.initial_best_fitness;
    return record;
}

std::vector<RunRecord> execute_runs(FunctionId id, int dim, bool modified,
                                    const ExperimentPlan& plan) {
    const BenchmarkSpec& spec = spec_of(id);
    const SearchSpace space = spec.space(dim);
    const Objective objective = make_objective(id);

    std::vector<RunRecord> records;
    records.reserve(static_cast<std::size_t>(plan.runs));
    for (int run = 0; run < plan.runs; ++run) {
        SwarmConfig cfg = plan.cfg;
        cfg.rng_seed = plan.cfg.rng_seed + static_cast<std::uint64_t>(run);
        const RunResult result = modified ? run_mba(objective, space, cfg)
                                          : run_ba(objective, space, cfg);
        records.push_back(make_record(run, cfg.rng_seed, result));
    }
    return records;
}

std::vector<double> finals_of(const std::vector<RunRecord>& records) {
    std::vector<double> finals;
    finals.reserve(records.size());
    for (const RunRecord& r : records) finals.push_back(r.best_fitness);
    return finals;
}

std::vector<double> initials_of(const std::vector<RunRecord>& records) {
    std::vector<double> initials;
    initials.reserve(records.size());
    for (const RunRecord& r : records) initials.push_back(r.initial_best);
    return initials;
}

char winner(double ba_value, double mba_value) {
    if (mba_value < ba_value) return '+';
    if (ba_value < mba_value) return '-';
    return '=';
}

json summary_json(const SampleSummary& s) {
    return json{{"n", s.n}, {"mean", s.mean}, {"std_dev", s.std_dev},
                {"min", s.min}, {"max", s.max}};
}

json rank_sum_json(const RankSumReport& r) {
    return json{{"u_statistic", r.u_statistic},
                {"z_score", r.z_score},
                {"p_value", r.p_value},
                {"method", r.method == RankSumMethod::exact ? "exact" : "normal_approx"},
                {"degenerate", r.degenerate}};
}

json runs_json(const std::vector<RunRecord>& records) {
    json runs = json::array();
    for (const RunRecord& r : records) {
        runs.push_back(json{{"run", r.run},
                            {"seed", r.seed},
                            {"best_fitness", r.best_fitness},
                            {"evaluations", r.evaluations},
                            {"initial_best", r.initial_best}});
    }
    return runs;
}

json plan_json(const ExperimentPlan& plan) {
    json tasks = json::array();
    for (const FunctionTask& task : plan.tasks) {
        tasks.push_back(json{{"function", to_string(task.id)},
                             {"dim", spec_of(task.id).dimension(task.dim)}});
    }
    const char* algo = plan.algorithm == AlgorithmChoice::ba    ? "ba"
                       : plan.algorithm == AlgorithmChoice::mba ? "mba"
                                                                : "both";
    return json{{"algorithm", algo},
                {"tasks", tasks},
                {"runs", plan.runs},
                {"population", plan.cfg.population_size},
                {"iterations", plan.cfg.max_iterations},
                {"seed", plan.cfg.rng_seed},
                {"f_min", plan.cfg.f_min},
                {"f_max", plan.cfg.f_max},
                {"alpha", plan.cfg.alpha},
                {"gamma", plan.cfg.gamma},
                {"initial_loudness", plan.cfg.initial_loudness},
                {"initial_pulse_rate", plan.cfg.initial_pulse_rate}};
}

} // namespace

void ExperimentPlan::validate() const {
    cfg.validate();
    if (tasks.empty()) throw std::invalid_argument("no functions selected");
    if (runs < 1) throw std::invalid_argument("runs must be positive");
    for (const FunctionTask& task : tasks) {
        const BenchmarkSpec& spec = spec_of(task.id);
        if (task.dim != 0 && spec.fixed_dim > 0 && task.dim != spec.fixed_dim)
            throw std::invalid_argument(to_string(task.id) + " has fixed dimension " +
                                        std::to_string(spec.fixed_dim));
        if (task.dim < 0) throw std::invalid_argument("dimension must be positive");
    }
}

void apply_yang_preset(ExperimentPlan& plan) {
    plan.cfg.population_size = 40;
    plan.tasks = {{FunctionId::F5, 16},
                  {FunctionId::F1, 256},
                  {FunctionId::F3, 128},
                  {FunctionId::F10, 128}};
}

BenchReport run_bench(const ExperimentPlan& plan) {
    plan.validate();
    BenchReport report;
    report.plan = plan;

    std::vector<std::pair<std::string, bool>> algorithms;
    if (plan.algorithm == AlgorithmChoice::ba || plan.algorithm == AlgorithmChoice::both)
        algorithms.emplace_back("ba", false);
    if (plan.algorithm == AlgorithmChoice::mba || plan.algorithm == AlgorithmChoice::both)
        algorithms.emplace_back("mba", true);

    for (const FunctionTask& task : plan.tasks) {
        for (const auto& [name, modified] : algorithms) {
            BenchEntry entry;
            entry.id = task.id;
            entry.dim = spec_of(task.id).dimension(task.dim);
            entry.algorithm = name;
            entry.runs = execute_runs(task.id, task.dim, modified, plan);
            if (entry.runs.size() >= 2) {
                entry.summary = summarize(finals_of(entry.runs));
                entry.summary_valid = true;
            }
            report.entries.push_back(std::move(entry));
        }
    }
    return report;
}

ComparisonReport run_compare(const ExperimentPlan& plan) {
    plan.validate();
    if (plan.algorithm != AlgorithmChoice::both)
        throw std::invalid_argument("compare needs both algorithms");
    if (plan.runs < 2) throw std::invalid_argument("compare needs at least 2 runs");

    ComparisonReport report;
    report.plan = plan;
    for (const FunctionTask& task : plan.tasks) {
        CompareRow row;
        row.id = task.id;
        row.dim = spec_of(task.id).dimension(task.dim);

        const std::vector<RunRecord> ba_runs = execute_runs(task.id, task.dim, false, plan);
        const std::vector<RunRecord> mba_runs = execute_runs(task.id, task.dim, true, plan);
        row.ba_finals = finals_of(ba_runs);
        row.mba_finals = finals_of(mba_runs);
        row.ba_initial_bests = initials_of(ba_runs);
        row.mba_initial_bests = initials_of(mba_runs);
        row.ba = summarize(row.ba_finals);
        row.mba = summarize(row.mba_finals);
        row.min_avg_winner = winner(row.ba.mean, row.mba.mean);
        row.min_std_winner = winner(row.ba.std_dev, row.mba.std_dev);
        row.rank_sum = rank_sum_test(row.ba_finals, row.mba_finals);
        row.significant = row.rank_sum.p_value < 0.05;
        report.rows.push_back(std::move(row));
    }
    return report;
}

std::string format_sci(double value) {
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.3E", value);
    return buffer;
}

std::string to_csv(const BenchReport& report) {
    std::ostringstream out;
    out << "record,function,dim,algorithm,run,seed,best_fitness,evaluations,"
           "n,mean,std_dev,min,max\n";
    for (const BenchEntry& entry : report.entries) {
        for (const RunRecord& r : entry.runs) {
            out << "run," << to_string(entry.id) << ',' << entry.dim << ',' << entry.algorithm
                << ',' << r.run << ',' << r.seed << ',' << format_sci(r.best_fitness) << ','
                << r.evaluations << ",,,,,\n";
        }
        if (entry.summary_valid) {
            const SampleSummary& s = entry.summary;
            out << "summary," << to_string(entry.id) << ',' << entry.dim << ','
                << entry.algorithm << ",,,,," << s.n << ',' << format_sci(s.mean) << ','
                << format_sci(s.std_dev) << ',' << format_sci(s.min) << ','
                << format_sci(s.max) << '\n';
        }
    }
    return out.str();
}

std::string to_csv(const ComparisonReport& report) {
    std::ostringstream out;
    out << "function,dim,runs,ba_mean,ba_std,ba_min,ba_max,mba_mean,mba_std,mba_min,mba_max,"
           "min_avg,min_std,u_statistic,z_score,p_value,significant\n";
    for (const CompareRow& row : report.rows) {
        out << to_string(row.id) << ',' << row.dim << ',' << row.ba.n << ','
            << format_sci(row.ba.mean) << ',' << format_sci(row.ba.std_dev) << ','
            << format_sci(row.ba.min) << ',' << format_sci(row.ba.max) << ','
            << format_sci(row.mba.mean) << ',' << format_sci(row.mba.std_dev) << ','
            << format_sci(row.mba.min) << ',' << format_sci(row.mba.max) << ','
            << row.min_avg_winner << ',' << row.min_std_winner << ','
            << format_sci(row.rank_sum.u_statistic) << ',' << format_sci(row.rank_sum.z_score)
            << ',' << format_sci(row.rank_sum.p_value) << ','
            << (row.significant ? "true" : "false") << '\n';
    }
    return out.str();
}

std::string to_json(const BenchReport& report) {
    json doc;
    doc["plan"] = plan_json(report.plan);
    json entries = json::array();
    for (const BenchEntry& entry : report.entries) {
        json e{{"function", to_string(entry.id)},
               {"dim", entry.dim},
               {"algorithm", entry.algorithm},
               {"runs", runs_json(entry.runs)}};
        if (entry.summary_valid) e["summary"] = summary_json(entry.summary);
        entries.push_back(std::move(e));
    }
    doc["entries"] = std::move(entries);
    return doc.dump(2) + "\n";
}

std::string to_json(const ComparisonReport& report) {
    json doc;
    doc["plan"] = plan_json(report.plan);
    json rows = json::array();
    for (const CompareRow& row : report.rows) {
        rows.push_back(json{{"function", to_string(row.id)},
                            {"dim", row.dim},
                            {"ba", summary_json(row.ba)},
                            {"mba", summary_json(row.mba)},
                            {"ba_finals", row.ba_finals},
                            {"mba_finals", row.mba_finals},
                            {"min_avg", std::string(1, row.min_avg_winner)},
                            {"min_std", std::string(1, row.min_std_winner)},
                            {"rank_sum", rank_sum_json(row.rank_sum)},
                            {"significant", row.significant}});
    }
    doc["rows"] = std::move(rows);
    return doc.dump(2) + "\n";
}

void write_file_atomic(const std::filesystem::path& path, const std::string& text) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::invalid_argument("cannot write output file: " + path.string());
        out << text;
        out.flush();
        if (!out) throw std::runtime_error("failed writing output file: " + path.string());
    }
    std::filesystem::rename(tmp, path);
}

} // namespace batopt
