#ifndef BATOPT_STATS_HPP
#define BATOPT_STATS_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace batopt {

/// Descriptive summary of one sample. std_dev uses the n-1 denominator.
struct SampleSummary {
    std::size_t n = 0;
    double mean = 0.0;
    double std_dev = 0.0;
    double min = 0.0;
    double max = 0.0;
};

/// Throws std::invalid_argument for samples smaller than 2.
SampleSummary summarize(std::span<const double> sample);

enum class RankSumMethod { normal_approx, exact };

/// Two-sided Wilcoxon rank-sum result. u_statistic is the Mann-Whitney U of
/// the first sample; z_score is the continuity-corrected normal deviate.
struct RankSumReport {
    double u_statistic = 0.0;
    double z_score = 0.0;
    double p_value = 1.0;
    RankSumMethod method = RankSumMethod::normal_approx;
    /// Set when the pooled data is constant, in which case p_value is 1.
    bool degenerate = false;
};

/// Two-sided Wilcoxon rank-sum test. Pooled data is ranked with average
/// ranks for ties. For min(n, m) <= 8 and tie-free data the p-value comes
/// from exact enumeration of the null rank-sum distribution; otherwise from
/// the normal approximation with tie-corrected variance and a 0.5 continuity
/// correction. Both samples must be non-empty.
RankSumReport rank_sum_test(std::span<const double> a, std::span<const double> b);

/// Exact two-sided p-value by enumerating the null distribution of the
/// rank sum (doubling convention, capped at 1). Requires tie-free pooled
/// data; throws std::invalid_argument on ties.
double rank_sum_exact_p(std::span<const double> a, std::span<const double> b);

/// Two-sided p-value from the normal approximation alone.
double rank_sum_normal_p(std::span<const double> a, std::span<const double> b);

struct SamplePair {
    std::string label;
    std::vector<double> a;
    std::vector<double> b;
};

struct SignificanceRow {
    std::string label;
    RankSumReport report;
    bool significant = false; ///< p < 0.05
};

/// One rank-sum row per input pair, flagging p < 0.05.
std::vector<SignificanceRow> significance_table(std::span<const SamplePair> pairs);

} // namespace batopt

#endif
