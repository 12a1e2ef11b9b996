#include "batopt/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace batopt {

namespace {

struct PooledRanks {
    std::vector<double> ranks_a; ///< average ranks of sample a in the pooled order
    double tie_term = 0.0;       ///< sum of t^3 - t over tie groups
    bool has_ties = false;
    bool constant = false;       ///< every pooled value identical
};

PooledRanks pooled_ranks(std::span<const double> a, std::span<const double> b) {
    const std::size_t n = a.size(), m = b.size(), total = n + m;
    std::vector<std::pair<double, bool>> pool;
    pool.reserve(total);
    for (double v : a) pool.emplace_back(v, true);
    for (double v : b) pool.emplace_back(v, false);
    std::stable_sort(pool.begin(), pool.end(),
                     [](const auto& l, const auto& r) { return l.first < r.first; });

    PooledRanks out;
    out.ranks_a.reserve(n);
    std::size_t i = 0;
    std::size_t groups = 0;
    while (i < total) {
        std::size_t j = i;
        while (j < total && pool[j].first == pool[i].first) ++j;
        const double t = static_cast<double>(j - i);
        // ranks are 1-based; members of a tie group share the average rank
        const double avg_rank = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
        if (j - i > 1) {
            out.has_ties = true;
            out.tie_term += t * t * t - t;
        }
        for (std::size_t k = i; k < j; ++k)
            if (pool[k].second) out.ranks_a.push_back(avg_rank);
        ++groups;
        i = j;
    }
    out.constant = groups == 1;
    return out;
}

double rank_sum_of_a(const PooledRanks& ranks) {
    return std::accumulate(ranks.ranks_a.begin(), ranks.ranks_a.end(), 0.0);
}

/// Two-sided tail from the standard normal: P(|Z| >= z) for z >= 0.
double two_sided_normal_tail(double z) { return std::erfc(z / std::sqrt(2.0)); }

struct NormalApprox {
    double z_signed = 0.0;
    double p = 1.0;
    bool degenerate = false;
};

NormalApprox normal_approx(std::span<const double> a, std::span<const double> b,
                           const PooledRanks& ranks) {
    const double n = static_cast<double>(a.size());
    const double m = static_cast<double>(b.size());
    const double total = n + m;
    const double w = rank_sum_of_a(ranks);
    const double mean = n * (total + 1.0) / 2.0;
    const double variance =
        n * m / 12.0 * ((total + 1.0) - ranks.tie_term / (total * (total - 1.0)));

    NormalApprox out;
    if (variance <= 0.0) {
        out.degenerate = true;
        return out;
    }
    const double sigma = std::sqrt(variance);
    // Continuity correction of 0.5 toward the mean, never past it.
    const double d = std::max(std::abs(w - mean) - 0.5, 0.0);
    out.z_signed = (w == mean) ? 0.0 : std::copysign(d / sigma, w - mean);
    out.p = std::min(two_sided_normal_tail(d / sigma), 1.0);
    return out;
}

/// Largest pooled size the exact enumeration accepts before the test falls
/// back to the normal approximation.
constexpr std::size_t exact_total_limit = 200;

/// Null distribution counts of the rank sum when drawing `n` ranks out of
/// {1..total} without replacement: the returned row holds, per sum s, the
/// number of n-subsets with rank sum s. Rows are capped at the largest sum
/// k ranks can reach.
std::vector<double> rank_sum_counts(std::size_t n, std::size_t total) {
    auto cap = [&](std::size_t k) { return k * total - k * (k - 1) / 2; };
    std::vector<std::vector<double>> dp(n + 1);
    for (std::size_t k = 0; k <= n; ++k) dp[k].assign(cap(k) + 1, 0.0);
    dp[0][0] = 1.0;
    for (std::size_t rank = 1; rank <= total; ++rank) {
        // k descending so dp[k-1] is still the pre-rank row
        for (std::size_t k = std::min(rank, n); k >= 1; --k) {
            auto& row = dp[k];
            const auto& prev = dp[k - 1];
            const std::size_t hi = std::min(row.size() - 1, prev.size() - 1 + rank);
            for (std::size_t s = hi; s >= rank; --s) {
                const double add = prev[s - rank];
                if (add != 0.0) row[s] += add;
            }
        }
    }
    return dp[n];
}

double exact_p_from_ranks(const PooledRanks& ranks, std::size_t n, std::size_t total) {
    const double w = rank_sum_of_a(ranks);
    const auto w_int = static_cast<std::size_t>(std::llround(w));
    const std::vector<double> counts = rank_sum_counts(n, total);
    double below_or_eq = 0.0, above_or_eq = 0.0, all = 0.0;
    for (std::size_t s = 0; s < counts.size(); ++s) {
        all += counts[s];
        if (s <= w_int) below_or_eq += counts[s];
        if (s >= w_int) above_or_eq += counts[s];
    }
    const double tail = std::min(below_or_eq, above_or_eq) / all;
    return std::min(1.0, 2.0 * tail);
}

} // namespace

SampleSummary summarize(std::span<const double> sample) {
    if (sample.size() < 2)
        throw std::invalid_argument("summarize needs at least 2 values, got " +
                                    std::to_string(sample.size()));
    SampleSummary s;
    s.n = sample.size();
    s.mean = std::accumulate(sample.begin(), sample.end(), 0.0) /
             static_cast<double>(sample.size());
    double ss = 0.0;
    s.min = std::numeric_limits<double>::infinity();
    s.max = -std::numeric_limits<double>::infinity();
    for (double v : sample) {
        const double d = v - s.mean;
        ss += d * d;
        s.min = std::min(s.min, v);
        s.max = std::max(s.max, v);
    }
    s.std_dev = std::sqrt(ss / static_cast<double>(sample.size() - 1));
    return s;
}

RankSumReport rank_sum_test(std::span<const double> a, std::span<const double> b) {
    if (a.empty() || b.empty())
        throw std::invalid_argument("rank_sum_test needs two non-empty samples");

    const PooledRanks ranks = pooled_ranks(a, b);
    const double w = rank_sum_of_a(ranks);
    const double n = static_cast<double>(a.size());

    RankSumReport report;
    report.u_statistic = w - n * (n + 1.0) / 2.0;

    const NormalApprox approx = normal_approx(a, b, ranks);
    report.z_score = approx.z_signed;

    if (ranks.constant) {
        report.degenerate = true;
        report.p_value = 1.0;
        report.method = RankSumMethod::normal_approx;
        return report;
    }

    const std::size_t min_size = std::min(a.size(), b.size());
    if (min_size <= 8 && !ranks.has_ties && a.size() + b.size() <= exact_total_limit) {
        report.method = RankSumMethod::exact;
        report.p_value = exact_p_from_ranks(ranks, a.size(), a.size() + b.size());
    } else {
        report.method = RankSumMethod::normal_approx;
        report.p_value = approx.p;
        report.degenerate = approx.degenerate;
    }
    return report;
}

double rank_sum_exact_p(std::span<const double> a, std::span<const double> b) {
    if (a.empty() || b.empty())
        throw std::invalid_argument("rank_sum_exact_p needs two non-empty samples");
    const PooledRanks ranks = pooled_ranks(a, b);
    if (ranks.has_ties)
        throw std::invalid_argument("rank_sum_exact_p requires tie-free pooled data");
    if (a.size() + b.size() > exact_total_limit)
        throw std::invalid_argument("rank_sum_exact_p limited to pooled sizes <= " +
                                    std::to_string(exact_total_limit));
    return exact_p_from_ranks(ranks, a.size(), a.size() + b.size());
}

double rank_sum_normal_p(std::span<const double> a, std::span<const double> b) {
    if (a.empty() || b.empty())
        throw std::invalid_argument("rank_sum_normal_p needs two non-empty samples");
    const PooledRanks ranks = pooled_ranks(a, b);
    const NormalApprox approx = normal_approx(a, b, ranks);
    return approx.degenerate ? 1.0 : approx.p;
}

std::vector<SignificanceRow> significance_table(std::span<const SamplePair> pairs) {
    std::vector<SignificanceRow> rows;
    rows.reserve(pairs.size());
    for (const SamplePair& pair : pairs) {
        SignificanceRow row;
        row.label = pair.label;
        row.report = rank_sum_test(pair.a, pair.b);
        row.significant = row.report.p_value < 0.05;
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace batopt
