#ifndef BATOPT_ASSIGNMENT_HPP
#define BATOPT_ASSIGNMENT_HPP

#include <cstddef>
#include <filesystem>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "batopt/rng.hpp"
#include "batopt/swarm.hpp"

namespace batopt {

/// Largest instance brute_force_optimum will enumerate (10! permutations).
inline constexpr std::size_t brute_force_limit = 10;

/// Square job-by-worker cost matrix; cost(j, w) is the seconds worker w
/// needs for job j. All entries must be finite and non-negative.
struct CostMatrix {
    std::size_t n = 0;
    std::vector<double> cost; ///< row-major, jobs as rows

    double at(std::size_t job, std::size_t worker) const { return cost[job * n + worker]; }

    /// Throws std::invalid_argument on non-square shape or bad entries,
    /// naming the offending row and column.
    void validate() const;

    /// n lines of n comma-separated non-negative decimals; one optional
    /// header line is skipped.
    static CostMatrix from_csv(std::string_view text);

    /// {"costs": [[...], ...]}.
    static CostMatrix from_json(std::string_view text);

    /// Reads a file, dispatching on the .json extension (CSV otherwise).
    static CostMatrix load(const std::filesystem::path& path);
};

/// A permutation solution: perm[j] is the worker assigned to job j.
struct Assignment {
    std::vector<int> perm;
    double total_cost = 0.0;
};

/// Rank decoding of a continuous position into a permutation: perm[j] is the
/// ascending rank of position[j], ties broken by lower index. Always yields
/// a valid permutation.
std::vector<int> decode_random_keys(std::span<const double> position);

/// Sum of cost[j][perm[j]]. Throws std::invalid_argument unless perm is a
/// permutation of 0..n-1.
double assignment_cost(const CostMatrix& m, std::span<const int> perm);

/// Exhaustive minimum over all n! permutations; ties resolve to the
/// lexicographically smallest permutation. Refuses n > brute_force_limit.
Assignment brute_force_optimum(const CostMatrix& m);

/// Solves the instance with the modified bat engine over [0, 1]^n random
/// keys. The returned total cost is recomputed from the decoded permutation.
std::pair<Assignment, RunResult> solve_assignment_mba(const CostMatrix& m,
                                                      const SwarmConfig& cfg);

/// Random instance with entries uniform in [60, 600] seconds.
CostMatrix random_cost_matrix(std::size_t n, Rng& rng);

} // namespace batopt

#endif
