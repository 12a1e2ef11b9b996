#ifndef BATOPT_SWARM_HPP
#define BATOPT_SWARM_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "batopt/rng.hpp"
#include "batopt/search_space.hpp"

namespace batopt {

/// Hyperparameters shared by both echolocation engines. Defaults follow the
/// conventional settings: frequency range [0, 2], alpha tied to gamma at 0.9,
/// unit initial loudness and a 0.5 pulse-rate asymptote.
struct SwarmConfig {
    int population_size = 30;
    int max_iterations = 500;
    double f_min = 0.0;
    double f_max = 2.0;
    double alpha = 0.9;              ///< loudness decay factor, in (0, 1)
    double gamma = 0.9;              ///< pulse-rate growth constant, > 0
    double initial_loudness = 1.0;   ///< A0, > 0
    double initial_pulse_rate = 0.5; ///< r0, the pulse-rate schedule asymptote, in [0, 1]
    std::uint64_t rng_seed = 0;

    /// Throws std::invalid_argument on out-of-range parameters.
    void validate() const;
};

/// One bat: a candidate solution together with its flight and echolocation
/// state. The working pulse rate starts at the schedule value for zero
/// accepted moves (i.e. 0) and climbs toward the configured asymptote, so it
/// is non-decreasing over a run; loudness is non-increasing.
struct BatState {
    std::vector<double> position;
    std::vector<double> velocity;
    double frequency = 0.0;
    double loudness = 0.0;
    double pulse_rate = 0.0;
    double fitness = 0.0;
    int accept_count = 0; ///< number of accepted moves; drives the pulse-rate schedule
};

/// Incumbent best solution. best_loudness is maintained only by the modified
/// engine: it remembers the post-decay loudness of whichever bat last
/// accepted a move.
struct BestRecord {
    std::vector<double> best_position;
    double best_fitness = 0.0;
    double best_loudness = 0.0;
};

struct RunResult {
    BestRecord best;
    /// Best fitness after each iteration; length equals max_iterations and
    /// the sequence is non-increasing.
    std::vector<double> trace;
    /// Total objective evaluations, initialization included.
    long long evaluations = 0;
    /// Best fitness right after initialization, before any iteration. Two
    /// engines started from the same seed agree on this value.
    double initial_best_fitness = 0.0;
};

/// Objective to minimize. The Rng is the run's own generator; only noisy
/// objectives consume it.
using Objective = std::function<double(std::span<const double>, Rng&)>;

/// Invoked after every iteration with the live population and incumbent.
using IterationObserver =
    std::function<void(int iteration, std::span<const BatState>, const BestRecord&)>;

/// f = f_min + (f_max - f_min) * beta for beta in [0, 1].
double sample_frequency(double beta, const SwarmConfig& cfg);

/// v' = v_prev + (x - x_best) * f, component-wise. The difference is
/// bat-minus-best. Dimensions must agree.
std::vector<double> update_velocity(std::span<const double> v_prev, std::span<const double> x,
                                    std::span<const double> x_best, double frequency);

/// x' = clamp(x_prev + v) into the space bounds.
std::vector<double> update_position(std::span<const double> x_prev, std::span<const double> v,
                                    const SearchSpace& space);

/// Random walk around x_base: x_base + eps * avg_loudness with eps drawn
/// uniformly in [-1, 1] per coordinate.
std::vector<double> local_walk_ba(std::span<const double> x_base, double avg_loudness, Rng& rng);

/// Deterministic kernel of the walk above with the offsets supplied.
std::vector<double> local_walk_ba(std::span<const double> x_base, double avg_loudness,
                                  std::span<const double> eps);

/// Modified walk around the best position with the remembered best-solution
/// loudness widening the offsets: best_position + eps * (avg_loudness +
/// best_loudness). With best_loudness = 0 this reduces bitwise to
/// local_walk_ba around the best position.
std::vector<double> local_walk_mba(const BestRecord& best, double avg_loudness, Rng& rng);

std::vector<double> local_walk_mba(const BestRecord& best, double avg_loudness,
                                   std::span<const double> eps);

/// A' = alpha * A.
double update_loudness(double loudness, double alpha);

/// r(t) = r0 * (1 - exp(-gamma * t)) where t counts accepted moves.
double update_pulse_rate(double r0, double gamma, int t);

/// The acceptance gate: true iff u < loudness and f_candidate strictly
/// improves on f_best. The engines pass the bat's own fitness as f_best, so
/// acceptance moves a bat whenever its candidate beats its current hold.
bool accept_candidate(double u, double loudness, double f_candidate, double f_best);

/// Runs the plain bat algorithm and returns the full trace.
///
/// Loop per iteration and bat: sample a frequency, update the velocity and
/// the clamped flight candidate; when the walk trigger exceeds the bat's
/// pulse rate the candidate is replaced by a local walk around the incumbent
/// best; the candidate is evaluated once and passed through the acceptance
/// gate, which on success moves the bat, decays its loudness and advances
/// its pulse rate. The incumbent best then absorbs the candidate whenever it
/// improves on it, accepted or not.
///
/// Draw order (fixed, part of the reproducibility contract): initialization
/// consumes dim uniforms per bat for positions (velocities start at zero),
/// then each bat's initial evaluation; per iteration and bat: the frequency
/// beta, the walk trigger, dim walk offsets when the trigger fires, the
/// acceptance draw, then any draw the objective itself consumes.
///
/// Throws std::runtime_error when the objective returns a non-finite value,
/// naming the offending position.
RunResult run_ba(const Objective& objective, const SearchSpace& space, const SwarmConfig& cfg,
                 const IterationObserver& observer = {});

/// Same loop with the modified local walk and best-loudness memory: every
/// acceptance stores the accepting bat's post-decay loudness in the best
/// record, from where it widens subsequent walks. best_loudness starts at
/// the configured initial loudness.
RunResult run_mba(const Objective& objective, const SearchSpace& space, const SwarmConfig& cfg,
                  const IterationObserver& observer = {});

} // namespace batopt

#endif
