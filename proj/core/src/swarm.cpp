#include "batopt/swarm.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace batopt {

namespace {

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
    if (a != b) {
        std::ostringstream msg;
        msg << what << ": dimension mismatch (" << a << " vs " << b << ")";
        throw std::invalid_argument(msg.str());
    }
}

std::string format_position(std::span<const double> x) {
    std::ostringstream out;
    out << '[';
    for (std::size_t d = 0; d < x.size(); ++d) {
        if (d) out << ", ";
        out << x[d];
    }
    out << ']';
    return out.str();
}

} // namespace

void SwarmConfig::validate() const {
    if (population_size <= 0) throw std::invalid_argument("population_size must be positive");
    if (max_iterations <= 0) throw std::invalid_argument("max_iterations must be positive");
    if (!(f_min <= f_max)) throw std::invalid_argument("f_min must not exceed f_max");
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must lie in (0, 1)");
    if (!(gamma > 0.0)) throw std::invalid_argument("gamma must be positive");
    if (!(initial_loudness > 0.0)) throw std::invalid_argument("initial_loudness must be positive");
    if (!(initial_pulse_rate >= 0.0 && initial_pulse_rate <= 1.0))
        throw std::invalid_argument("initial_pulse_rate must lie in [0, 1]");
}

double sample_frequency(double beta, const SwarmConfig& cfg) {
    return cfg.f_min + (cfg.f_max - cfg.f_min) * beta;
}

std::vector<double> update_velocity(std::span<const double> v_prev, std::span<const double> x,
                                    std::span<const double> x_best, double frequency) {
    require_same_dim(v_prev.size(), x.size(), "update_velocity");
    require_same_dim(x.size(), x_best.size(), "update_velocity");
    std::vector<double> v(v_prev.size());
    for (std::size_t d = 0; d < v.size(); ++d)
        v[d] = v_prev[d] + (x[d] - x_best[d]) * frequency;
    return v;
}

std::vector<double> update_position(std::span<const double> x_prev, std::span<const double> v,
                                    const SearchSpace& space) {
    require_same_dim(x_prev.size(), v.size(), "update_position");
    require_same_dim(x_prev.size(), space.dim(), "update_position");
    std::vector<double> x(x_prev.size());
    for (std::size_t d = 0; d < x.size(); ++d)
        x[d] = x_prev[d] + v[d];
    space.clamp(x);
    return x;
}

std::vector<double> local_walk_ba(std::span<const double> x_base, double avg_loudness,
                                  std::span<const double> eps) {
    require_same_dim(x_base.size(), eps.size(), "local_walk_ba");
    std::vector<double> x(x_base.size());
    for (std::size_t d = 0; d < x.size(); ++d)
        x[d] = x_base[d] + eps[d] * avg_loudness;
    return x;
}

std::vector<double> local_walk_ba(std::span<const double> x_base, double avg_loudness, Rng& rng) {
    std::vector<double> eps(x_base.size());
    for (auto& e : eps) e = rng.symmetric();
    return local_walk_ba(x_base, avg_loudness, eps);
}

std::vector<double> local_walk_mba(const BestRecord& best, double avg_loudness,
                                   std::span<const double> eps) {
    require_same_dim(best.best_position.size(), eps.size(), "local_walk_mba");
    const double amplitude = avg_loudness + best.best_loudness;
    std::vector<double> x(best.best_position.size());
    for (std::size_t d = 0; d < x.size(); ++d)
        x[d] = best.best_position[d] + eps[d] * amplitude;
    return x;
}

std::vector<double> local_walk_mba(const BestRecord& best, double avg_loudness, Rng& rng) {
    std::vector<double> eps(best.best_position.size());
    for (auto& e : eps) e = rng.symmetric();
    return local_walk_mba(best, avg_loudness, eps);
}

double update_loudness(double loudness, double alpha) { return alpha * loudness; }

double update_pulse_rate(double r0, double gamma, int t) {
    return r0 * (1.0 - std::exp(-gamma * static_cast<double>(t)));
}

bool accept_candidate(double u, double loudness, double f_candidate, double f_best) {
    return u < loudness && f_candidate < f_best;
}

namespace {

enum class Variant { plain, modified };

RunResult run_engine(const Objective& objective, const SearchSpace& space, const SwarmConfig& cfg,
                     Variant variant, const IterationObserver& observer) {
    cfg.validate();
    space.validate();
    if (!objective) throw std::invalid_argument("objective is empty");

    const std::size_t dim = space.dim();
    Rng rng(cfg.rng_seed);
    long long evaluations = 0;

    auto eval = [&](const std::vector<double>& x) {
        const double f = objective(x, rng);
        ++evaluations;
        if (!std::isfinite(f))
            throw std::runtime_error("objective returned a non-finite value at " +
                                     format_position(x));
        return f;
    };

    std::vector<BatState> bats(static_cast<std::size_t>(cfg.population_size));
    for (auto& bat : bats) {
        bat.position.resize(dim);
        for (std::size_t d = 0; d < dim; ++d)
            bat.position[d] = rng.uniform(space.lower[d], space.upper[d]);
        bat.velocity.assign(dim, 0.0);
        bat.frequency = cfg.f_min;
        bat.loudness = cfg.initial_loudness;
        bat.pulse_rate = update_pulse_rate(cfg.initial_pulse_rate, cfg.gamma, 0);
        bat.accept_count = 0;
    }
    for (auto& bat : bats) bat.fitness = eval(bat.position);

    BestRecord best;
    const auto* first_best =
        &*std::min_element(bats.begin(), bats.end(),
                           [](const BatState& l, const BatState& r) { return l.fitness < r.fitness; });
    best.best_position = first_best->position;
    best.best_fitness = first_best->fitness;
    best.best_loudness = cfg.initial_loudness;

    RunResult result;
    result.initial_best_fitness = best.best_fitness;
    result.trace.reserve(static_cast<std::size_t>(cfg.max_iterations));

    for (int iteration = 1; iteration <= cfg.max_iterations; ++iteration) {
        // Average loudness is taken at the start of the iteration.
        const double avg_loudness =
            std::accumulate(bats.begin(), bats.end(), 0.0,
                            [](double acc, const BatState& b) { return acc + b.loudness; }) /
            static_cast<double>(bats.size());

        for (auto& bat : bats) {
            const double beta = rng.next_unit();
            bat.frequency = sample_frequency(beta, cfg);
            bat.velocity = update_velocity(bat.velocity, bat.position, best.best_position,
                                           bat.frequency);
            std::vector<double> candidate = update_position(bat.position, bat.velocity, space);

            const double walk_trigger = rng.next_unit();
            if (walk_trigger > bat.pulse_rate) {
                candidate = variant == Variant::plain
                                ? local_walk_ba(best.best_position, avg_loudness, rng)
                                : local_walk_mba(best, avg_loudness, rng);
                space.clamp(candidate);
            }

            const double u_accept = rng.next_unit();
            const double f_candidate = eval(candidate);
            if (accept_candidate(u_accept, bat.loudness, f_candidate, bat.fitness)) {
                bat.position = candidate;
                bat.fitness = f_candidate;
                bat.loudness = update_loudness(bat.loudness, cfg.alpha);
                bat.accept_count += 1;
                bat.pulse_rate = update_pulse_rate(cfg.initial_pulse_rate, cfg.gamma,
                                                   bat.accept_count);
                if (variant == Variant::modified) best.best_loudness = bat.loudness;
            }
            // the incumbent absorbs any improving candidate, accepted or not
            if (f_candidate < best.best_fitness) {
                best.best_position = candidate;
                best.best_fitness = f_candidate;
            }
        }

        result.trace.push_back(best.best_fitness);
        if (observer) observer(iteration, bats, best);
    }

    result.best = std::move(best);
    result.evaluations = evaluations;
    return result;
}

} // namespace

RunResult run_ba(const Objective& objective, const SearchSpace& space, const SwarmConfig& cfg,
                 const IterationObserver& observer) {
    return run_engine(objective, space, cfg, Variant::plain, observer);
}

RunResult run_mba(const Objective& objective, const SearchSpace& space, const SwarmConfig& cfg,
                  const IterationObserver& observer) {
    return run_engine(objective, space, cfg, Variant::modified, observer);
}

} // namespace batopt
