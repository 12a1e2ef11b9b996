#ifndef BATOPT_SEARCH_SPACE_HPP
#define BATOPT_SEARCH_SPACE_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace batopt {

/// Axis-aligned box the optimizers search in.
struct SearchSpace {
    std::vector<double> lower;
    std::vector<double> upper;

    std::size_t dim() const { return lower.size(); }

    /// Same [lo, hi] interval on every coordinate.
    static SearchSpace box(std::size_t dim, double lo, double hi);

    /// Throws std::invalid_argument unless lower[d] < upper[d] for every d.
    void validate() const;

    /// Clamps each coordinate into [lower[d], upper[d]] in place.
    void clamp(std::span<double> x) const;

    bool contains(std::span<const double> x) const;
};

} // namespace batopt

#endif
