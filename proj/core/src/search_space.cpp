#include "batopt/search_space.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace batopt {

SearchSpace SearchSpace::box(std::size_t dim, double lo, double hi) {
    SearchSpace s;
    s.lower.assign(dim, lo);
    s.upper.assign(dim, hi);
    return s;
}

void SearchSpace::validate() const {
    if (lower.empty()) throw std::invalid_argument("search space must have dimension >= 1");
    if (lower.size() != upper.size())
        throw std::invalid_argument("search space bound vectors differ in length");
    for (std::size_t d = 0; d < lower.size(); ++d) {
        if (!(lower[d] < upper[d]))
            throw std::invalid_argument("search space requires lower < upper at coordinate " +
                                        std::to_string(d));
    }
}

void SearchSpace::clamp(std::span<double> x) const {
    for (std::size_t d = 0; d < x.size(); ++d)
        x[d] = std::clamp(x[d], lower[d], upper[d]);
}

bool SearchSpace::contains(std::span<const double> x) const {
    if (x.size() != dim()) return false;
    for (std::size_t d = 0; d < x.size(); ++d)
        if (x[d] < lower[d] || x[d] > upper[d]) return false;
    return true;
}

} // namespace batopt
