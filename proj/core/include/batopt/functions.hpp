#ifndef BATOPT_FUNCTIONS_HPP
#define BATOPT_FUNCTIONS_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "batopt/rng.hpp"
#include "batopt/search_space.hpp"

namespace batopt {

/// The 23 classic continuous test functions: F1-F7 unimodal, F8-F13
/// multimodal, F14-F23 fixed-dimension multimodal.
enum class FunctionId : int {
    F1 = 1, F2, F3, F4, F5, F6, F7, F8, F9, F10, F11, F12,
    F13, F14, F15, F16, F17, F18, F19, F20, F21, F22, F23,
};

/// Dimension used for the scalable functions F1-F13 when none is requested.
inline constexpr int default_dimension = 30;

struct BenchmarkSpec {
    FunctionId id;
    std::string_view name;
    /// 0 means the caller picks the dimension (F1-F13).
    int fixed_dim;
    /// One entry means the same bound on every coordinate; otherwise
    /// per-coordinate bounds of length fixed_dim.
    std::vector<double> lower;
    std::vector<double> upper;
    /// True for F7, whose value carries a uniform [0, 1) noise term.
    bool noisy;

    /// Search box for this function. dim picks the dimension for scalable
    /// functions (0 selects default_dimension); for fixed-dimension
    /// functions dim must be 0 or equal to fixed_dim.
    SearchSpace space(int dim = 0) const;

    /// The dimension space(dim) would use.
    int dimension(int dim = 0) const;
};

/// Registry entry for one id. Covers all 23 ids exactly once.
const BenchmarkSpec& spec_of(FunctionId id);

/// All 23 specs in id order.
std::span<const BenchmarkSpec> all_functions();

std::string to_string(FunctionId id);

/// Parses "F1".."F23" (case-insensitive). Empty optional on anything else.
std::optional<FunctionId> parse_function_id(std::string_view text);

/// Evaluates a function at x. The dimension of x must conform to the
/// function's policy; violations throw std::invalid_argument naming the
/// expected dimension. x is not required to lie inside the bounds.
/// The noise term of F7 consumes exactly one uniform [0, 1) draw.
double evaluate(FunctionId id, std::span<const double> x, Rng& rng);

/// Same for the 22 deterministic functions; throws for F7.
double evaluate(FunctionId id, std::span<const double> x);

/// Boundary penalty used by F12/F13: k*(xi-a)^m above a, k*(-xi-a)^m below
/// -a, zero on [-a, a].
double penalty_u(double xi, double a, double k, double m);

/// y_i = 1 + (x_i + 1) / 4, component-wise.
std::vector<double> y_transform(std::span<const double> x);

} // namespace batopt

#endif
