#include "batopt/functions.hpp"

#include <array>
#include <cctype>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace batopt {

namespace {

constexpr double pi = std::numbers::pi;

// Constant tables for F14, F15 and F19-F23 are the classical published ones:
// De Jong's foxholes grid (1975), Kowalik's data set, and the Hartman and
// Shekel tables of Dixon & Szego (1978), as reprinted in the usual benchmark
// surveys.

constexpr std::array<std::array<double, 25>, 2> foxholes_a = {{
    {-32, -16, 0, 16, 32, -32, -16, 0, 16, 32, -32, -16, 0, 16, 32,
     -32, -16, 0, 16, 32, -32, -16, 0, 16, 32},
    {-32, -32, -32, -32, -32, -16, -16, -16, -16, -16, 0, 0, 0, 0, 0,
     16, 16, 16, 16, 16, 32, 32, 32, 32, 32},
}};

constexpr std::array<double, 11> kowalik_a = {0.1957, 0.1947, 0.1735, 0.1600, 0.0844, 0.0627,
                                              0.0456, 0.0342, 0.0323, 0.0235, 0.0246};
// b_i are the reciprocals of 0.25, 0.5, 1, 2, 4, 6, 8, 10, 12, 14, 16.
constexpr std::array<double, 11> kowalik_b = {4.0,       2.0,   1.0,        0.5,
                                              0.25,      1.0 / 6.0, 0.125,  0.1,
                                              1.0 / 12.0, 1.0 / 14.0, 0.0625};

constexpr std::array<std::array<double, 3>, 4> hartman3_a = {{
    {3.0, 10.0, 30.0},
    {0.1, 10.0, 35.0},
    {3.0, 10.0, 30.0},
    {0.1, 10.0, 35.0},
}};
constexpr std::array<double, 4> hartman_c = {1.0, 1.2, 3.0, 3.2};
constexpr std::array<std::array<double, 3>, 4> hartman3_p = {{
    {0.3689, 0.1170, 0.2673},
    {0.4699, 0.4387, 0.7470},
    {0.1091, 0.8732, 0.5547},
    {0.03815, 0.5743, 0.8828},
}};

constexpr std::array<std::array<double, 6>, 4> hartman6_a = {{
    {10.0, 3.0, 17.0, 3.5, 1.7, 8.0},
    {0.05, 10.0, 17.0, 0.1, 8.0, 14.0},
    {3.0, 3.5, 1.7, 10.0, 17.0, 8.0},
    {17.0, 8.0, 0.05, 10.0, 0.1, 14.0},
}};
constexpr std::array<std::array<double, 6>, 4> hartman6_p = {{
    {0.1312, 0.1696, 0.5569, 0.0124, 0.8283, 0.5886},
    {0.2329, 0.4135, 0.8307, 0.3736, 0.1004, 0.9991},
    {0.2348, 0.1451, 0.3522, 0.2883, 0.3047, 0.6650},
    {0.4047, 0.8828, 0.8732, 0.5743, 0.1091, 0.0381},
}};

constexpr std::array<std::array<double, 4>, 10> shekel_a = {{
    {4.0, 4.0, 4.0, 4.0},
    {1.0, 1.0, 1.0, 1.0},
    {8.0, 8.0, 8.0, 8.0},
    {6.0, 6.0, 6.0, 6.0},
    {3.0, 7.0, 3.0, 7.0},
    {2.0, 9.0, 2.0, 9.0},
    {5.0, 5.0, 3.0, 3.0},
    {8.0, 1.0, 8.0, 1.0},
    {6.0, 2.0, 6.0, 2.0},
    {7.0, 3.6, 7.0, 3.6},
}};
constexpr std::array<double, 10> shekel_c = {0.1, 0.2, 0.2, 0.4, 0.4, 0.6, 0.3, 0.7, 0.5, 0.5};

double sphere(std::span<const double> x) {
    double sum = 0.0;
    for (double v : x) sum += v * v;
    return sum;
}

double schwefel_2_22(std::span<const double> x) {
    double sum = 0.0, prod = 1.0;
    for (double v : x) {
        sum += std::abs(v);
        prod *= std::abs(v);
    }
    return sum + prod;
}

double schwefel_1_2(std::span<const double> x) {
    double total = 0.0, prefix = 0.0;
    for (double v : x) {
        prefix += v;
        total += prefix * prefix;
    }
    return total;
}

double schwefel_2_21(std::span<const double> x) {
    double m = 0.0;
    for (double v : x) m = std::max(m, std::abs(v));
    return m;
}

double rosenbrock(std::span<const double> x) {
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        const double a = x[i + 1] - x[i] * x[i];
        const double b = x[i] - 1.0;
        sum += 100.0 * a * a + b * b;
    }
    return sum;
}

double step(std::span<const double> x) {
    double sum = 0.0;
    for (double v : x) {
        const double s = std::floor(v + 0.5);
        sum += s * s;
    }
    return sum;
}

double quartic_noise(std::span<const double> x, Rng& rng) {
    double sum = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double sq = x[i] * x[i];
        sum += static_cast<double>(i + 1) * sq * sq;
    }
    return sum + rng.next_unit();
}

double schwefel_2_26(std::span<const double> x) {
    double sum = 0.0;
    for (double v : x) sum += -v * std::sin(std::sqrt(std::abs(v)));
    return sum;
}

double rastrigin(std::span<const double> x) {
    double sum = 0.0;
    for (double v : x) sum += v * v - 10.0 * std::cos(2.0 * pi * v) + 10.0;
    return sum;
}

double ackley(std::span<const double> x) {
    const double n = static_cast<double>(x.size());
    double sq = 0.0, cs = 0.0;
    for (double v : x) {
        sq += v * v;
        cs += std::cos(2.0 * pi * v);
    }
    return -20.0 * std::exp(-0.2 * std::sqrt(sq / n)) - std::exp(cs / n) + 20.0 +
           std::numbers::e;
}

double griewank(std::span<const double> x) {
    double sum = 0.0, prod = 1.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sum += x[i] * x[i];
        prod *= std::cos(x[i] / std::sqrt(static_cast<double>(i + 1)));
    }
    return sum / 4000.0 - prod + 1.0;
}

double penalized_1(std::span<const double> x) {
    const std::size_t n = x.size();
    const std::vector<double> y = y_transform(x);
    const double s1 = std::sin(pi * y[0]);
    double sum = 10.0 * s1 * s1;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double s = std::sin(pi * y[i + 1]);
        sum += (y[i] - 1.0) * (y[i] - 1.0) * (1.0 + 10.0 * s * s);
    }
    sum += (y[n - 1] - 1.0) * (y[n - 1] - 1.0);
    double penalty = 0.0;
    for (double v : x) penalty += penalty_u(v, 10.0, 100.0, 4.0);
    return pi / static_cast<double>(n) * sum + penalty;
}

double penalized_2(std::span<const double> x) {
    const std::size_t n = x.size();
    const double s1 = std::sin(3.0 * pi * x[0]);
    double sum = s1 * s1;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double s = std::sin(3.0 * pi * x[i + 1]);
        sum += (x[i] - 1.0) * (x[i] - 1.0) * (1.0 + s * s);
    }
    const double sn = std::sin(2.0 * pi * x[n - 1]);
    sum += (x[n - 1] - 1.0) * (x[n - 1] - 1.0) * (1.0 + sn * sn);
    double penalty = 0.0;
    for (double v : x) penalty += penalty_u(v, 5.0, 100.0, 4.0);
    return 0.1 * sum + penalty;
}

double foxholes(std::span<const double> x) {
    double sum = 1.0 / 500.0;
    for (int j = 0; j < 25; ++j) {
        double inner = static_cast<double>(j + 1);
        for (int i = 0; i < 2; ++i) {
            const double d = x[static_cast<std::size_t>(i)] - foxholes_a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            const double d2 = d * d;
            inner += d2 * d2 * d2;
        }
        sum += 1.0 / inner;
    }
    return 1.0 / sum;
}

double kowalik(std::span<const double> x) {
    double sum = 0.0;
    for (std::size_t i = 0; i < kowalik_a.size(); ++i) {
        const double b = kowalik_b[i];
        const double num = x[0] * (b * b + b * x[1]);
        const double den = b * b + b * x[2] + x[3];
        const double r = kowalik_a[i] - num / den;
        sum += r * r;
    }
    return sum;
}

double six_hump_camel(std::span<const double> x) {
    const double x1 = x[0], x2 = x[1];
    const double x1sq = x1 * x1;
    return 4.0 * x1sq - 2.1 * x1sq * x1sq + x1sq * x1sq * x1sq / 3.0 + x1 * x2 -
           4.0 * x2 * x2 + 4.0 * x2 * x2 * x2 * x2;
}

double branin(std::span<const double> x) {
    const double x1 = x[0], x2 = x[1];
    const double t = x2 - 5.1 / (4.0 * pi * pi) * x1 * x1 + 5.0 / pi * x1 - 6.0;
    return t * t + 10.0 * (1.0 - 1.0 / (8.0 * pi)) * std::cos(x1) + 10.0;
}

double goldstein_price(std::span<const double> x) {
    const double x1 = x[0], x2 = x[1];
    const double a = x1 + x2 + 1.0;
    const double f1 = 1.0 + a * a * (19.0 - 14.0 * x1 + 3.0 * x1 * x1 - 14.0 * x2 +
                                     6.0 * x1 * x2 + 3.0 * x2 * x2);
    const double b = 2.0 * x1 - 3.0 * x2;
    const double f2 = 30.0 + b * b * (18.0 - 32.0 * x1 + 12.0 * x1 * x1 + 48.0 * x2 -
                                      36.0 * x1 * x2 + 27.0 * x2 * x2);
    return f1 * f2;
}

template <std::size_t Dim>
double hartman(std::span<const double> x, const std::array<std::array<double, Dim>, 4>& a,
               const std::array<std::array<double, Dim>, 4>& p) {
    double sum = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        double e = 0.0;
        for (std::size_t j = 0; j < Dim; ++j) {
            const double d = x[j] - p[i][j];
            e += a[i][j] * d * d;
        }
        sum -= hartman_c[i] * std::exp(-e);
    }
    return sum;
}

double shekel(std::span<const double> x, std::size_t m) {
    double sum = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
        double e = shekel_c[j];
        for (std::size_t i = 0; i < 4; ++i) {
            const double d = x[i] - shekel_a[j][i];
            e += d * d;
        }
        sum -= 1.0 / e;
    }
    return sum;
}

const std::array<BenchmarkSpec, 23> registry = {{
    {FunctionId::F1, "Sphere", 0, {-100.0}, {100.0}, false},
    {FunctionId::F2, "Schwefel 2.22", 0, {-10.0}, {10.0}, false},
    {FunctionId::F3, "Schwefel 1.2", 0, {-100.0}, {100.0}, false},
    {FunctionId::F4, "Schwefel 2.21", 0, {-100.0}, {100.0}, false},
    {FunctionId::F5, "Rosenbrock", 0, {-30.0}, {30.0}, false},
    {FunctionId::F6, "Step", 0, {-100.0}, {100.0}, false},
    {FunctionId::F7, "Quartic with noise", 0, {-1.28}, {1.28}, true},
    {FunctionId::F8, "Schwefel 2.26", 0, {-500.0}, {500.0}, false},
    {FunctionId::F9, "Rastrigin", 0, {-5.12}, {5.12}, false},
    {FunctionId::F10, "Ackley", 0, {-32.0}, {32.0}, false},
    {FunctionId::F11, "Griewank", 0, {-600.0}, {600.0}, false},
    {FunctionId::F12, "Penalized 1", 0, {-50.0}, {50.0}, false},
    {FunctionId::F13, "Penalized 2", 0, {-50.0}, {50.0}, false},
    {FunctionId::F14, "Shekel foxholes", 2, {-65.536}, {65.536}, false},
    {FunctionId::F15, "Kowalik", 4, {-5.0}, {5.0}, false},
    {FunctionId::F16, "Six-hump camel back", 2, {-5.0}, {5.0}, false},
    {FunctionId::F17, "Branin", 2, {-5.0, 0.0}, {10.0, 15.0}, false},
    {FunctionId::F18, "Goldstein-Price", 2, {-2.0}, {2.0}, false},
    {FunctionId::F19, "Hartman 3", 3, {0.0}, {1.0}, false},
    {FunctionId::F20, "Hartman 6", 6, {0.0}, {1.0}, false},
    {FunctionId::F21, "Shekel 5", 4, {0.0}, {10.0}, false},
    {FunctionId::F22, "Shekel 7", 4, {0.0}, {10.0}, false},
    {FunctionId::F23, "Shekel 10", 4, {0.0}, {10.0}, false},
}};

void require_dim(FunctionId id, std::size_t got, int expected) {
    if (got != static_cast<std::size_t>(expected)) {
        throw std::invalid_argument(to_string(id) + " expects dimension " +
                                    std::to_string(expected) + ", got " + std::to_string(got));
    }
}

} // namespace

double penalty_u(double xi, double a, double k, double m) {
    if (xi > a) return k * std::pow(xi - a, m);
    if (xi < -a) return k * std::pow(-xi - a, m);
    return 0.0;
}

std::vector<double> y_transform(std::span<const double> x) {
    std::vector<double> y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) y[i] = 1.0 + (x[i] + 1.0) / 4.0;
    return y;
}

int BenchmarkSpec::dimension(int dim) const {
    if (fixed_dim > 0) {
        if (dim != 0 && dim != fixed_dim)
            throw std::invalid_argument(std::string(name) + " has fixed dimension " +
                                        std::to_string(fixed_dim));
        return fixed_dim;
    }
    if (dim < 0) throw std::invalid_argument("dimension must be positive");
    return dim == 0 ? default_dimension : dim;
}

SearchSpace BenchmarkSpec::space(int dim) const {
    const int n = dimension(dim);
    SearchSpace s;
    if (lower.size() == 1) {
        s = SearchSpace::box(static_cast<std::size_t>(n), lower[0], upper[0]);
    } else {
        s.lower = lower;
        s.upper = upper;
    }
    return s;
}

const BenchmarkSpec& spec_of(FunctionId id) {
    const auto index = static_cast<std::size_t>(static_cast<int>(id) - 1);
    if (index >= registry.size()) throw std::invalid_argument("unknown function id");
    return registry[index];
}

std::span<const BenchmarkSpec> all_functions() { return registry; }

std::string to_string(FunctionId id) { return "F" + std::to_string(static_cast<int>(id)); }

std::optional<FunctionId> parse_function_id(std::string_view text) {
    if (text.size() < 2 || (text[0] != 'F' && text[0] != 'f')) return std::nullopt;
    int value = 0;
    for (char c : text.substr(1)) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
        value = value * 10 + (c - '0');
        if (value > 23) return std::nullopt;
    }
    if (value < 1) return std::nullopt;
    return static_cast<FunctionId>(value);
}

double evaluate(FunctionId id, std::span<const double> x, Rng& rng) {
    const BenchmarkSpec& spec = spec_of(id);
    if (spec.fixed_dim > 0) {
        require_dim(id, x.size(), spec.fixed_dim);
    } else if (x.empty()) {
        throw std::invalid_argument(to_string(id) + " expects dimension >= 1, got 0");
    }
    switch (id) {
        case FunctionId::F1: return sphere(x);
        case FunctionId::F2: return schwefel_2_22(x);
        case FunctionId::F3: return schwefel_1_2(x);
        case FunctionId::F4: return schwefel_2_21(x);
        case FunctionId::F5: return rosenbrock(x);
        case FunctionId::F6: return step(x);
        case FunctionId::F7: return quartic_noise(x, rng);
        case FunctionId::F8: return schwefel_2_26(x);
        case FunctionId::F9: return rastrigin(x);
        case FunctionId::F10: return ackley(x);
        case FunctionId::F11: return griewank(x);
        case FunctionId::F12: return penalized_1(x);
        case FunctionId::F13: return penalized_2(x);
        case FunctionId::F14: return foxholes(x);
        case FunctionId::F15: return kowalik(x);
        case FunctionId::F16: return six_hump_camel(x);
        case FunctionId::F17: return branin(x);
        case FunctionId::F18: return goldstein_price(x);
        case FunctionId::F19: return hartman<3>(x, hartman3_a, hartman3_p);
        case FunctionId::F20: return hartman<6>(x, hartman6_a, hartman6_p);
        case FunctionId::F21: return shekel(x, 5);
        case FunctionId::F22: return shekel(x, 7);
        case FunctionId::F23: return shekel(x, 10);
    }
    throw std::invalid_argument("unknown function id");
}

double evaluate(FunctionId id, std::span<const double> x) {
    if (spec_of(id).noisy)
        throw std::invalid_argument(to_string(id) + " is noisy and needs an Rng");
    Rng unused(0);
    return evaluate(id, x, unused);
}

} // namespace batopt
