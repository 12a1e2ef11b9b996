#include "batopt/assignment.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace batopt {

namespace {

bool parse_number(const std::string& cell, double& out) {
    std::size_t consumed = 0;
    try {
        out = std::stod(cell, &consumed);
    } catch (const std::exception&) {
        return false;
    }
    while (consumed < cell.size() &&
           std::isspace(static_cast<unsigned char>(cell[consumed])))
        ++consumed;
    return consumed == cell.size();
}

std::vector<std::string> split_cells(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::stringstream stream(line);
    while (std::getline(stream, cell, ',')) cells.push_back(cell);
    return cells;
}

[[noreturn]] void bad_entry(std::size_t row, std::size_t col, const std::string& why) {
    throw std::invalid_argument("cost matrix entry at row " + std::to_string(row) + ", column " +
                                std::to_string(col) + " " + why);
}

} // namespace

void CostMatrix::validate() const {
    if (n == 0) throw std::invalid_argument("cost matrix must have n >= 1");
    if (cost.size() != n * n)
        throw std::invalid_argument("cost matrix must be square: expected " +
                                    std::to_string(n * n) + " entries, got " +
                                    std::to_string(cost.size()));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t w = 0; w < n; ++w) {
            const double v = at(j, w);
            if (!std::isfinite(v)) bad_entry(j, w, "is not finite");
            if (v < 0.0) bad_entry(j, w, "is negative");
        }
    }
}

CostMatrix CostMatrix::from_csv(std::string_view text) {
    std::vector<std::vector<double>> rows;
    std::istringstream stream{std::string(text)};
    std::string line;
    bool header_allowed = true;
    while (std::getline(stream, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const bool blank =
            std::all_of(line.begin(), line.end(),
                        [](unsigned char c) { return std::isspace(c); });
        if (blank) continue;
        const std::vector<std::string> cells = split_cells(line);
        std::vector<double> row;
        row.reserve(cells.size());
        bool numeric = true;
        for (std::size_t c = 0; c < cells.size(); ++c) {
            double v = 0.0;
            if (!parse_number(cells[c], v)) {
                if (header_allowed) {
                    numeric = false;
                    break;
                }
                bad_entry(rows.size(), c, "does not parse as a number: '" + cells[c] + "'");
            }
            row.push_back(v);
        }
        if (!numeric) {
            // one leading header line is tolerated
            header_allowed = false;
            continue;
        }
        header_allowed = false;
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::invalid_argument("cost matrix CSV contains no data rows");
    CostMatrix m;
    m.n = rows.size();
    for (std::size_t j = 0; j < rows.size(); ++j) {
        if (rows[j].size() != m.n)
            throw std::invalid_argument("cost matrix is not square: row " + std::to_string(j) +
                                        " has " + std::to_string(rows[j].size()) +
                                        " columns, expected " + std::to_string(m.n));
        m.cost.insert(m.cost.end(), rows[j].begin(), rows[j].end());
    }
    m.validate();
    return m;
}

CostMatrix CostMatrix::from_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("cost matrix JSON does not parse: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("costs") || !doc["costs"].is_array())
        throw std::invalid_argument("cost matrix JSON must be an object with a \"costs\" array");
    const auto& costs = doc["costs"];
    CostMatrix m;
    m.n = costs.size();
    if (m.n == 0) throw std::invalid_argument("cost matrix must have n >= 1");
    for (std::size_t j = 0; j < m.n; ++j) {
        const auto& row = costs[j];
        if (!row.is_array() || row.size() != m.n)
            throw std::invalid_argument("cost matrix is not square: row " + std::to_string(j) +
                                        " has " + std::to_string(row.size()) +
                                        " columns, expected " + std::to_string(m.n));
        for (std::size_t w = 0; w < m.n; ++w) {
            if (!row[w].is_number()) bad_entry(j, w, "is not a number");
            m.cost.push_back(row[w].get<double>());
        }
    }
    m.validate();
    return m;
}

CostMatrix CostMatrix::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open cost matrix file: " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();
    if (path.extension() == ".json") return from_json(text);
    return from_csv(text);
}

std::vector<int> decode_random_keys(std::span<const double> position) {
    const std::size_t n = position.size();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int l, int r) { return position[static_cast<std::size_t>(l)] <
                                                position[static_cast<std::size_t>(r)]; });
    std::vector<int> perm(n);
    for (std::size_t rank = 0; rank < n; ++rank)
        perm[static_cast<std::size_t>(order[rank])] = static_cast<int>(rank);
    return perm;
}

double assignment_cost(const CostMatrix& m, std::span<const int> perm) {
    if (perm.size() != m.n)
        throw std::invalid_argument("permutation length " + std::to_string(perm.size()) +
                                    " does not match matrix size " + std::to_string(m.n));
    std::vector<bool> used(m.n, false);
    double total = 0.0;
    for (std::size_t j = 0; j < m.n; ++j) {
        const int w = perm[j];
        if (w < 0 || static_cast<std::size_t>(w) >= m.n || used[static_cast<std::size_t>(w)])
            throw std::invalid_argument("not a permutation: worker index " + std::to_string(w) +
                                        " at job " + std::to_string(j));
        used[static_cast<std::size_t>(w)] = true;
        total += m.at(j, static_cast<std::size_t>(w));
    }
    return total;
}

Assignment brute_force_optimum(const CostMatrix& m) {
    m.validate();
    if (m.n > brute_force_limit)
        throw std::invalid_argument("brute_force_optimum limited to n <= " +
                                    std::to_string(brute_force_limit) + ", got " +
                                    std::to_string(m.n));
    std::vector<int> perm(m.n);
    std::iota(perm.begin(), perm.end(), 0);
    Assignment best;
    best.perm = perm;
    best.total_cost = assignment_cost(m, perm);
    // lexicographic order plus strict improvement keeps the smallest tied perm
    while (std::next_permutation(perm.begin(), perm.end())) {
        double total = 0.0;
        for (std::size_t j = 0; j < m.n; ++j)
            total += m.at(j, static_cast<std::size_t>(perm[j]));
        if (total < best.total_cost) {
            best.total_cost = total;
            best.perm = perm;
        }
    }
    return best;
}

std::pair<Assignment, RunResult> solve_assignment_mba(const CostMatrix& m,
                                                      const SwarmConfig& cfg) {
    m.validate();
    const Objective objective = [&m](std::span<const double> x, Rng&) {
        return assignment_cost(m, decode_random_keys(x));
    };
    const SearchSpace space = SearchSpace::box(m.n, 0.0, 1.0);
    RunResult result = run_mba(objective, space, cfg);

    Assignment solution;
    solution.perm = decode_random_keys(result.best.best_position);
    solution.total_cost = assignment_cost(m, solution.perm);
    return {std::move(solution), std::move(result)};
}

CostMatrix random_cost_matrix(std::size_t n, Rng& rng) {
    CostMatrix m;
    m.n = n;
    m.cost.resize(n * n);
    for (auto& v : m.cost) v = rng.uniform(60.0, 600.0);
    return m;
}

} // namespace batopt
