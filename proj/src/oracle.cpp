#include "chromakit/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "chromakit/errors.hpp"

namespace chromakit {

namespace {

void require_lambda_non_negative(std::int64_t lambda, const char* where) {
    if (lambda < 0) {
        throw std::invalid_argument(std::string(where) + ": lambda must be non-negative, got " +
                                    std::to_string(lambda));
    }
}

// Deduplicated lists of already-colored neighbors, per vertex: parallel
// edges impose a single constraint.
std::vector<std::vector<std::size_t>> earlier_neighbors(const Multigraph& g) {
    std::vector<std::vector<std::size_t>> earlier(g.vertex_count());
    for (const Edge& e : g.edges()) {
        if (e.is_loop()) continue;
        const std::size_t hi = std::max(e.a, e.b);
        const std::size_t lo = std::min(e.a, e.b);
        auto& list = earlier[hi];
        if (std::find(list.begin(), list.end(), lo) == list.end()) list.push_back(lo);
    }
    return earlier;
}

}  // namespace

bool power_exceeds_budget(const BigInt& base, std::uint64_t exponent, std::uint64_t budget) {
    // base^exponent >= 2^64 > budget for any uint64 budget.
    if (base >= 2 && exponent >= 64) return true;
    return big_pow(base, exponent) > budget;
}

BigInt count_proper_colorings(const Multigraph& g, std::int64_t lambda,
                              std::uint64_t max_assignments) {
    require_lambda_non_negative(lambda, "count_proper_colorings");
    const std::size_t v = g.vertex_count();
    if (power_exceeds_budget(BigInt(lambda), v, max_assignments)) {
        throw BudgetExceeded("count_proper_colorings: assignment space " +
                             std::to_string(lambda) + "^" + std::to_string(v) +
                             " exceeds the work budget of " + std::to_string(max_assignments));
    }
    if (v == 0) return 1;  // empty product
    if (lambda == 0) return 0;
    if (g.has_loop()) return 0;

    const auto earlier = earlier_neighbors(g);
    std::vector<std::int64_t> color(v, 0);  // 0 = unassigned, colors are 1..lambda
    std::uint64_t count = 0;
    std::size_t i = 0;
    while (true) {
        ++color[i];
        if (color[i] > lambda) {
            color[i] = 0;
            if (i == 0) break;
            --i;
            continue;
        }
        bool proper = true;
        for (std::size_t u : earlier[i]) {
            if (color[u] == color[i]) {
                proper = false;
                break;
            }
        }
        if (!proper) continue;
        if (i + 1 == v) {
            ++count;
            continue;
        }
        ++i;
    }
    return BigInt(count);
}

std::vector<Coloring> enumerate_proper_cycle_colorings(std::size_t n, std::int64_t lambda,
                                                       std::uint64_t max_enumerated) {
    require_lambda_non_negative(lambda, "enumerate_proper_cycle_colorings");
    if (n == 0) throw std::invalid_argument("enumerate_proper_cycle_colorings: n must be positive");
    if (n > max_enumerated) {
        throw BudgetExceeded("enumerate_proper_cycle_colorings: tuples of length " +
                             std::to_string(n) + " exceed the work budget of " +
                             std::to_string(max_enumerated));
    }
    // The output has at least (lambda-1)^n - (lambda-1) colorings; refuse a
    // certain overflow before allocating anything.
    if (lambda >= 3 &&
        (n >= 64 || big_pow(BigInt(lambda - 1), n) - (lambda - 1) > max_enumerated)) {
        throw BudgetExceeded("enumerate_proper_cycle_colorings: output exceeds " +
                             std::to_string(max_enumerated) + " colorings");
    }
    std::vector<Coloring> out;
    if (n == 1 || lambda == 0) return out;  // C_1 has a loop; 0 colors color nothing

    // Backtracking in color order yields lexicographic output directly.
    std::vector<int> color(n, 0);
    std::size_t i = 0;
    while (true) {
        ++color[i];
        if (color[i] > lambda) {
            color[i] = 0;
            if (i == 0) break;
            --i;
            continue;
        }
        if (i > 0 && color[i] == color[i - 1]) continue;
        if (i + 1 == n) {
            if (color[i] == color[0]) continue;
            if (out.size() >= max_enumerated) {
                throw BudgetExceeded("enumerate_proper_cycle_colorings: output exceeds " +
                                     std::to_string(max_enumerated) + " colorings");
            }
            out.push_back(color);
            continue;
        }
        ++i;
    }
    return out;
}

BigInt count_walks_brute(const Multigraph& g, Vertex from, Vertex to, std::size_t length,
                         std::uint64_t max_work) {
    if (from >= g.vertex_count() || to >= g.vertex_count()) {
        throw std::invalid_argument("count_walks_brute: endpoint out of range");
    }
    // One step option per incident edge occurrence; a loop is a single
    // v -> v option, matching the adjacency diagonal convention.
    std::vector<std::vector<Vertex>> steps(g.vertex_count());
    for (const Edge& e : g.edges()) {
        if (e.is_loop()) {
            steps[e.a].push_back(e.a);
        } else {
            steps[e.a].push_back(e.b);
            steps[e.b].push_back(e.a);
        }
    }
    std::size_t max_fanout = 0;
    for (const auto& list : steps) max_fanout = std::max(max_fanout, list.size());
    if (power_exceeds_budget(BigInt(max_fanout), length, max_work)) {
        throw BudgetExceeded("count_walks_brute: up to " + std::to_string(max_fanout) + "^" +
                             std::to_string(length) + " walk expansions exceed the work budget of " +
                             std::to_string(max_work));
    }

    std::uint64_t count = 0;
    auto expand = [&](auto&& self, Vertex at, std::size_t remaining) -> void {
        if (remaining == 0) {
            if (at == to) ++count;
            return;
        }
        for (Vertex next : steps[at]) self(self, next, remaining - 1);
    };
    expand(expand, from, length);
    return BigInt(count);
}

}  // namespace chromakit
