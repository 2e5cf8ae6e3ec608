#pragma once

#include <cstdint>
#include <vector>

#include "chromakit/bigint.hpp"
#include "chromakit/multigraph.hpp"

namespace chromakit {

/// A coloring of n cyclically arranged vertices; entries are colors in 1..λ.
using Coloring = std::vector<int>;

namespace budget {
/// Counting refuses when the assignment space λ^v (or the walk fan-out
/// bound) exceeds this.
inline constexpr std::uint64_t kMaxAssignments = 100'000'000;
/// Enumeration refuses once the output would exceed this many colorings.
inline constexpr std::uint64_t kMaxEnumerated = 10'000'000;
}  // namespace budget

/// True when base^exponent > budget, without materializing powers that are
/// astronomically larger than any uint64 budget.
bool power_exceeds_budget(const BigInt& base, std::uint64_t exponent, std::uint64_t budget);

/// Ground-truth count of proper colorings, straight from the definition:
/// a loop forces 0, parallel edges impose one constraint, the empty graph
/// counts 1 (empty product). Exact for any multigraph within budget.
BigInt count_proper_colorings(const Multigraph& g, std::int64_t lambda,
                              std::uint64_t max_assignments = budget::kMaxAssignments);

/// All proper λ-colorings of the cycle C_n in lexicographic order.
std::vector<Coloring> enumerate_proper_cycle_colorings(
    std::size_t n, std::int64_t lambda,
    std::uint64_t max_enumerated = budget::kMaxEnumerated);

/// Walk count by explicit expansion over the edge multiset: parallel edges
/// count separately and each loop is one step option. Independent of the
/// adjacency-matrix route.
BigInt count_walks_brute(const Multigraph& g, Vertex from, Vertex to,
                         std::size_t length,
                         std::uint64_t max_work = budget::kMaxAssignments);

}  // namespace chromakit
