#pragma once

#include <cstddef>
#include <cstdint>

#include "chromakit/multigraph.hpp"
#include "chromakit/polynomial.hpp"

namespace chromakit {

struct DcStats {
    /// Recursion nodes entered, memo-served ones included.
    std::uint64_t nodes = 0;
    /// Nodes answered from the memo table.
    std::uint64_t cache_hits = 0;
    /// Deepest recursion level reached; the root is level 1.
    std::uint32_t max_depth = 0;
};

struct DcResult {
    Polynomial polynomial;
    DcStats stats;
};

/// Chromatic polynomial by deletion-contraction.
///
/// At each node, in order: a loop zeroes the polynomial; parallel edges
/// collapse to one; an edgeless graph on k vertices yields λ^k; otherwise
/// the pivot is the lowest-indexed edge after the collapse and the result
/// is dc(G-e) - dc(G/e). Memoized per invocation on the canonical key.
/// Exponential in the worst case; intended for desk-scale graphs.
DcResult chromatic_polynomial_dc(const Multigraph& g);

/// λ (λ-1)^(n-1) by direct product construction, no recursion. n = 0 errors.
Polynomial chromatic_polynomial_path(std::size_t n);

}  // namespace chromakit
