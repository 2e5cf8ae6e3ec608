#pragma once

#include <cstddef>

#include "chromakit/multigraph.hpp"
#include "chromakit/polynomial.hpp"

namespace chromakit {

/// 2^|E| subsets are enumerated, so refuse beyond this many edges.
inline constexpr std::size_t kSubsetEdgeBudget = 20;

/// The cycle-specific inclusion-exclusion sum, term by term:
/// sum_{k=0}^{n-1} (-1)^k C(n,k) λ^(n-k), plus the final (-1)^n λ for the
/// all-edges intersection. Kept independent of chromatic_by_subsets so the
/// two routes can cross-validate. n = 0 is an error.
Polynomial cycle_inclusion_exclusion(std::size_t n);

/// Spanning-subgraph expansion for arbitrary multigraphs:
/// sum over edge subsets S of (-1)^|S| λ^c(S), where c(S) counts the
/// components of (V, S). Parallel edges are deduplicated first (their
/// events are identical sets); any loop short-circuits to the zero
/// polynomial.
Polynomial chromatic_by_subsets(const Multigraph& g,
                                std::size_t max_edges = kSubsetEdgeBudget);

}  // namespace chromakit
