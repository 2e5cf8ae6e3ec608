#include "chromakit/engine_ie.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "chromakit/bigint.hpp"
#include "chromakit/errors.hpp"

namespace chromakit {

Polynomial cycle_inclusion_exclusion(std::size_t n) {
    if (n == 0) throw std::invalid_argument("cycle_inclusion_exclusion: n must be positive");
    std::vector<BigInt> coeffs(n + 1, BigInt(0));
    // Terms (-1)^k C(n,k) λ^(n-k) for k = 0..n-1, binomials built iteratively.
    BigInt binomial = 1;
    for (std::size_t k = 0; k < n; ++k) {
        coeffs[n - k] += (k % 2 == 0) ? binomial : -binomial;
        binomial = binomial * BigInt(n - k) / BigInt(k + 1);
    }
    // The all-edges intersection leaves one free color choice: (-1)^n λ.
    coeffs[1] += (n % 2 == 0) ? 1 : -1;
    return Polynomial(std::move(coeffs));
}

namespace {

// Components of the spanning subgraph (V, S) for the edge subset `mask`.
std::size_t subset_components(std::size_t vertex_count, const std::vector<Edge>& edges,
                              std::uint64_t mask, std::vector<std::size_t>& parent) {
    parent.resize(vertex_count);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    std::size_t components = vertex_count;
    for (std::size_t i = 0; mask != 0; ++i, mask >>= 1) {
        if ((mask & 1) == 0) continue;
        const std::size_t ra = find(edges[i].a);
        const std::size_t rb = find(edges[i].b);
        if (ra != rb) {
            parent[rb] = ra;
            --components;
        }
    }
    return components;
}

}  // namespace

Polynomial chromatic_by_subsets(const Multigraph& g, std::size_t max_edges) {
    if (g.has_loop()) return Polynomial();
    const Multigraph h = g.collapse_parallel_edges();
    const std::size_t m = h.edge_count();
    if (m > max_edges || m >= 63) {
        throw BudgetExceeded("chromatic_by_subsets: " + std::to_string(m) +
                             " edges exceed the subset budget of " + std::to_string(max_edges));
    }

    std::vector<BigInt> coeffs(h.vertex_count() + 1, BigInt(0));
    std::vector<std::size_t> scratch;
    const std::uint64_t subset_count = std::uint64_t{1} << m;
    for (std::uint64_t mask = 0; mask < subset_count; ++mask) {
        const std::size_t c = subset_components(h.vertex_count(), h.edges(), mask, scratch);
        const bool odd = (std::popcount(mask) & 1) != 0;
        coeffs[c] += odd ? -1 : 1;
    }
    return Polynomial(std::move(coeffs));
}

}  // namespace chromakit
