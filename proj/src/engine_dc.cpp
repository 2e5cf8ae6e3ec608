#include "chromakit/engine_dc.hpp"

#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>

namespace chromakit {

namespace {

struct DcContext {
    std::unordered_map<std::string, Polynomial> memo;
    DcStats stats;
};

Polynomial dc_eval(const Multigraph& g, DcContext& ctx, std::uint32_t depth) {
    ++ctx.stats.nodes;
    ctx.stats.max_depth = std::max(ctx.stats.max_depth, depth);

    if (g.has_loop()) return Polynomial();
    const Multigraph h = g.collapse_parallel_edges();
    if (h.edge_count() == 0) return Polynomial::monomial(h.vertex_count());

    std::string key = h.canonical_key();
    if (auto it = ctx.memo.find(key); it != ctx.memo.end()) {
        ++ctx.stats.cache_hits;
        return it->second;
    }

    // Pivot on the lowest-indexed edge; no loops remain at this point.
    Polynomial result =
        dc_eval(h.delete_edge(0), ctx, depth + 1) - dc_eval(h.contract_edge(0), ctx, depth + 1);
    ctx.memo.emplace(std::move(key), result);
    return result;
}

}  // namespace

DcResult chromatic_polynomial_dc(const Multigraph& g) {
    DcContext ctx;
    Polynomial p = dc_eval(g, ctx, 1);
    return DcResult{std::move(p), ctx.stats};
}

Polynomial chromatic_polynomial_path(std::size_t n) {
    if (n == 0) throw std::invalid_argument("chromatic_polynomial_path: n must be positive");
    const Polynomial lambda_minus_one = Polynomial::variable() - Polynomial::constant(1);
    Polynomial result = Polynomial::variable();
    for (std::size_t i = 1; i < n; ++i) result = result * lambda_minus_one;
    return result;
}

}  // namespace chromakit
