#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace chromakit {

using Vertex = std::uint32_t;

/// Index into a Multigraph's edge list. Valid only for the exact graph value
/// it was taken from; rewrite operations return fresh graphs.
using EdgeId = std::size_t;

/// Undirected endpoint pair. Loops (a == b) and duplicate pairs are allowed.
struct Edge {
    Vertex a = 0;
    Vertex b = 0;

    bool is_loop() const { return a == b; }
    bool operator==(const Edge&) const = default;
};

/// Multigraph on vertices 0..vertex_count-1 with an ordered edge multiset.
///
/// The edge list order is part of the value: it is preserved verbatim by
/// construction and rewritten deterministically by delete/contract, which is
/// what keeps EdgeId stable and traces reproducible. All operations are
/// const and return new values.
class Multigraph {
public:
    Multigraph() = default;
    Multigraph(std::size_t vertex_count, std::vector<Edge> edges);

    std::size_t vertex_count() const { return vertex_count_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(EdgeId e) const;

    bool has_loop() const;

    /// Same vertices; exactly that one edge occurrence removed. A parallel
    /// twin of the deleted edge survives.
    Multigraph delete_edge(EdgeId e) const;

    /// Merges the endpoints of e into the lower vertex index; indices above
    /// the higher endpoint shift down by one. Every other edge re-targets
    /// its endpoints, so an edge parallel to e becomes a loop. Contracting
    /// a loop is an error.
    Multigraph contract_edge(EdgeId e) const;

    /// Components of the underlying simple graph: a loop connects nothing,
    /// parallel edges count as one adjacency. The empty graph has 0.
    std::size_t connected_component_count() const;

    /// Duplicate unordered endpoint pairs reduced to their first occurrence.
    /// Loops are kept.
    Multigraph collapse_parallel_edges() const;

    /// Deterministic byte string: equal for graphs that are equal as labeled
    /// edge multisets, regardless of edge-list order. Not an isomorphism key.
    std::string canonical_key() const;

    bool operator==(const Multigraph&) const = default;

private:
    std::size_t vertex_count_ = 0;
    std::vector<Edge> edges_;
};

/// C_1 is one vertex with a loop, C_2 two vertices with two parallel edges,
/// C_n (n >= 3) the n-gon. n = 0 is an error.
Multigraph cycle_graph(std::size_t n);

/// n vertices joined in a line by n-1 edges; path_graph(1) is an isolated
/// vertex. n = 0 is an error.
Multigraph path_graph(std::size_t n);

/// Every unordered pair once. complete_graph(0) is the empty graph.
Multigraph complete_graph(std::size_t k);

/// Edge-list text format: first line "v e", then e lines "a b" with 0-based
/// endpoints; loops as "a a"; duplicate lines are meaningful. ASCII, LF.
std::string to_edge_list(const Multigraph& g);
Multigraph from_edge_list(std::string_view text);

Multigraph read_edge_list_file(const std::string& path);
void write_edge_list_file(const Multigraph& g, const std::string& path);

}  // namespace chromakit
