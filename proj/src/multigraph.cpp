#include "chromakit/multigraph.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace chromakit {

namespace {

std::string describe_edge(const Edge& e) {
    return "(" + std::to_string(e.a) + "," + std::to_string(e.b) + ")";
}

// Union-find over vertex indices.
class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    // Returns true when the two sets were distinct.
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent_[b] = a;
        return true;
    }

private:
    std::vector<std::size_t> parent_;
};

void append_u32(std::string& out, std::uint32_t value) {
    out.push_back(static_cast<char>(value & 0xff));
    out.push_back(static_cast<char>((value >> 8) & 0xff));
    out.push_back(static_cast<char>((value >> 16) & 0xff));
    out.push_back(static_cast<char>((value >> 24) & 0xff));
}

}  // namespace

Multigraph::Multigraph(std::size_t vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        if (e.a >= vertex_count_ || e.b >= vertex_count_) {
            throw std::invalid_argument("edge " + std::to_string(i) + " " + describe_edge(e) +
                                        " has an endpoint outside 0.." +
                                        std::to_string(vertex_count_) + "-1");
        }
    }
}

const Edge& Multigraph::edge(EdgeId e) const {
    if (e >= edges_.size()) {
        throw std::invalid_argument("edge id " + std::to_string(e) + " out of range (graph has " +
                                    std::to_string(edges_.size()) + " edges)");
    }
    return edges_[e];
}

bool Multigraph::has_loop() const {
    return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.is_loop(); });
}

Multigraph Multigraph::delete_edge(EdgeId e) const {
    edge(e);
    std::vector<Edge> out;
    out.reserve(edges_.size() - 1);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        if (i != e) out.push_back(edges_[i]);
    }
    return Multigraph(vertex_count_, std::move(out));
}

Multigraph Multigraph::contract_edge(EdgeId e) const {
    const Edge& target = edge(e);
    if (target.is_loop()) {
        throw std::invalid_argument("cannot contract loop edge " + std::to_string(e) + " " +
                                    describe_edge(target));
    }
    const Vertex lo = std::min(target.a, target.b);
    const Vertex hi = std::max(target.a, target.b);
    auto remap = [lo, hi](Vertex v) -> Vertex {
        if (v == hi) return lo;
        return v > hi ? v - 1 : v;
    };
    std::vector<Edge> out;
    out.reserve(edges_.size() - 1);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        if (i == e) continue;
        out.push_back(Edge{remap(edges_[i].a), remap(edges_[i].b)});
    }
    return Multigraph(vertex_count_ - 1, std::move(out));
}

std::size_t Multigraph::connected_component_count() const {
    if (vertex_count_ == 0) return 0;
    DisjointSets sets(vertex_count_);
    std::size_t components = vertex_count_;
    for (const Edge& e : edges_) {
        if (!e.is_loop() && sets.unite(e.a, e.b)) --components;
    }
    return components;
}

Multigraph Multigraph::collapse_parallel_edges() const {
    std::vector<Edge> out;
    out.reserve(edges_.size());
    for (const Edge& e : edges_) {
        const Edge normalized{std::min(e.a, e.b), std::max(e.a, e.b)};
        const bool seen = std::any_of(out.begin(), out.end(), [&](const Edge& kept) {
            return std::min(kept.a, kept.b) == normalized.a && std::max(kept.a, kept.b) == normalized.b;
        });
        if (!seen) out.push_back(e);
    }
    return Multigraph(vertex_count_, std::move(out));
}

std::string Multigraph::canonical_key() const {
    std::vector<std::pair<Vertex, Vertex>> normalized;
    normalized.reserve(edges_.size());
    for (const Edge& e : edges_) {
        normalized.emplace_back(std::min(e.a, e.b), std::max(e.a, e.b));
    }
    std::sort(normalized.begin(), normalized.end());
    std::string key;
    key.reserve(4 + 8 * normalized.size());
    append_u32(key, static_cast<std::uint32_t>(vertex_count_));
    for (const auto& [a, b] : normalized) {
        append_u32(key, a);
        append_u32(key, b);
    }
    return key;
}

Multigraph cycle_graph(std::size_t n) {
    if (n == 0) throw std::invalid_argument("cycle_graph: n must be positive");
    std::vector<Edge> edges;
    if (n == 1) {
        edges.push_back(Edge{0, 0});
    } else if (n == 2) {
        edges.push_back(Edge{0, 1});
        edges.push_back(Edge{0, 1});
    } else {
        edges.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            edges.push_back(Edge{static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n)});
        }
    }
    return Multigraph(n, std::move(edges));
}

Multigraph path_graph(std::size_t n) {
    if (n == 0) throw std::invalid_argument("path_graph: n must be positive");
    std::vector<Edge> edges;
    edges.reserve(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        edges.push_back(Edge{static_cast<Vertex>(i), static_cast<Vertex>(i + 1)});
    }
    return Multigraph(n, std::move(edges));
}

Multigraph complete_graph(std::size_t k) {
    std::vector<Edge> edges;
    edges.reserve(k * (k - 1) / 2);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            edges.push_back(Edge{static_cast<Vertex>(i), static_cast<Vertex>(j)});
        }
    }
    return Multigraph(k, std::move(edges));
}

std::string to_edge_list(const Multigraph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) {
        out << e.a << ' ' << e.b << '\n';
    }
    return out.str();
}

namespace {

// Parses one line of exactly `count` unsigned integers.
std::vector<std::uint64_t> parse_fields(const std::string& line, std::size_t count,
                                        std::size_t line_number) {
    std::istringstream in(line);
    std::vector<std::uint64_t> fields;
    std::uint64_t value = 0;
    while (in >> value) fields.push_back(value);
    if (!in.eof() || fields.size() != count) {
        throw std::invalid_argument("edge list line " + std::to_string(line_number) +
                                    ": expected " + std::to_string(count) +
                                    " non-negative integers, got \"" + line + "\"");
    }
    return fields;
}

}  // namespace

Multigraph from_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line)) {
        throw std::invalid_argument("edge list is empty; expected a \"v e\" header line");
    }
    const auto header = parse_fields(line, 2, 1);
    const std::size_t vertex_count = static_cast<std::size_t>(header[0]);
    const std::size_t edge_count = static_cast<std::size_t>(header[1]);

    std::vector<Edge> edges;
    edges.reserve(edge_count);
    std::size_t line_number = 1;
    while (edges.size() < edge_count) {
        if (!std::getline(in, line)) {
            throw std::invalid_argument("edge list ended after " + std::to_string(edges.size()) +
                                        " of " + std::to_string(edge_count) + " edges");
        }
        ++line_number;
        const auto fields = parse_fields(line, 2, line_number);
        if (fields[0] >= vertex_count || fields[1] >= vertex_count) {
            throw std::invalid_argument("edge list line " + std::to_string(line_number) +
                                        ": endpoint outside 0.." + std::to_string(vertex_count) +
                                        "-1");
        }
        edges.push_back(Edge{static_cast<Vertex>(fields[0]), static_cast<Vertex>(fields[1])});
    }
    while (std::getline(in, line)) {
        ++line_number;
        if (!line.empty() && line.find_first_not_of(" \t\r") != std::string::npos) {
            throw std::invalid_argument("edge list line " + std::to_string(line_number) +
                                        ": trailing content after the declared edges");
        }
    }
    return Multigraph(vertex_count, std::move(edges));
}

Multigraph read_edge_list_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open edge list file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return from_edge_list(buffer.str());
}

void write_edge_list_file(const Multigraph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open file for writing: " + path);
    out << to_edge_list(g);
}

}  // namespace chromakit
