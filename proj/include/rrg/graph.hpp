#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace rrg {

using Vertex = int;

/// Unordered vertex pair, stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1. Immutable after construction;
/// edges are kept sorted and deduplicated so equality is structural.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    /// Throws DomainError on loops or out-of-range endpoints. Duplicates collapse.
    Graph(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Vertex>& neighbours(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(Vertex v) const { return static_cast<int>(neighbours(v).size()); }

    bool has_edge(Vertex a, Vertex b) const;
    bool has_edge(Edge e) const { return has_edge(e.u, e.v); }
    /// Position of e in edges(), if present.
    std::optional<std::size_t> edge_index(Edge e) const;

    Graph with_edges(std::span<const Edge> extra) const;
    Graph without_edge(Edge e) const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
};

/// Graph on the order-preserving relabelling of `vertices` with every G-edge
/// inside the set. Throws DomainError for out-of-range or repeated vertices.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// Vertex-disjoint union; b's vertices are shifted by a.vertex_count().
Graph disjoint_union(const Graph& a, const Graph& b);

Graph complete_graph(int n);
Graph cycle_graph(int n);
/// Path with `edges` edges on edges + 1 vertices.
Graph path_graph(int edges);

// Adjacency rows as bitsets. Mutable, used as the host for embedding
// searches whose edge set changes while searching (colouring backtracking).
class BitGraph {
public:
    BitGraph() = default;
    explicit BitGraph(int n);
    explicit BitGraph(const Graph& g);

    int vertex_count() const { return n_; }
    std::size_t words() const { return words_; }

    bool has_edge(Vertex a, Vertex b) const {
        return (row(a)[static_cast<std::size_t>(b) >> 6] >> (b & 63)) & 1U;
    }
    void add_edge(Vertex a, Vertex b);
    void remove_edge(Vertex a, Vertex b);
    int degree(Vertex v) const { return degree_[static_cast<std::size_t>(v)]; }

    const std::uint64_t* row(Vertex v) const { return bits_.data() + static_cast<std::size_t>(v) * words_; }

private:
    std::uint64_t* row(Vertex v) { return bits_.data() + static_cast<std::size_t>(v) * words_; }

    int n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
    std::vector<int> degree_;
};

} // namespace rrg
