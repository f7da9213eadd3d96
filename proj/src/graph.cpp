#include "rrg/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "rrg/error.hpp"

namespace rrg {

Graph::Graph(int n) : Graph(n, {}) {}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 0) throw DomainError("graph: negative vertex count");
    for (const Edge& e : edges_) {
        if (e.u == e.v) throw DomainError("graph: loop at vertex " + std::to_string(e.u));
        if (e.u < 0 || e.v >= n)
            throw DomainError("graph: edge " + std::to_string(e.u) + " " + std::to_string(e.v) +
                              " has an endpoint outside 0.." + std::to_string(n - 1));
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    adj_.assign(static_cast<std::size_t>(n), {});
    for (const Edge& e : edges_) {
        adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
        adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool Graph::has_edge(Vertex a, Vertex b) const {
    if (a == b || a < 0 || b < 0 || a >= n_ || b >= n_) return false;
    const auto& nb = adj_[static_cast<std::size_t>(a)];
    return std::binary_search(nb.begin(), nb.end(), b);
}

std::optional<std::size_t> Graph::edge_index(Edge e) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
}

Graph Graph::with_edges(std::span<const Edge> extra) const {
    std::vector<Edge> all = edges_;
    all.insert(all.end(), extra.begin(), extra.end());
    return Graph(n_, std::move(all));
}

Graph Graph::without_edge(Edge e) const {
    std::vector<Edge> rest;
    rest.reserve(edges_.size());
    for (const Edge& f : edges_)
        if (f != e) rest.push_back(f);
    return Graph(n_, std::move(rest));
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
    std::vector<Vertex> sorted(vertices.begin(), vertices.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw DomainError("induced_subgraph: repeated vertex");
    std::vector<int> relabel(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const Vertex v = sorted[i];
        if (v < 0 || v >= g.vertex_count())
            throw DomainError("induced_subgraph: vertex " + std::to_string(v) + " out of range");
        relabel[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        const int a = relabel[static_cast<std::size_t>(e.u)];
        const int b = relabel[static_cast<std::size_t>(e.v)];
        if (a >= 0 && b >= 0) edges.emplace_back(a, b);
    }
    return Graph(static_cast<int>(sorted.size()), std::move(edges));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<Edge> edges = a.edges();
    const int shift = a.vertex_count();
    for (const Edge& e : b.edges()) edges.emplace_back(e.u + shift, e.v + shift);
    return Graph(a.vertex_count() + b.vertex_count(), std::move(edges));
}

Graph complete_graph(int n) {
    std::vector<Edge> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) edges.emplace_back(a, b);
    return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
    if (n < 3) throw DomainError("cycle_graph: need at least 3 vertices");
    std::vector<Edge> edges;
    for (int a = 0; a < n; ++a) edges.emplace_back(a, (a + 1) % n);
    return Graph(n, std::move(edges));
}

Graph path_graph(int edges) {
    std::vector<Edge> list;
    for (int a = 0; a < edges; ++a) list.emplace_back(a, a + 1);
    return Graph(edges + 1, std::move(list));
}

BitGraph::BitGraph(int n)
    : n_(n), words_((static_cast<std::size_t>(n) + 63) / 64),
      bits_(static_cast<std::size_t>(n) * words_, 0), degree_(static_cast<std::size_t>(n), 0) {}

BitGraph::BitGraph(const Graph& g) : BitGraph(g.vertex_count()) {
    for (const Edge& e : g.edges()) add_edge(e.u, e.v);
}

void BitGraph::add_edge(Vertex a, Vertex b) {
    if (has_edge(a, b)) return;
    row(a)[static_cast<std::size_t>(b) >> 6] |= std::uint64_t{1} << (b & 63);
    row(b)[static_cast<std::size_t>(a) >> 6] |= std::uint64_t{1} << (a & 63);
    ++degree_[static_cast<std::size_t>(a)];
    ++degree_[static_cast<std::size_t>(b)];
}

void BitGraph::remove_edge(Vertex a, Vertex b) {
    if (!has_edge(a, b)) return;
    row(a)[static_cast<std::size_t>(b) >> 6] &= ~(std::uint64_t{1} << (b & 63));
    row(b)[static_cast<std::size_t>(a) >> 6] &= ~(std::uint64_t{1} << (a & 63));
    --degree_[static_cast<std::size_t>(a)];
    --degree_[static_cast<std::size_t>(b)];
}

} // namespace rrg
