#pragma once

#include <vector>

#include "rrg/graph.hpp"

namespace rrg {

/// A graph with a distinguished root edge; `u` and `v` keep the order given.
struct RootedGraph {
    Graph graph;
    Vertex u = 0;
    Vertex v = 1;

    /// Throws DomainError unless {u,v} is an edge of g.
    RootedGraph(Graph g, Vertex root_u, Vertex root_v);
};

/// The i-th copy of H glued onto central edge `central_edge`.
struct Attachment {
    Edge central_edge;
    int copy_index = 0;
    std::vector<Vertex> vertices; // new vertices only, in H-vertex order
    std::vector<Edge> edges;      // every edge of the copy, root included
};

// Vertex layout: central vertices keep their labels 0..v(G)-1; then, for each
// central edge in sorted order, each copy index, each H-vertex other than the
// root (ascending), one new vertex. For central edge {x,y} with x < y, x plays
// the root's u and y plays v.
struct ProductGraph {
    Graph graph;
    std::vector<Vertex> central_vertices;
    std::vector<Edge> central_edges;
    std::vector<Attachment> attachments;
    bool reduced = false;
};

/// G (x)^k (H,h): a central G with k copies of H glued along every edge.
/// Throws DomainError for k < 1, an edgeless G, or H on fewer than 3 vertices.
ProductGraph edge_rooted_product(const Graph& g, const RootedGraph& h, int k);

/// As edge_rooted_product with the central edges deleted.
ProductGraph reduced_edge_rooted_product(const Graph& g, const RootedGraph& h, int k);

} // namespace rrg
