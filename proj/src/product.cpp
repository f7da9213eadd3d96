#include <algorithm>
#include "rrg/product.hpp"

#include <string>

#include "rrg/error.hpp"

namespace rrg {

RootedGraph::RootedGraph(Graph g, Vertex root_u, Vertex root_v) : graph(std::move(g)), u(root_u), v(root_v) {
    if (!graph.has_edge(u, v))
        throw DomainError("rooted graph: root " + std::to_string(u) + "," + std::to_string(v) + " is not an edge");
}

namespace {

ProductGraph build(const Graph& g, const RootedGraph& h, int k, bool reduced) {
    if (k < 1) throw DomainError("edge_rooted_product: k must be positive, got " + std::to_string(k));
    if (g.edge_count() == 0) throw DomainError("edge_rooted_product: central graph has no edges");
    if (h.graph.vertex_count() < 3)
        throw DomainError("edge_rooted_product: rooted graph needs at least 3 vertices");

    const int hv = h.graph.vertex_count();
    std::vector<Vertex> others;
    for (Vertex w = 0; w < hv; ++w)
        if (w != h.u && w != h.v) others.push_back(w);

    ProductGraph out;
    out.reduced = reduced;
    for (Vertex x = 0; x < g.vertex_count(); ++x) out.central_vertices.push_back(x);
    out.central_edges = g.edges();

    std::vector<Edge> edges;
    if (!reduced) edges = g.edges();
    Vertex next = g.vertex_count();
    for (const Edge& central : g.edges()) {
        for (int i = 0; i < k; ++i) {
            Attachment a;
            a.central_edge = central;
            a.copy_index = i;
            std::vector<Vertex> image(static_cast<std::size_t>(hv), -1);
            image[static_cast<std::size_t>(h.u)] = central.u;
            image[static_cast<std::size_t>(h.v)] = central.v;
            for (Vertex w : others) {
                image[static_cast<std::size_t>(w)] = next;
                a.vertices.push_back(next);
                ++next;
            }
            for (const Edge& he : h.graph.edges()) {
                const Edge mapped(image[static_cast<std::size_t>(he.u)], image[static_cast<std::size_t>(he.v)]);
                a.edges.push_back(mapped);
                if (mapped != central) edges.push_back(mapped);
            }
            std::sort(a.edges.begin(), a.edges.end());
            out.attachments.push_back(std::move(a));
        }
    }
    out.graph = Graph(next, std::move(edges));
    return out;
}

} // namespace

ProductGraph edge_rooted_product(const Graph& g, const RootedGraph& h, int k) { return build(g, h, k, false); }

ProductGraph reduced_edge_rooted_product(const Graph& g, const RootedGraph& h, int k) { return build(g, h, k, true); }

} // namespace rrg
