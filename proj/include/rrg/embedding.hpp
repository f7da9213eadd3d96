#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "rrg/graph.hpp"

namespace rrg {

/// Pre-assigned image of one pattern vertex.
struct Pin {
    Vertex pattern = 0;
    Vertex host = 0;
};

/// Receives the pattern->host map of one embedding; return false to stop.
using EmbeddingVisitor = std::function<bool(std::span<const Vertex>)>;

// Enumerates injective maps pattern -> host sending every pattern edge to a
// host edge (subgraph, not induced, semantics). Pattern vertices are placed
// pins first, then by most already-placed neighbours, then by descending
// degree; host candidates come from the intersection of the placed
// neighbours' rows and are pruned by host degree. Enumeration order is a
// pure function of the inputs. Returns false when the visitor stopped early.
bool for_each_embedding(const Graph& pattern, const BitGraph& host, const EmbeddingVisitor& visit,
                        std::span<const Pin> pins = {});

/// Unlabelled image of an embedding: two embeddings with the same image
/// vertex and edge sets are the same copy.
struct Copy {
    std::vector<Edge> edges;      // sorted
    std::vector<Vertex> vertices; // sorted

    friend auto operator<=>(const Copy&, const Copy&) = default;
};

Copy image_of(const Graph& pattern, std::span<const Vertex> map);

/// All distinct copies, ordered lexicographically by sorted image edge list.
std::vector<Copy> find_copies(const Graph& pattern, const Graph& host);
std::vector<Copy> find_copies(const Graph& pattern, const BitGraph& host);

bool contains_copy(const Graph& pattern, const BitGraph& host);

/// Copies that use host edge `through` (which must be present in host).
std::vector<Copy> find_copies_through(const Graph& pattern, const BitGraph& host, Edge through);
bool contains_copy_through(const Graph& pattern, const BitGraph& host, Edge through);

/// Pairwise edge-disjoint copies of a pattern in a host.
struct CopyPacking {
    std::vector<Copy> copies;

    std::size_t size() const { return copies.size(); }
};

enum class PackingMode { exact, greedy };

struct PackingOptions {
    /// Exact mode refuses hosts with more copies than this.
    std::size_t copy_cap = 5000;
};

/// Exact mode: a maximum packing (branch and bound). Greedy mode: the maximal
/// packing obtained by scanning copies in find_copies order. Throws
/// BudgetExceeded in exact mode above the copy cap, DomainError for an
/// edgeless pattern.
CopyPacking max_edge_disjoint_copies(const Graph& pattern, const Graph& host, PackingMode mode,
                                     const PackingOptions& options = {});

} // namespace rrg
