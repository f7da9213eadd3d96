#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rrg/graph.hpp"
#include "rrg/rational.hpp"

namespace rrg {

/// d = e/v, d1 = e/(v-1), d2 = (e-1)/(v-2) and their maxima m, m1, m2.
enum class DensityKind { plain = 0, one = 1, two = 2 };

std::string to_string(DensityKind kind);

/// Exponential subset scans refuse graphs above this many vertices.
struct DensityOptions {
    int max_vertices = 16;
};

/// d_kind of g itself. d1 and d2 are 0 for edgeless graphs and d2(K2) = 1/2.
/// Throws DomainError for kind plain on the 0-vertex graph.
Rational local_density(const Graph& g, DensityKind kind);

struct DensityReport {
    Rational value;
    /// Smallest vertex set attaining the maximum, lexicographically first among those.
    std::vector<Vertex> witness;
    DensityKind kind = DensityKind::plain;
};

/// m_kind(g): the maximum of local_density over induced subgraphs.
DensityReport max_density(const Graph& g, DensityKind kind, const DensityOptions& options = {});

/// A subgraph breaking (strict) balancedness: induced on `vertices`, with
/// `removed_edge` additionally deleted when the violation is a same-vertex-set subgraph.
struct BalanceCounterexample {
    std::vector<Vertex> vertices;
    std::optional<Edge> removed_edge;
    Rational value;
};

struct BalanceReport {
    bool holds = false;
    Rational density; // local density of g
    std::optional<BalanceCounterexample> counterexample;
};

/// Non-strict: d_kind(g) = m_kind(g). Strict: additionally every proper
/// subgraph with at least one edge (and, for kind two, at least three
/// vertices) has strictly smaller d_kind. Throws DomainError when g is edgeless.
BalanceReport balancedness_report(const Graph& g, DensityKind kind, bool strict, const DensityOptions& options = {});

inline bool balancedness(const Graph& g, DensityKind kind, bool strict, const DensityOptions& options = {}) {
    return balancedness_report(g, kind, strict, options).holds;
}

/// Lexicographically first edge h with m2(H - h) < m2(H), if any.
std::optional<Edge> find_m2_decreasing_edge(const Graph& h, const DensityOptions& options = {});

} // namespace rrg
