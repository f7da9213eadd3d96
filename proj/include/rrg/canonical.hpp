#pragma once

#include <vector>

#include "rrg/graph.hpp"

namespace rrg {

/// Relabelled copy of g such that canonical_form(a) == canonical_form(b)
/// iff a and b are isomorphic. Individualisation-refinement over an
/// equitable partition, keeping the lexicographically largest adjacency code.
Graph canonical_form(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

bool is_connected(const Graph& g);

/// One representative (in canonical form) of every isomorphism class of
/// graphs on exactly n vertices, sorted by edge count then edge list.
std::vector<Graph> all_graphs(int n);

} // namespace rrg
