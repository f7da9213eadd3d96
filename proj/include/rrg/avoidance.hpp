#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "rrg/colour.hpp"
#include "rrg/graph.hpp"

namespace rrg {

/// Copies of a pattern in a fixed host, each as a list of host-edge indices.
struct CopyHypergraph {
    Graph host;
    std::vector<std::vector<std::uint32_t>> copies;
    std::vector<std::vector<std::uint32_t>> through; // host edge -> copies using it
};

/// All copies of pattern in host; with `required`, only the copies using at
/// least one of those host edges.
CopyHypergraph build_copy_hypergraph(const Graph& pattern, const Graph& host,
                                     const std::vector<Edge>* required = nullptr);

enum class SearchVerdict { found, none_exists, unknown };

std::string_view to_string(SearchVerdict v);

struct AvoidanceResult {
    SearchVerdict verdict = SearchVerdict::unknown;
    std::vector<std::optional<Colour>> colours; // per host edge; set when found
    std::uint64_t nodes = 0;                    // (edge, colour) attempts
};

// Backtracking colouring of the free host edges, in `order`, such that no copy
// becomes monochromatic. Only copies through the newest edge are checked at each
// node. With propagate, a copy left with one uncoloured edge and every other
// edge in colour c removes c from that edge; an edge left with one colour takes
// it at once, and branching skips edges already coloured this way. With
// break_colour_symmetry an edge may only take a colour at most one above the
// largest colour used so far (sound when no edge is pre-coloured).
struct AvoidanceProblem {
    const CopyHypergraph* hypergraph = nullptr;
    int palette = 2;
    std::vector<std::optional<Colour>> fixed; // per host edge; empty = nothing fixed
    std::vector<std::uint32_t> order;         // must list every unfixed edge exactly once
    std::uint64_t budget = 1'000'000;
    bool break_colour_symmetry = false;
    bool propagate = true;
    /// Colours to try for an edge, best first; default is palette order.
    std::function<std::vector<int>(std::uint32_t edge, const std::vector<std::optional<Colour>>& colours)> value_order;
};

AvoidanceResult solve_avoidance(const AvoidanceProblem& problem);

/// Free edges sorted by descending number of copies through them, ties by index.
std::vector<std::uint32_t> fail_first_order(const CopyHypergraph& hypergraph, const std::vector<std::uint32_t>& free_edges);

} // namespace rrg
