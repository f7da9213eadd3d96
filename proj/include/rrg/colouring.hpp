#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rrg/avoidance.hpp"
#include "rrg/colour.hpp"
#include "rrg/embedding.hpp"
#include "rrg/json.hpp"
#include "rrg/rational.hpp"

namespace rrg {

/// Copies of h in the colour-c subgraph. Throws DomainError if the colouring is partial.
std::vector<Copy> monochromatic_copies(const Colouring& colouring, const Graph& h, Colour c);

/// True when no colour class contains a copy of h.
bool is_monochromatic_free(const Colouring& colouring, const Graph& h);

struct ColouringSearchResult {
    SearchVerdict verdict = SearchVerdict::unknown;
    std::optional<Colouring> colouring; // set iff verdict == found
    std::uint64_t nodes = 0;
};

/// Looks for an r-colouring of g with no monochromatic h. none_exists is only
/// returned after an exhaustive search (g is then (h,r)-Ramsey); unknown when
/// the node budget runs out. Throws DomainError if h has fewer than 2 edges,
/// budget is not positive, or r is not 2 or 3.
ColouringSearchResult search_h_free_colouring(const Graph& g, const Graph& h, int r, std::int64_t budget);

/// Extends a red/blue colouring to g + new_edges: each new edge, in order, is
/// green unless that completes a green copy of h, in which case it is red.
Colouring greedy_third_colour_extension(const Colouring& colouring, std::span<const Edge> new_edges, const Graph& h);

// Round-one heuristic for hosts too large to search: edges in sorted order
// take the palette colour creating the fewest new near-copies (copies of
// h minus one edge) through the edge, ties to the lower colour. Colours that
// would complete a monochromatic h are never taken; an edge whose other colours
// are all ruled out takes the remaining one at once, and on a dead end the
// search backs up to the most recent choice. Returns nullopt once `budget`
// colour attempts are spent or no colouring exists.
std::optional<Colouring> adversarial_greedy_colouring(const Graph& g, const Graph& h, int palette,
                                                      std::int64_t budget = 200'000);

/// Two graphs and a matching on one shared label space. The vertex set of
/// each F is V(M) together with the vertices it has edges on.
struct ForcingStructure {
    Graph f_red;
    Graph f_blue;
    std::vector<Edge> matching;
};

struct ForcingReport {
    bool holds = false;
    std::optional<int> violated_condition; // 1..4 for (i)..(iv)
    std::string detail;
    Json witness;
    Rational m2_pattern;
    Rational m2_union;
    /// Condition (iii) met with equality by some J (first such J recorded).
    bool iii_tight = false;
    std::vector<Vertex> iii_tight_witness;
};

struct ForcingOptions {
    int max_union_vertices = 30;
    int max_free_vertices = 26;
    int max_matching = 20;
};

/// Checks conditions (i)-(iv) in order, stopping at the first violation.
ForcingReport check_forcing_structure(const Graph& h, const ForcingStructure& s, const ForcingOptions& options = {});

Json forcing_report_to_json(const ForcingReport& report);

} // namespace rrg
