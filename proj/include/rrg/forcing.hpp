#pragma once

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "rrg/colour.hpp"
#include "rrg/embedding.hpp"
#include "rrg/json.hpp"

namespace rrg {

/// Which missing edges h' of H may play the base: one fixed edge, or every edge.
struct RootPolicy {
    std::optional<Edge> fixed_root; // nullopt = all edges

    static RootPolicy all_edges() { return {}; }
    static RootPolicy fixed(Edge h) { return {h}; }
};

/// One monochromatic copy of H - removed supported on a pair.
struct BaseWitness {
    Edge removed;            // the edge of H left out
    std::vector<Vertex> map; // H-vertex -> host vertex; map[removed.u], map[removed.v] is the pair
};

struct BaseEntry {
    std::array<std::optional<BaseWitness>, 3> by_colour; // indexed by Colour
    bool in_host = false;                                 // pair is already an edge of the coloured graph

    bool is_base(Colour c) const { return by_colour[index_of(c)].has_value(); }
};

/// Pairs of [n] that are the base of at least one monochromatic copy of H - h'.
struct BaseMap {
    int n = 0;
    std::map<Edge, BaseEntry> pairs;

    bool is_base(Edge pair, Colour c) const;
};

/// For every pair and colour c, records c when some c-monochromatic copy of
/// H - h' (h' per the policy) is supported on the pair. Throws DomainError for a
/// partial colouring or a fixed root that is not an edge of h.
BaseMap colour_bases(const Colouring& colouring, const Graph& h, const RootPolicy& policy = RootPolicy::all_edges());

// A pair is c-forced when it is a base in both other colours of
// {red, blue, green}; under a red/blue colouring only green-forced pairs exist.
// c-forced copies of H are copies of H in K_n all of whose pairs are c-forced.
struct ForcedSet {
    std::array<std::vector<Edge>, 3> pairs;
    std::array<std::vector<Copy>, 3> copies;

    std::size_t pair_count() const { return pairs[0].size() + pairs[1].size() + pairs[2].size(); }
    std::size_t copy_count() const { return copies[0].size() + copies[1].size() + copies[2].size(); }
};

/// Throws DomainError when palette is 2 but the bases contain green.
ForcedSet forced_set(const BaseMap& bases, int palette, const Graph& h, int n);

/// Pairs forced in colour c only (no copy enumeration).
std::vector<Edge> forced_pairs(const BaseMap& bases, Colour c);

Json forced_set_to_json(const ForcedSet& forced, const BaseMap& bases, const Graph& h, bool witnesses);

} // namespace rrg
