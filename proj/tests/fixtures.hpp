#pragma once

#include <vector>

#include "rrg/colour.hpp"
#include "rrg/colouring.hpp"
#include "rrg/graph.hpp"

namespace fixture {

using rrg::Colour;
using rrg::Colouring;
using rrg::Edge;
using rrg::Graph;
using rrg::Vertex;

/// Triangles {0,1,2} and {3,4,5} with a path of `length` edges from 2 to 5.
inline Graph two_triangles_path(int length) {
    std::vector<Edge> edges{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}};
    Vertex prev = 2;
    Vertex next = 6;
    for (int i = 1; i < length; ++i) {
        edges.emplace_back(prev, next);
        prev = next++;
    }
    edges.emplace_back(prev, 5);
    return Graph(next, edges);
}

inline void add_path(std::vector<Edge>& edges, Vertex from, Vertex to, int length, Vertex& next) {
    Vertex prev = from;
    for (int i = 1; i < length; ++i) {
        edges.emplace_back(prev, next);
        prev = next++;
    }
    edges.emplace_back(prev, to);
}

// Matching pairs {i, 3+i}; red cherry apexes 6..8 and blue 9..11, each
// triple of apexes joined pairwise by paths of `length` edges.
inline rrg::ForcingStructure cherry_cycles(int length) {
    std::vector<Edge> red, blue, matching;
    for (Vertex i = 0; i < 3; ++i) {
        matching.emplace_back(i, 3 + i);
        red.emplace_back(i, 6 + i);
        red.emplace_back(3 + i, 6 + i);
        blue.emplace_back(i, 9 + i);
        blue.emplace_back(3 + i, 9 + i);
    }
    Vertex next = 12;
    add_path(red, 6, 7, length, next);
    add_path(red, 7, 8, length, next);
    add_path(red, 6, 8, length, next);
    add_path(blue, 9, 10, length, next);
    add_path(blue, 10, 11, length, next);
    add_path(blue, 9, 11, length, next);
    return {Graph(next, red), Graph(next, blue), matching};
}

/// x=0, y=1 with a red cherry through 2 and a blue cherry through 3.
inline Colouring gadget() {
    Colouring c(Graph(4, {{0, 2}, {1, 2}, {0, 3}, {1, 3}}));
    c.set({0, 2}, Colour::red);
    c.set({1, 2}, Colour::red);
    c.set({0, 3}, Colour::blue);
    c.set({1, 3}, Colour::blue);
    return c;
}

/// Gadgets on the three pairs of {0,1,2}; apexes 3..8 (red, blue per pair).
inline Colouring triangle_of_gadgets() {
    const Edge pairs[3] = {{0, 1}, {1, 2}, {0, 2}};
    std::vector<Edge> edges;
    for (int i = 0; i < 3; ++i) {
        const Vertex r = 3 + 2 * i, b = 4 + 2 * i;
        edges.insert(edges.end(), {{pairs[i].u, r}, {pairs[i].v, r}, {pairs[i].u, b}, {pairs[i].v, b}});
    }
    Colouring c(Graph(9, edges));
    for (int i = 0; i < 3; ++i) {
        const Vertex r = 3 + 2 * i, b = 4 + 2 * i;
        c.set({pairs[i].u, r}, Colour::red);
        c.set({pairs[i].v, r}, Colour::red);
        c.set({pairs[i].u, b}, Colour::blue);
        c.set({pairs[i].v, b}, Colour::blue);
    }
    return c;
}

/// Total colouring from a colour index per host edge.
inline Colouring from_indices(const Graph& host, const std::vector<int>& colour) {
    Colouring c(host);
    for (std::size_t i = 0; i < colour.size(); ++i) c.set_index(i, static_cast<Colour>(colour[i]));
    return c;
}

} // namespace fixture
