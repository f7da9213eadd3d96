#pragma once

// Slow reference implementations. They share no code with the library beyond
// the Graph/Edge value types, so agreement is evidence rather than tautology.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "rrg/graph.hpp"

namespace oracle {

using rrg::Edge;
using rrg::Graph;
using rrg::Vertex;

inline bool adjacent(const Graph& g, int a, int b) {
    for (const Edge& e : g.edges())
        if ((e.u == a && e.v == b) || (e.u == b && e.v == a)) return true;
    return false;
}

/// Unlabelled copies as sorted edge lists, by trying every ordered choice of host vertices.
inline std::set<std::vector<Edge>> copies(const Graph& pattern, const Graph& host) {
    std::set<std::vector<Edge>> out;
    const int k = pattern.vertex_count();
    const int n = host.vertex_count();
    if (k > n) return out;
    std::vector<int> pick(static_cast<std::size_t>(n), 0);
    std::fill(pick.end() - k, pick.end(), 1);
    do {
        std::vector<int> chosen;
        for (int i = 0; i < n; ++i)
            if (pick[static_cast<std::size_t>(i)]) chosen.push_back(i);
        do {
            bool ok = true;
            std::vector<Edge> image;
            for (const Edge& e : pattern.edges()) {
                const int a = chosen[static_cast<std::size_t>(e.u)], b = chosen[static_cast<std::size_t>(e.v)];
                if (!adjacent(host, a, b)) {
                    ok = false;
                    break;
                }
                image.emplace_back(a, b);
            }
            if (ok) {
                std::sort(image.begin(), image.end());
                out.insert(image);
            }
        } while (std::next_permutation(chosen.begin(), chosen.end()));
    } while (std::next_permutation(pick.begin(), pick.end()));
    return out;
}

/// Fraction as (num, den) with den > 0, compared by cross-multiplication.
struct Frac {
    long long num = 0;
    long long den = 1;
    friend bool operator<(Frac a, Frac b) { return a.num * b.den < b.num * a.den; }
    friend bool operator==(Frac a, Frac b) { return a.num * b.den == b.num * a.den; }
};

inline Frac density(long long v, long long e, int kind) {
    if (kind == 0) return {e, v};
    if (e == 0) return {0, 1};
    if (kind == 1) return {e, v - 1};
    if (v == 2) return {1, 2};
    return {e - 1, v - 2};
}

/// Max over all (not only induced) subgraphs given by an edge subset and the
/// vertices it spans, plus single isolated vertices for kind 0.
inline Frac max_density_all_subgraphs(const Graph& g, int kind) {
    const auto& edges = g.edges();
    Frac best = kind == 0 && g.vertex_count() > 0 ? Frac{0, 1} : Frac{0, 1};
    const std::uint32_t limit = 1U << edges.size();
    for (std::uint32_t mask = 1; mask < limit; ++mask) {
        std::set<int> vs;
        long long e = 0;
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (mask >> i & 1U) {
                vs.insert(edges[i].u);
                vs.insert(edges[i].v);
                ++e;
            }
        const Frac d = density(static_cast<long long>(vs.size()), e, kind);
        if (best < d) best = d;
    }
    return best;
}

/// Strict balancedness by scanning every subgraph given as an edge subset on a
/// vertex subset (isolated vertices included). For kind 2 the strict comparison
/// covers subgraphs on at least 3 vertices; a lone edge only has to be no denser.
inline bool strictly_balanced_all_subgraphs(const Graph& g, int kind) {
    const int n = g.vertex_count();
    const Frac whole = density(n, g.edge_count(), kind);
    if (whole < max_density_all_subgraphs(g, kind)) return false;
    for (std::uint32_t vmask = 1; vmask < (1U << n); ++vmask) {
        std::vector<Edge> inside;
        for (const Edge& e : g.edges())
            if ((vmask >> e.u & 1U) && (vmask >> e.v & 1U)) inside.push_back(e);
        const int v = __builtin_popcount(vmask);
        for (std::uint32_t emask = 1; emask < (1U << inside.size()); ++emask) {
            const int e = __builtin_popcount(emask);
            if (v == n && e == g.edge_count()) continue;
            if (kind == 2 && v < 3) continue;
            if (!(density(v, e, kind) < whole)) return false;
        }
    }
    return true;
}

/// Whether the K3-free 2-colouring/3-colouring question has a solution, by
/// trying every assignment of colours to the host edges.
template <class Pred>
bool any_assignment(std::size_t edges, int palette, Pred&& ok) {
    std::vector<int> colour(edges, 0);
    while (true) {
        if (ok(colour)) return true;
        std::size_t i = 0;
        while (i < edges && ++colour[i] == palette) colour[i++] = 0;
        if (i == edges) return false;
    }
}

/// Monochromatic copy of pattern under a full colour vector (host edge order).
inline bool has_monochromatic(const Graph& pattern, const Graph& host, const std::vector<int>& colour, int palette) {
    for (int c = 0; c < palette; ++c) {
        std::vector<Edge> cls;
        for (std::size_t i = 0; i < host.edges().size(); ++i)
            if (colour[i] == c) cls.push_back(host.edges()[i]);
        if (!copies(pattern, Graph(host.vertex_count(), cls)).empty()) return true;
    }
    return false;
}

inline Graph random_graph(int n, double p, std::mt19937& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return Graph(n, edges);
}

inline Graph relabel(const Graph& g, const std::vector<int>& perm) {
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) edges.emplace_back(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]);
    return Graph(g.vertex_count(), edges);
}

inline std::vector<int> random_permutation(int n, std::mt19937& rng) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

} // namespace oracle
