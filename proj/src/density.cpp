#include "rrg/density.hpp"

#include <bit>
#include <cstdint>

#include "rrg/error.hpp"

namespace rrg {

namespace {

struct Fraction {
    std::int64_t num = 0;
    std::int64_t den = 1;
};

// Same conventions as local_density, on raw counts.
std::optional<Fraction> density_of(int vertices, int edges, DensityKind kind) {
    switch (kind) {
    case DensityKind::plain:
        if (vertices == 0) return std::nullopt;
        return Fraction{edges, vertices};
    case DensityKind::one:
        if (edges == 0) return Fraction{0, 1};
        return Fraction{edges, vertices - 1};
    case DensityKind::two:
        if (edges == 0) return Fraction{0, 1};
        if (vertices == 2) return Fraction{1, 2};
        return Fraction{edges - 1, vertices - 2};
    }
    return std::nullopt;
}

int compare(const Fraction& a, const Fraction& b) {
    const std::int64_t l = a.num * b.den;
    const std::int64_t r = b.num * a.den;
    return l < r ? -1 : (l > r ? 1 : 0);
}

std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(g.vertex_count()), 0);
    for (const Edge& e : g.edges()) {
        adj[static_cast<std::size_t>(e.u)] |= std::uint64_t{1} << e.v;
        adj[static_cast<std::size_t>(e.v)] |= std::uint64_t{1} << e.u;
    }
    return adj;
}

std::vector<Vertex> members(std::uint64_t mask) {
    std::vector<Vertex> out;
    while (mask != 0) {
        out.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return out;
}

// For equal-size sets: a precedes b lexicographically iff the smallest
// element of the symmetric difference lies in a.
bool lex_before(std::uint64_t a, std::uint64_t b) {
    const std::uint64_t diff = a ^ b;
    return diff != 0 && (a & (diff & (~diff + 1))) != 0;
}

void check_cap(const Graph& g, const DensityOptions& options, const char* op) {
    if (g.vertex_count() > options.max_vertices || g.vertex_count() > 62)
        throw BudgetExceeded(std::string(op) + ": " + std::to_string(g.vertex_count()) +
                             " vertices exceed the subset-scan cap of " + std::to_string(options.max_vertices));
}

// Visits every vertex subset (Gray-code order) with its induced edge count.
template <typename Fn>
void for_each_subset(const std::vector<std::uint64_t>& adj, Fn&& fn) {
    const int n = static_cast<int>(adj.size());
    std::uint64_t mask = 0;
    int edges = 0;
    fn(mask, edges);
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t i = 1; i < total; ++i) {
        const int v = std::countr_zero(i);
        const std::uint64_t bit = std::uint64_t{1} << v;
        if (mask & bit) {
            mask ^= bit;
            edges -= std::popcount(adj[static_cast<std::size_t>(v)] & mask);
        } else {
            edges += std::popcount(adj[static_cast<std::size_t>(v)] & mask);
            mask ^= bit;
        }
        fn(mask, edges);
    }
}

} // namespace

std::string to_string(DensityKind kind) {
    switch (kind) {
    case DensityKind::plain: return "m";
    case DensityKind::one: return "m1";
    case DensityKind::two: return "m2";
    }
    return "?";
}

Rational local_density(const Graph& g, DensityKind kind) {
    const auto f = density_of(g.vertex_count(), g.edge_count(), kind);
    if (!f) throw DomainError("local_density: the density d of the 0-vertex graph is undefined");
    return Rational(f->num, f->den);
}

DensityReport max_density(const Graph& g, DensityKind kind, const DensityOptions& options) {
    check_cap(g, options, "max_density");
    const auto adj = adjacency_masks(g);
    bool have = false;
    Fraction best;
    std::uint64_t best_mask = 0;
    for_each_subset(adj, [&](std::uint64_t mask, int edges) {
        const int size = std::popcount(mask);
        const auto f = density_of(size, edges, kind);
        if (!f) return;
        if (!have) {
            have = true;
            best = *f;
            best_mask = mask;
            return;
        }
        const int c = compare(*f, best);
        if (c < 0) return;
        if (c == 0) {
            const int best_size = std::popcount(best_mask);
            if (size > best_size) return;
            if (size == best_size && !lex_before(mask, best_mask)) return;
        }
        best = *f;
        best_mask = mask;
    });
    DensityReport report;
    report.kind = kind;
    if (have) {
        report.value = Rational(best.num, best.den);
        report.witness = members(best_mask);
    }
    return report;
}

BalanceReport balancedness_report(const Graph& g, DensityKind kind, bool strict, const DensityOptions& options) {
    if (g.edge_count() == 0) throw DomainError("balancedness: graph has no edges");
    BalanceReport report;
    report.density = local_density(g, kind);
    const DensityReport max = max_density(g, kind, options);
    if (max.value > report.density) {
        report.counterexample = BalanceCounterexample{max.witness, std::nullopt, max.value};
        return report;
    }
    if (strict) {
        check_cap(g, options, "balancedness");
        const auto adj = adjacency_masks(g);
        const int n = g.vertex_count();
        const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
        const int min_vertices = kind == DensityKind::two ? 3 : 1;
        const Fraction whole{report.density.num(), report.density.den()};
        bool found = false;
        std::uint64_t worst = 0;
        Fraction worst_value;
        for_each_subset(adj, [&](std::uint64_t mask, int edges) {
            const int size = std::popcount(mask);
            if (mask == all || edges == 0 || size < min_vertices) return;
            const auto f = density_of(size, edges, kind);
            if (compare(*f, whole) < 0) return;
            if (found) {
                const int ws = std::popcount(worst);
                if (size > ws || (size == ws && !lex_before(mask, worst))) return;
            }
            found = true;
            worst = mask;
            worst_value = *f;
        });
        if (found) {
            report.counterexample = BalanceCounterexample{members(worst), std::nullopt,
                                                          Rational(worst_value.num, worst_value.den)};
            return report;
        }
        if (n >= min_vertices) {
            for (const Edge& e : g.edges()) {
                const Graph smaller = g.without_edge(e);
                if (smaller.edge_count() == 0) continue;
                const Rational value = local_density(smaller, kind);
                if (value >= report.density) {
                    report.counterexample = BalanceCounterexample{members(all), e, value};
                    return report;
                }
            }
        }
    }
    report.holds = true;
    return report;
}

std::optional<Edge> find_m2_decreasing_edge(const Graph& h, const DensityOptions& options) {
    if (h.edge_count() == 0) throw DomainError("find_m2_decreasing_edge: graph has no edges");
    const Rational m2 = max_density(h, DensityKind::two, options).value;
    for (const Edge& e : h.edges())
        if (max_density(h.without_edge(e), DensityKind::two, options).value < m2) return e;
    return std::nullopt;
}

} // namespace rrg
