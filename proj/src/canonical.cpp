#include "rrg/canonical.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "rrg/error.hpp"

namespace rrg {

namespace {

using Partition = std::vector<std::vector<Vertex>>;

// Splits cells by neighbour counts into every cell until stable. The
// resulting cell order depends only on isomorphism-invariant data.
void refine(const Graph& g, Partition& cells) {
    const std::size_t n = static_cast<std::size_t>(g.vertex_count());
    std::vector<std::size_t> cell_of(n);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t c = 0; c < cells.size(); ++c)
            for (Vertex v : cells[c]) cell_of[static_cast<std::size_t>(v)] = c;
        Partition next;
        next.reserve(cells.size());
        for (const auto& cell : cells) {
            if (cell.size() == 1) {
                next.push_back(cell);
                continue;
            }
            std::vector<std::pair<std::vector<int>, Vertex>> keyed;
            keyed.reserve(cell.size());
            for (Vertex v : cell) {
                std::vector<int> counts(cells.size(), 0);
                for (Vertex w : g.neighbours(v)) ++counts[cell_of[static_cast<std::size_t>(w)]];
                keyed.emplace_back(std::move(counts), v);
            }
            std::sort(keyed.begin(), keyed.end());
            std::size_t start = 0;
            for (std::size_t i = 1; i <= keyed.size(); ++i) {
                if (i == keyed.size() || keyed[i].first != keyed[start].first) {
                    std::vector<Vertex> part;
                    for (std::size_t j = start; j < i; ++j) part.push_back(keyed[j].second);
                    std::sort(part.begin(), part.end());
                    next.push_back(std::move(part));
                    start = i;
                }
            }
        }
        if (next.size() != cells.size()) changed = true;
        cells = std::move(next);
    }
}

std::vector<bool> code_of(const Graph& g, const std::vector<Vertex>& order) {
    const std::size_t n = order.size();
    std::vector<bool> code;
    code.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) code.push_back(g.has_edge(order[i], order[j]));
    return code;
}

struct Search {
    const Graph& g;
    std::vector<bool> best_code;
    std::vector<Vertex> best_order;
    bool have = false;

    void run(Partition cells) {
        refine(g, cells);
        const auto open = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
        if (open == cells.end()) {
            std::vector<Vertex> order;
            for (const auto& c : cells) order.push_back(c.front());
            auto code = code_of(g, order);
            if (!have || code > best_code) {
                best_code = std::move(code);
                best_order = std::move(order);
                have = true;
            }
            return;
        }
        const std::size_t at = static_cast<std::size_t>(open - cells.begin());
        for (Vertex v : cells[at]) {
            Partition child;
            child.reserve(cells.size() + 1);
            child.insert(child.end(), cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(at));
            child.push_back({v});
            std::vector<Vertex> rest;
            for (Vertex w : cells[at])
                if (w != v) rest.push_back(w);
            child.push_back(std::move(rest));
            child.insert(child.end(), cells.begin() + static_cast<std::ptrdiff_t>(at) + 1, cells.end());
            run(std::move(child));
        }
    }
};

} // namespace

Graph canonical_form(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return g;
    Partition start(1);
    for (Vertex v = 0; v < n; ++v) start[0].push_back(v);
    Search search{g, {}, {}, false};
    search.run(std::move(start));
    std::vector<Vertex> position(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < search.best_order.size(); ++i)
        position[static_cast<std::size_t>(search.best_order[i])] = static_cast<Vertex>(i);
    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
        edges.emplace_back(position[static_cast<std::size_t>(e.u)], position[static_cast<std::size_t>(e.v)]);
    return Graph(n, std::move(edges));
}

bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    return canonical_form(a) == canonical_form(b);
}

bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 1) return true;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbours(v))
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == n;
}

std::vector<Graph> all_graphs(int n) {
    if (n < 0) throw DomainError("all_graphs: negative order");
    if (n > 9) throw BudgetExceeded("all_graphs: orders above 9 are not enumerated");
    std::vector<Graph> level{Graph(0)};
    for (int k = 1; k <= n; ++k) {
        std::set<std::vector<Edge>> seen;
        std::vector<Graph> next;
        for (const Graph& base : level) {
            for (unsigned mask = 0; mask < (1U << (k - 1)); ++mask) {
                std::vector<Edge> edges = base.edges();
                for (int v = 0; v < k - 1; ++v)
                    if (mask & (1U << v)) edges.emplace_back(v, k - 1);
                Graph canon = canonical_form(Graph(k, std::move(edges)));
                if (seen.insert(canon.edges()).second) next.push_back(std::move(canon));
            }
        }
        level = std::move(next);
    }
    std::sort(level.begin(), level.end(), [](const Graph& a, const Graph& b) {
        if (a.edge_count() != b.edge_count()) return a.edge_count() < b.edge_count();
        return a.edges() < b.edges();
    });
    return level;
}

} // namespace rrg
