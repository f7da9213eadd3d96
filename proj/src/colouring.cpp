#include "rrg/colouring.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "rrg/canonical.hpp"
#include "rrg/density.hpp"
#include "rrg/error.hpp"

namespace rrg {

std::vector<Copy> monochromatic_copies(const Colouring& colouring, const Graph& h, Colour c) {
    if (!colouring.is_total()) throw DomainError("monochromatic_copies: colouring is partial");
    return find_copies(h, colouring.colour_class(c));
}

bool is_monochromatic_free(const Colouring& colouring, const Graph& h) {
    for (Colour c : kColours)
        if (contains_copy(h, BitGraph(colouring.colour_class(c)))) return false;
    return true;
}

ColouringSearchResult search_h_free_colouring(const Graph& g, const Graph& h, int r, std::int64_t budget) {
    palette_colours(r);
    if (h.edge_count() < 2) throw DomainError("search_h_free_colouring: pattern needs at least 2 edges");
    if (budget <= 0) throw DomainError("search_h_free_colouring: budget must be positive");
    const CopyHypergraph hg = build_copy_hypergraph(h, g);
    std::vector<std::uint32_t> free(static_cast<std::size_t>(g.edge_count()));
    for (std::size_t i = 0; i < free.size(); ++i) free[i] = static_cast<std::uint32_t>(i);

    AvoidanceProblem problem;
    problem.hypergraph = &hg;
    problem.palette = r;
    problem.order = fail_first_order(hg, free);
    problem.budget = static_cast<std::uint64_t>(budget);
    problem.break_colour_symmetry = true;
    const AvoidanceResult solved = solve_avoidance(problem);

    ColouringSearchResult result;
    result.verdict = solved.verdict;
    result.nodes = solved.nodes;
    if (solved.verdict == SearchVerdict::found) {
        Colouring colouring(g);
        for (std::size_t i = 0; i < solved.colours.size(); ++i) colouring.set_index(i, *solved.colours[i]);
        result.colouring = std::move(colouring);
    }
    return result;
}

Colouring greedy_third_colour_extension(const Colouring& colouring, std::span<const Edge> new_edges, const Graph& h) {
    const Graph& g = colouring.host();
    if (!colouring.is_total()) throw DomainError("greedy_third_colour_extension: colouring is partial");
    if (colouring.uses(Colour::green))
        throw DomainError("greedy_third_colour_extension: colouring already uses green, no free colour");
    for (const Edge& e : new_edges)
        if (g.has_edge(e))
            throw DomainError("greedy_third_colour_extension: new edge " + std::to_string(e.u) + " " +
                              std::to_string(e.v) + " is already in the graph");

    Colouring out(g.with_edges(new_edges));
    for (std::size_t i = 0; i < g.edges().size(); ++i) out.set(g.edges()[i], *colouring.assignment()[i]);
    BitGraph green(g.vertex_count());
    for (const Edge& e : new_edges) {
        green.add_edge(e.u, e.v);
        if (contains_copy_through(h, green, e)) {
            green.remove_edge(e.u, e.v);
            out.set(e, Colour::red);
        } else {
            out.set(e, Colour::green);
        }
    }
    return out;
}

std::optional<Colouring> adversarial_greedy_colouring(const Graph& g, const Graph& h, int palette, std::int64_t budget) {
    if (budget <= 0) throw DomainError("adversarial_greedy_colouring: budget must be positive");
    const auto colours = palette_colours(palette);
    if (g.edge_count() == 0) return Colouring(g);
    std::vector<Graph> near;
    std::set<std::vector<Edge>> seen;
    for (const Edge& e : h.edges()) {
        Graph minus = h.without_edge(e);
        if (minus.edge_count() == 0) continue;
        if (seen.insert(canonical_form(minus).edges()).second) near.push_back(std::move(minus));
    }

    const CopyHypergraph hg = build_copy_hypergraph(h, g);
    AvoidanceProblem problem;
    problem.hypergraph = &hg;
    problem.palette = palette;
    for (std::uint32_t i = 0; i < static_cast<std::uint32_t>(g.edge_count()); ++i) problem.order.push_back(i);
    problem.budget = static_cast<std::uint64_t>(budget);
    problem.value_order = [&](std::uint32_t index, const std::vector<std::optional<Colour>>& current) {
        std::vector<BitGraph> classes(colours.size(), BitGraph(g.vertex_count()));
        for (std::size_t i = 0; i < current.size(); ++i)
            if (current[i]) classes[index_of(*current[i])].add_edge(g.edges()[i].u, g.edges()[i].v);
        const Edge e = g.edges()[index];
        std::vector<std::pair<std::size_t, int>> scored;
        for (std::size_t c = 0; c < colours.size(); ++c) {
            BitGraph& cls = classes[c];
            cls.add_edge(e.u, e.v);
            std::set<Copy> created;
            for (const Graph& p : near)
                for (Copy& copy : find_copies_through(p, cls, e)) created.insert(std::move(copy));
            scored.emplace_back(created.size(), static_cast<int>(c));
        }
        std::sort(scored.begin(), scored.end());
        std::vector<int> order;
        for (const auto& [score, c] : scored) order.push_back(c);
        return order;
    };
    const AvoidanceResult solved = solve_avoidance(problem);
    if (solved.verdict != SearchVerdict::found) return std::nullopt;
    Colouring out(g);
    for (std::size_t i = 0; i < solved.colours.size(); ++i) out.set_index(i, *solved.colours[i]);
    return out;
}

namespace {

std::vector<char> touched(const Graph& g, int n) {
    std::vector<char> t(static_cast<std::size_t>(n), 0);
    for (const Edge& e : g.edges()) t[static_cast<std::size_t>(e.u)] = t[static_cast<std::size_t>(e.v)] = 1;
    return t;
}

Json edge_json(const Edge& e) { return Json::array({e.u, e.v}); }

Json edges_json(const std::vector<Edge>& edges) {
    Json out = Json::array();
    for (const Edge& e : edges) out.push_back(edge_json(e));
    return out;
}

ForcingReport violation(ForcingReport report, int condition, std::string detail, Json witness) {
    report.holds = false;
    report.violated_condition = condition;
    report.detail = std::move(detail);
    report.witness = std::move(witness);
    return report;
}

bool lex_before(std::uint64_t a, std::uint64_t b) {
    const std::uint64_t diff = a ^ b;
    return diff != 0 && (a & (diff & (~diff + 1))) != 0;
}

} // namespace

ForcingReport check_forcing_structure(const Graph& h, const ForcingStructure& s, const ForcingOptions& options) {
    ForcingReport report;
    int n = std::max(s.f_red.vertex_count(), s.f_blue.vertex_count());
    for (const Edge& m : s.matching) n = std::max(n, m.v + 1);
    const Graph red(n, s.f_red.edges());
    const Graph blue(n, s.f_blue.edges());

    // (i)
    std::vector<char> in_m(static_cast<std::size_t>(n), 0);
    for (const Edge& m : s.matching) {
        if (m.u == m.v || m.u < 0)
            return violation(report, 1, "matching contains an invalid pair", edge_json(m));
        for (Vertex x : {m.u, m.v}) {
            if (in_m[static_cast<std::size_t>(x)])
                return violation(report, 1, "M is not a matching: vertex " + std::to_string(x) + " is covered twice",
                                 Json{{"vertex", x}});
            in_m[static_cast<std::size_t>(x)] = 1;
        }
    }
    for (const auto& [graph, name] : {std::pair{&red, "F_red"}, std::pair{&blue, "F_blue"}})
        for (const Edge& e : graph->edges())
            if (in_m[static_cast<std::size_t>(e.u)] && in_m[static_cast<std::size_t>(e.v)])
                return violation(report, 1, std::string("V(M) is not independent in ") + name,
                                 Json{{"graph", name}, {"edge", edge_json(e)}});
    const auto red_touched = touched(red, n);
    const auto blue_touched = touched(blue, n);
    for (Vertex x = 0; x < n; ++x)
        if (red_touched[static_cast<std::size_t>(x)] && blue_touched[static_cast<std::size_t>(x)] &&
            !in_m[static_cast<std::size_t>(x)])
            return violation(report, 1, "vertex " + std::to_string(x) + " lies in both F_red and F_blue but not in V(M)",
                             Json{{"vertex", x}});

    // Union restricted to its vertex set V(M) u V(F_red) u V(F_blue).
    std::vector<Vertex> support;
    for (Vertex x = 0; x < n; ++x)
        if (in_m[static_cast<std::size_t>(x)] || red_touched[static_cast<std::size_t>(x)] ||
            blue_touched[static_cast<std::size_t>(x)])
            support.push_back(x);
    const Graph joined = red.with_edges(blue.edges());
    const Graph u = induced_subgraph(joined, support);

    // (ii)
    report.m2_pattern = max_density(h, DensityKind::two).value;
    const DensityReport m2u = max_density(u, DensityKind::two, DensityOptions{options.max_union_vertices});
    report.m2_union = m2u.value;
    if (!(report.m2_pattern > report.m2_union)) {
        std::vector<Vertex> witness;
        for (Vertex w : m2u.witness) witness.push_back(support[static_cast<std::size_t>(w)]);
        return violation(report, 2,
                         "m2(H) = " + report.m2_pattern.str() + " is not greater than m2(F_red u F_blue) = " +
                             report.m2_union.str(),
                         Json{{"vertices", witness}, {"m2", report.m2_union.str()}});
    }

    // (iii): scan J induced on V(M) u T for every T of the remaining support.
    std::vector<int> local_m;
    std::vector<int> local_free;
    for (std::size_t i = 0; i < support.size(); ++i)
        (in_m[static_cast<std::size_t>(support[i])] ? local_m : local_free).push_back(static_cast<int>(i));
    if (static_cast<int>(local_free.size()) > options.max_free_vertices || support.size() > 62)
        throw BudgetExceeded("check_forcing_structure: " + std::to_string(local_free.size()) +
                             " vertices outside V(M) exceed the scan cap of " + std::to_string(options.max_free_vertices));
    std::vector<std::uint64_t> adj(support.size(), 0);
    for (const Edge& e : u.edges()) {
        adj[static_cast<std::size_t>(e.u)] |= std::uint64_t{1} << e.v;
        adj[static_cast<std::size_t>(e.v)] |= std::uint64_t{1} << e.u;
    }
    std::uint64_t base = 0;
    for (int i : local_m) base |= std::uint64_t{1} << i;
    int edges = 0;
    for (int i : local_m) edges += std::popcount(adj[static_cast<std::size_t>(i)] & base);
    edges /= 2;
    const std::int64_t num = report.m2_pattern.num();
    const std::int64_t den = report.m2_pattern.den();
    std::uint64_t mask = base;
    bool bad = false;
    std::uint64_t worst = 0;
    std::int64_t worst_e = 0, worst_t = 1;
    bool tight = false;
    std::uint64_t tight_mask = 0;
    const auto consider = [&](std::uint64_t m, int e) {
        if (e < 1) return;
        const int t = std::popcount(m) - static_cast<int>(local_m.size());
        const std::int64_t lhs = static_cast<std::int64_t>(e) * den;
        const std::int64_t rhs = num * t;
        if (lhs > rhs) {
            // keep the largest ratio, then smallest set, then lexicographically first
            if (bad) {
                const std::int64_t a = static_cast<std::int64_t>(e) * worst_t;
                const std::int64_t b = worst_e * t;
                if (a < b) return;
                if (a == b) {
                    const int sw = std::popcount(worst);
                    const int sm = std::popcount(m);
                    if (sm > sw || (sm == sw && !lex_before(m, worst))) return;
                }
            }
            bad = true;
            worst = m;
            worst_e = e;
            worst_t = t;
        } else if (lhs == rhs) {
            if (tight) {
                const int sw = std::popcount(tight_mask);
                const int sm = std::popcount(m);
                if (sm > sw || (sm == sw && !lex_before(m, tight_mask))) return;
            }
            tight = true;
            tight_mask = m;
        }
    };
    consider(mask, edges);
    const std::uint64_t total = std::uint64_t{1} << local_free.size();
    for (std::uint64_t i = 1; i < total; ++i) {
        const int v = local_free[static_cast<std::size_t>(std::countr_zero(i))];
        const std::uint64_t bit = std::uint64_t{1} << v;
        if (mask & bit) {
            mask ^= bit;
            edges -= std::popcount(adj[static_cast<std::size_t>(v)] & mask);
        } else {
            edges += std::popcount(adj[static_cast<std::size_t>(v)] & mask);
            mask ^= bit;
        }
        consider(mask, edges);
    }
    const auto to_labels = [&](std::uint64_t m) {
        std::vector<Vertex> out;
        while (m != 0) {
            out.push_back(support[static_cast<std::size_t>(std::countr_zero(m))]);
            m &= m - 1;
        }
        return out;
    };
    if (tight) {
        report.iii_tight = true;
        report.iii_tight_witness = to_labels(tight_mask);
    }
    if (bad) {
        const Rational ratio(worst_e, worst_t);
        return violation(report, 3,
                         "e(J)/(v(J)-v(M)) = " + ratio.str() + " exceeds m2(H) = " + report.m2_pattern.str(),
                         Json{{"vertices", to_labels(worst)}, {"ratio", ratio.str()}});
    }

    // (iv)
    if (static_cast<int>(s.matching.size()) > options.max_matching)
        throw BudgetExceeded("check_forcing_structure: matching of size " + std::to_string(s.matching.size()) +
                             " exceeds the partition cap of " + std::to_string(options.max_matching));
    const std::uint64_t partitions = std::uint64_t{1} << s.matching.size();
    for (std::uint64_t p = 0; p < partitions; ++p) {
        std::vector<Edge> m_red, m_blue;
        for (std::size_t i = 0; i < s.matching.size(); ++i)
            ((p >> i) & 1U ? m_red : m_blue).push_back(s.matching[i]);
        const bool red_ok = contains_copy(h, BitGraph(red.with_edges(m_red)));
        const bool blue_ok = red_ok || contains_copy(h, BitGraph(blue.with_edges(m_blue)));
        if (!red_ok && !blue_ok)
            return violation(report, 4, "H is in neither F_red u M_red nor F_blue u M_blue",
                             Json{{"M_red", edges_json(m_red)}, {"M_blue", edges_json(m_blue)}});
    }

    report.holds = true;
    report.detail = "conditions (i)-(iv) hold";
    return report;
}

Json forcing_report_to_json(const ForcingReport& report) {
    static const char* names[] = {"", "(i)", "(ii)", "(iii)", "(iv)"};
    Json j;
    j["holds"] = report.holds;
    j["violated_condition"] = report.violated_condition ? Json(names[*report.violated_condition]) : Json(nullptr);
    j["detail"] = report.detail;
    j["witness"] = report.witness;
    j["m2_H"] = report.m2_pattern.str();
    j["m2_union"] = report.m2_union.str();
    j["iii_tight"] = report.iii_tight;
    j["iii_tight_witness"] = report.iii_tight_witness;
    return j;
}

} // namespace rrg
