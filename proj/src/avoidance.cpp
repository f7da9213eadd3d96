#include "rrg/avoidance.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <set>

#include "rrg/embedding.hpp"
#include "rrg/error.hpp"

namespace rrg {

std::string_view to_string(SearchVerdict v) {
    switch (v) {
    case SearchVerdict::found: return "found";
    case SearchVerdict::none_exists: return "none_exists";
    case SearchVerdict::unknown: return "unknown";
    }
    return "?";
}

CopyHypergraph build_copy_hypergraph(const Graph& pattern, const Graph& host, const std::vector<Edge>* required) {
    CopyHypergraph hg;
    hg.host = host;
    hg.through.resize(static_cast<std::size_t>(host.edge_count()));
    std::vector<Copy> copies;
    if (required == nullptr) {
        copies = find_copies(pattern, host);
    } else {
        const BitGraph bits(host);
        std::set<Copy> seen;
        for (const Edge& e : *required) {
            if (!host.has_edge(e)) throw DomainError("build_copy_hypergraph: required edge missing from host");
            for (Copy& c : find_copies_through(pattern, bits, e)) seen.insert(std::move(c));
        }
        copies.assign(seen.begin(), seen.end());
    }
    hg.copies.reserve(copies.size());
    for (const Copy& c : copies) {
        std::vector<std::uint32_t> idx;
        idx.reserve(c.edges.size());
        for (const Edge& e : c.edges) idx.push_back(static_cast<std::uint32_t>(*host.edge_index(e)));
        const auto id = static_cast<std::uint32_t>(hg.copies.size());
        for (std::uint32_t e : idx) hg.through[e].push_back(id);
        hg.copies.push_back(std::move(idx));
    }
    return hg;
}

std::vector<std::uint32_t> fail_first_order(const CopyHypergraph& hypergraph, const std::vector<std::uint32_t>& free_edges) {
    std::vector<std::uint32_t> order = free_edges;
    std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        const auto ca = hypergraph.through[a].size();
        const auto cb = hypergraph.through[b].size();
        if (ca != cb) return ca > cb;
        return a < b;
    });
    return order;
}

namespace {

class Solver {
public:
    explicit Solver(const AvoidanceProblem& p) : p_(p), hg_(*p.hypergraph) {
        counts_.assign(hg_.copies.size(), {0, 0, 0});
        uncoloured_.resize(hg_.copies.size());
        for (std::size_t i = 0; i < hg_.copies.size(); ++i) uncoloured_[i] = static_cast<std::uint32_t>(hg_.copies[i].size());
        colours_.assign(hg_.through.size(), std::nullopt);
        allowed_.assign(hg_.through.size(), static_cast<std::uint8_t>((1U << p.palette) - 1U));
    }

    AvoidanceResult run() {
        AvoidanceResult result;
        for (std::size_t e = 0; e < p_.fixed.size(); ++e) {
            if (!p_.fixed[e]) continue;
            const int c = static_cast<int>(*p_.fixed[e]);
            if (conflicts(static_cast<std::uint32_t>(e), c)) {
                result.verdict = SearchVerdict::none_exists;
                return result;
            }
            colour(static_cast<std::uint32_t>(e), c);
        }
        if (p_.propagate && !settle()) {
            result.verdict = SearchVerdict::none_exists;
            return result;
        }
        const bool found = descend(0, max_used_);
        result.nodes = nodes_;
        if (found) {
            result.verdict = SearchVerdict::found;
            result.colours = colours_;
        } else {
            result.verdict = aborted_ ? SearchVerdict::unknown : SearchVerdict::none_exists;
        }
        return result;
    }

private:
    struct Undo {
        enum Kind : std::uint8_t { coloured, narrowed } kind;
        std::uint32_t edge;
        std::uint8_t value; // colour, or the previous allowed mask
    };

    bool conflicts(std::uint32_t e, int c) const {
        for (std::uint32_t copy : hg_.through[e])
            if (counts_[copy][static_cast<std::size_t>(c)] + 1 == hg_.copies[copy].size()) return true;
        return false;
    }

    void colour(std::uint32_t e, int c) {
        for (std::uint32_t copy : hg_.through[e]) {
            ++counts_[copy][static_cast<std::size_t>(c)];
            --uncoloured_[copy];
        }
        colours_[e] = static_cast<Colour>(c);
        max_used_ = std::max(max_used_, c);
        trail_.push_back({Undo::coloured, e, static_cast<std::uint8_t>(c)});
        if (p_.propagate) pending_.push_back(e);
    }

    void undo_to(std::size_t mark) {
        while (trail_.size() > mark) {
            const Undo u = trail_.back();
            trail_.pop_back();
            if (u.kind == Undo::coloured) {
                for (std::uint32_t copy : hg_.through[u.edge]) {
                    --counts_[copy][u.value];
                    ++uncoloured_[copy];
                }
                colours_[u.edge] = std::nullopt;
            } else {
                allowed_[u.edge] = u.value;
            }
        }
        pending_.clear();
    }

    // Narrows domains from copies touched by newly coloured edges; false on a wipe-out.
    bool settle() {
        while (!pending_.empty()) {
            const std::uint32_t e = pending_.back();
            pending_.pop_back();
            for (std::uint32_t copy : hg_.through[e]) {
                if (uncoloured_[copy] != 1) continue;
                const auto& edges = hg_.copies[copy];
                const std::size_t need = edges.size() - 1;
                int c = -1;
                for (int k = 0; k < p_.palette; ++k)
                    if (counts_[copy][static_cast<std::size_t>(k)] == need) c = k;
                if (c < 0) continue;
                std::uint32_t f = 0;
                for (std::uint32_t x : edges)
                    if (!colours_[x]) f = x;
                const auto bit = static_cast<std::uint8_t>(1U << c);
                if (!(allowed_[f] & bit)) continue;
                trail_.push_back({Undo::narrowed, f, allowed_[f]});
                allowed_[f] = static_cast<std::uint8_t>(allowed_[f] & ~bit);
                if (allowed_[f] == 0) return false;
                if (std::has_single_bit(static_cast<unsigned>(allowed_[f]))) {
                    const int only = std::countr_zero(static_cast<unsigned>(allowed_[f]));
                    if (conflicts(f, only)) return false;
                    colour(f, only);
                }
            }
        }
        return true;
    }

    bool descend(std::size_t i, int max_used) {
        while (i < p_.order.size() && colours_[p_.order[i]]) ++i;
        if (i == p_.order.size()) return true;
        const std::uint32_t e = p_.order[i];
        std::vector<int> values;
        if (p_.value_order) {
            values = p_.value_order(e, colours_);
        } else {
            for (int c = 0; c < p_.palette; ++c) values.push_back(c);
        }
        for (int c : values) {
            if (p_.break_colour_symmetry && c > max_used + 1) continue;
            if (!(allowed_[e] & (1U << c))) continue;
            if (++nodes_ > p_.budget) {
                aborted_ = true;
                return false;
            }
            if (conflicts(e, c)) continue;
            const std::size_t mark = trail_.size();
            const int saved_max = max_used_;
            colour(e, c);
            if ((!p_.propagate || settle()) && descend(i + 1, max_used_)) return true;
            undo_to(mark);
            max_used_ = saved_max;
            if (aborted_) return false;
        }
        return false;
    }

    const AvoidanceProblem& p_;
    const CopyHypergraph& hg_;
    std::vector<std::array<std::uint32_t, 3>> counts_;
    std::vector<std::uint32_t> uncoloured_;
    std::vector<std::optional<Colour>> colours_;
    std::vector<std::uint8_t> allowed_;
    std::vector<Undo> trail_;
    std::vector<std::uint32_t> pending_;
    int max_used_ = -1;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
};

} // namespace

AvoidanceResult solve_avoidance(const AvoidanceProblem& problem) {
    if (problem.hypergraph == nullptr) throw DomainError("solve_avoidance: no hypergraph");
    palette_colours(problem.palette);
    return Solver(problem).run();
}

} // namespace rrg
