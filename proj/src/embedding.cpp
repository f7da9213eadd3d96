#include "rrg/embedding.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <string>

#include "rrg/error.hpp"

namespace rrg {

namespace {

class Matcher {
public:
    Matcher(const Graph& pattern, const BitGraph& host, std::span<const Pin> pins)
        : pattern_(pattern), host_(host), words_(host.words()) {
        const int k = pattern.vertex_count();
        map_.assign(static_cast<std::size_t>(k), -1);
        used_.assign(words_, 0);
        candidates_.assign(static_cast<std::size_t>(k) * words_, 0);
        build_order(pins);
    }

    bool run(const EmbeddingVisitor& visit) {
        if (pattern_.vertex_count() > host_.vertex_count()) return true;
        for (const Pin& pin : pins_) {
            if (pin.host < 0 || pin.host >= host_.vertex_count()) return true;
            if (is_used(pin.host)) return true;
            map_[static_cast<std::size_t>(pin.pattern)] = pin.host;
            mark(pin.host, true);
        }
        // Pins must already respect the pattern edges among themselves.
        for (const Pin& a : pins_)
            for (Vertex b : pattern_.neighbours(a.pattern)) {
                const Vertex hb = map_[static_cast<std::size_t>(b)];
                if (hb >= 0 && !host_.has_edge(a.host, hb)) return true;
            }
        return extend(pins_.size(), visit);
    }

private:
    void build_order(std::span<const Pin> pins) {
        const int k = pattern_.vertex_count();
        std::vector<char> placed(static_cast<std::size_t>(k), 0);
        for (const Pin& pin : pins) {
            if (pin.pattern < 0 || pin.pattern >= k) throw DomainError("embedding: pin outside pattern");
            if (placed[static_cast<std::size_t>(pin.pattern)]) throw DomainError("embedding: pattern vertex pinned twice");
            placed[static_cast<std::size_t>(pin.pattern)] = 1;
            pins_.push_back(pin);
            order_.push_back(pin.pattern);
        }
        std::vector<int> placed_nbrs(static_cast<std::size_t>(k), 0);
        for (Vertex v : order_)
            for (Vertex w : pattern_.neighbours(v)) ++placed_nbrs[static_cast<std::size_t>(w)];
        while (static_cast<int>(order_.size()) < k) {
            Vertex best = -1;
            for (Vertex v = 0; v < k; ++v) {
                if (placed[static_cast<std::size_t>(v)]) continue;
                if (best < 0) {
                    best = v;
                    continue;
                }
                const auto key = [&](Vertex x) {
                    return std::pair{placed_nbrs[static_cast<std::size_t>(x)], pattern_.degree(x)};
                };
                if (key(v) > key(best)) best = v;
            }
            placed[static_cast<std::size_t>(best)] = 1;
            order_.push_back(best);
            for (Vertex w : pattern_.neighbours(best)) ++placed_nbrs[static_cast<std::size_t>(w)];
        }
        // For each position, the pattern neighbours placed earlier.
        std::vector<int> position(static_cast<std::size_t>(k), 0);
        for (std::size_t i = 0; i < order_.size(); ++i) position[static_cast<std::size_t>(order_[i])] = static_cast<int>(i);
        earlier_.resize(order_.size());
        for (std::size_t i = 0; i < order_.size(); ++i)
            for (Vertex w : pattern_.neighbours(order_[i]))
                if (position[static_cast<std::size_t>(w)] < static_cast<int>(i)) earlier_[i].push_back(w);
    }

    bool is_used(Vertex h) const { return (used_[static_cast<std::size_t>(h) >> 6] >> (h & 63)) & 1U; }
    void mark(Vertex h, bool on) {
        const std::uint64_t bit = std::uint64_t{1} << (h & 63);
        if (on)
            used_[static_cast<std::size_t>(h) >> 6] |= bit;
        else
            used_[static_cast<std::size_t>(h) >> 6] &= ~bit;
    }

    bool extend(std::size_t depth, const EmbeddingVisitor& visit) {
        if (depth == order_.size()) return visit(map_);
        const Vertex pv = order_[depth];
        const int need = pattern_.degree(pv);
        std::uint64_t* cand = candidates_.data() + depth * words_;
        const auto& back = earlier_[depth];
        if (back.empty()) {
            std::fill(cand, cand + words_, ~std::uint64_t{0});
            const int tail = host_.vertex_count() & 63;
            if (tail != 0) cand[words_ - 1] = (std::uint64_t{1} << tail) - 1;
        } else {
            const std::uint64_t* first = host_.row(map_[static_cast<std::size_t>(back[0])]);
            std::copy(first, first + words_, cand);
            for (std::size_t i = 1; i < back.size(); ++i) {
                const std::uint64_t* r = host_.row(map_[static_cast<std::size_t>(back[i])]);
                for (std::size_t w = 0; w < words_; ++w) cand[w] &= r[w];
            }
        }
        for (std::size_t w = 0; w < words_; ++w) {
            std::uint64_t bits = cand[w] & ~used_[w];
            while (bits != 0) {
                const Vertex h = static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
                bits &= bits - 1;
                if (host_.degree(h) < need) continue;
                map_[static_cast<std::size_t>(pv)] = h;
                mark(h, true);
                const bool go_on = extend(depth + 1, visit);
                mark(h, false);
                map_[static_cast<std::size_t>(pv)] = -1;
                if (!go_on) return false;
            }
        }
        return true;
    }

    const Graph& pattern_;
    const BitGraph& host_;
    std::size_t words_;
    std::vector<Pin> pins_;
    std::vector<Vertex> order_;
    std::vector<std::vector<Vertex>> earlier_;
    std::vector<Vertex> map_;
    std::vector<std::uint64_t> used_;
    std::vector<std::uint64_t> candidates_;
};

void collect(const Graph& pattern, const BitGraph& host, std::span<const Pin> pins, std::set<Copy>& seen) {
    for_each_embedding(
        pattern, host,
        [&](std::span<const Vertex> map) {
            seen.insert(image_of(pattern, map));
            return true;
        },
        pins);
}

} // namespace

bool for_each_embedding(const Graph& pattern, const BitGraph& host, const EmbeddingVisitor& visit,
                        std::span<const Pin> pins) {
    Matcher matcher(pattern, host, pins);
    return matcher.run(visit);
}

Copy image_of(const Graph& pattern, std::span<const Vertex> map) {
    Copy c;
    c.vertices.assign(map.begin(), map.end());
    std::sort(c.vertices.begin(), c.vertices.end());
    c.edges.reserve(pattern.edges().size());
    for (const Edge& e : pattern.edges())
        c.edges.emplace_back(map[static_cast<std::size_t>(e.u)], map[static_cast<std::size_t>(e.v)]);
    std::sort(c.edges.begin(), c.edges.end());
    return c;
}

std::vector<Copy> find_copies(const Graph& pattern, const BitGraph& host) {
    std::set<Copy> seen;
    collect(pattern, host, {}, seen);
    return {seen.begin(), seen.end()};
}

std::vector<Copy> find_copies(const Graph& pattern, const Graph& host) { return find_copies(pattern, BitGraph(host)); }

bool contains_copy(const Graph& pattern, const BitGraph& host) {
    return !for_each_embedding(pattern, host, [](std::span<const Vertex>) { return false; });
}

namespace {

// Every way of mapping some pattern edge onto `through`.
template <typename Fn>
bool for_each_pinning(const Graph& pattern, Edge through, Fn&& fn) {
    for (const Edge& pe : pattern.edges()) {
        const Pin a[2] = {{pe.u, through.u}, {pe.v, through.v}};
        if (!fn(std::span<const Pin>(a, 2))) return false;
        const Pin b[2] = {{pe.u, through.v}, {pe.v, through.u}};
        if (!fn(std::span<const Pin>(b, 2))) return false;
    }
    return true;
}

} // namespace

std::vector<Copy> find_copies_through(const Graph& pattern, const BitGraph& host, Edge through) {
    std::set<Copy> seen;
    for_each_pinning(pattern, through, [&](std::span<const Pin> pins) {
        collect(pattern, host, pins, seen);
        return true;
    });
    return {seen.begin(), seen.end()};
}

bool contains_copy_through(const Graph& pattern, const BitGraph& host, Edge through) {
    return !for_each_pinning(pattern, through, [&](std::span<const Pin> pins) {
        return for_each_embedding(pattern, host, [](std::span<const Vertex>) { return false; }, pins);
    });
}

namespace {

class ExactPacker {
public:
    ExactPacker(std::vector<std::vector<std::size_t>> copies, std::size_t host_edges, std::size_t pattern_edges)
        : copies_(std::move(copies)), pattern_edges_(pattern_edges), state_(host_edges, Free),
          by_edge_(host_edges) {
        for (std::size_t c = 0; c < copies_.size(); ++c)
            for (std::size_t e : copies_[c]) by_edge_[e].push_back(c);
    }

    std::vector<std::size_t> solve() {
        search();
        return best_;
    }

private:
    enum EdgeState : char { Free, Used, Blocked };

    bool available(std::size_t c) const {
        return std::all_of(copies_[c].begin(), copies_[c].end(), [&](std::size_t e) { return state_[e] == Free; });
    }

    void search() {
        // Free edges that some still-available copy could use.
        std::size_t live_edges = 0;
        std::size_t branch_edge = state_.size();
        for (std::size_t e = 0; e < state_.size(); ++e) {
            if (state_[e] != Free) continue;
            const bool live = std::any_of(by_edge_[e].begin(), by_edge_[e].end(), [&](std::size_t c) { return available(c); });
            if (!live) continue;
            ++live_edges;
            if (branch_edge == state_.size()) branch_edge = e;
        }
        if (chosen_.size() > best_.size()) best_ = chosen_;
        if (branch_edge == state_.size()) return;
        if (chosen_.size() + live_edges / pattern_edges_ <= best_.size()) return;

        for (std::size_t c : by_edge_[branch_edge]) {
            if (!available(c)) continue;
            for (std::size_t e : copies_[c]) state_[e] = Used;
            chosen_.push_back(c);
            search();
            chosen_.pop_back();
            for (std::size_t e : copies_[c]) state_[e] = Free;
        }
        state_[branch_edge] = Blocked;
        search();
        state_[branch_edge] = Free;
    }

    std::vector<std::vector<std::size_t>> copies_;
    std::size_t pattern_edges_;
    std::vector<EdgeState> state_;
    std::vector<std::vector<std::size_t>> by_edge_;
    std::vector<std::size_t> chosen_;
    std::vector<std::size_t> best_;
};

} // namespace

CopyPacking max_edge_disjoint_copies(const Graph& pattern, const Graph& host, PackingMode mode,
                                     const PackingOptions& options) {
    if (pattern.edge_count() == 0) throw DomainError("max_edge_disjoint_copies: pattern has no edges");
    std::vector<Copy> copies = find_copies(pattern, host);
    CopyPacking packing;
    if (mode == PackingMode::greedy) {
        std::vector<char> taken(static_cast<std::size_t>(host.edge_count()), 0);
        for (Copy& c : copies) {
            std::vector<std::size_t> idx;
            for (const Edge& e : c.edges) idx.push_back(*host.edge_index(e));
            if (std::any_of(idx.begin(), idx.end(), [&](std::size_t i) { return taken[i] != 0; })) continue;
            for (std::size_t i : idx) taken[i] = 1;
            packing.copies.push_back(std::move(c));
        }
        return packing;
    }
    if (copies.size() > options.copy_cap)
        throw BudgetExceeded("max_edge_disjoint_copies: " + std::to_string(copies.size()) +
                             " copies exceed the exact-mode cap of " + std::to_string(options.copy_cap) +
                             "; use greedy mode");
    std::vector<std::vector<std::size_t>> as_indices;
    as_indices.reserve(copies.size());
    for (const Copy& c : copies) {
        std::vector<std::size_t> idx;
        for (const Edge& e : c.edges) idx.push_back(*host.edge_index(e));
        as_indices.push_back(std::move(idx));
    }
    ExactPacker packer(std::move(as_indices), static_cast<std::size_t>(host.edge_count()),
                       static_cast<std::size_t>(pattern.edge_count()));
    std::vector<std::size_t> best = packer.solve();
    std::sort(best.begin(), best.end());
    for (std::size_t c : best) packing.copies.push_back(copies[c]);
    return packing;
}

} // namespace rrg
