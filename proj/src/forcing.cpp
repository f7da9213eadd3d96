#include "rrg/forcing.hpp"

#include <string>

#include "rrg/error.hpp"

namespace rrg {

bool BaseMap::is_base(Edge pair, Colour c) const {
    const auto it = pairs.find(pair);
    return it != pairs.end() && it->second.is_base(c);
}

BaseMap colour_bases(const Colouring& colouring, const Graph& h, const RootPolicy& policy) {
    if (!colouring.is_total()) throw DomainError("colour_bases: colouring is partial");
    std::vector<Edge> roots;
    if (policy.fixed_root) {
        if (!h.has_edge(*policy.fixed_root))
            throw DomainError("colour_bases: root " + std::to_string(policy.fixed_root->u) + "," +
                              std::to_string(policy.fixed_root->v) + " is not an edge of H");
        roots.push_back(*policy.fixed_root);
    } else {
        roots = h.edges();
    }

    const Graph& host = colouring.host();
    BaseMap bases;
    bases.n = host.vertex_count();
    for (Colour c : kColours) {
        if (!colouring.uses(c)) continue;
        const BitGraph cls(colouring.colour_class(c));
        for (const Edge& root : roots) {
            const Graph pattern = h.without_edge(root);
            for_each_embedding(pattern, cls, [&](std::span<const Vertex> map) {
                const Edge pair(map[static_cast<std::size_t>(root.u)], map[static_cast<std::size_t>(root.v)]);
                BaseEntry& entry = bases.pairs[pair];
                auto& slot = entry.by_colour[index_of(c)];
                if (!slot) slot = BaseWitness{root, std::vector<Vertex>(map.begin(), map.end())};
                return true;
            });
        }
    }
    for (auto& [pair, entry] : bases.pairs) entry.in_host = host.has_edge(pair);
    return bases;
}

std::vector<Edge> forced_pairs(const BaseMap& bases, Colour c) {
    std::vector<Edge> out;
    for (const auto& [pair, entry] : bases.pairs) {
        bool forced = true;
        for (Colour other : kColours)
            if (other != c && !entry.is_base(other)) forced = false;
        if (forced) out.push_back(pair);
    }
    return out;
}

ForcedSet forced_set(const BaseMap& bases, int palette, const Graph& h, int n) {
    palette_colours(palette);
    if (palette == 2)
        for (const auto& [pair, entry] : bases.pairs)
            if (entry.is_base(Colour::green))
                throw DomainError("forced_set: palette 2 but the bases contain green");
    ForcedSet out;
    for (Colour c : kColours) {
        out.pairs[index_of(c)] = forced_pairs(bases, c);
        if (out.pairs[index_of(c)].empty()) continue;
        out.copies[index_of(c)] = find_copies(h, Graph(n, out.pairs[index_of(c)]));
    }
    return out;
}

Json forced_set_to_json(const ForcedSet& forced, const BaseMap& bases, const Graph& h, bool witnesses) {
    (void)h;
    Json pairs = Json::object();
    Json pair_counts = Json::object();
    Json copy_counts = Json::object();
    Json in_host = Json::array();
    for (Colour c : kColours) {
        const std::string name(to_string(c));
        Json list = Json::array();
        for (const Edge& e : forced.pairs[index_of(c)]) {
            list.push_back(Json::array({e.u, e.v}));
            if (bases.pairs.at(e).in_host) in_host.push_back(Json::array({e.u, e.v}));
        }
        pairs[name] = std::move(list);
        pair_counts[name] = forced.pairs[index_of(c)].size();
        copy_counts[name] = forced.copies[index_of(c)].size();
    }
    Json j;
    j["forced_pairs"] = std::move(pairs);
    j["forced_pair_counts"] = std::move(pair_counts);
    j["forced_copy_counts"] = std::move(copy_counts);
    j["forced_pairs_in_host"] = std::move(in_host);
    if (witnesses) {
        Json list = Json::array();
        for (Colour c : kColours) {
            for (const Edge& e : forced.pairs[index_of(c)]) {
                Json per = Json::object();
                for (Colour b : kColours) {
                    const auto& w = bases.pairs.at(e).by_colour[index_of(b)];
                    if (!w) continue;
                    per[std::string(to_string(b))] = Json{{"removed", Json::array({w->removed.u, w->removed.v})}, {"map", w->map}};
                }
                list.push_back(Json{{"forced", std::string(to_string(c))}, {"pair", Json::array({e.u, e.v})}, {"bases", std::move(per)}});
            }
        }
        j["witnesses"] = std::move(list);
        Json copies = Json::object();
        for (Colour c : kColours) {
            Json cl = Json::array();
            for (const Copy& copy : forced.copies[index_of(c)]) {
                Json edges = Json::array();
                for (const Edge& e : copy.edges) edges.push_back(Json::array({e.u, e.v}));
                cl.push_back(std::move(edges));
            }
            copies[std::string(to_string(c))] = std::move(cl);
        }
        j["forced_copies"] = std::move(copies);
    }
    return j;
}

} // namespace rrg
