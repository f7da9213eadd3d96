#include "rrg/colour.hpp"

#include <algorithm>
#include <string>

#include "rrg/error.hpp"

namespace rrg {

std::string_view to_string(Colour c) {
    switch (c) {
    case Colour::red: return "red";
    case Colour::blue: return "blue";
    case Colour::green: return "green";
    }
    return "?";
}

std::optional<Colour> colour_from_string(std::string_view name) {
    for (Colour c : kColours)
        if (to_string(c) == name) return c;
    return std::nullopt;
}

std::span<const Colour> palette_colours(int palette) {
    if (palette != 2 && palette != 3)
        throw DomainError("palette must be 2 or 3, got " + std::to_string(palette));
    return std::span<const Colour>(kColours.data(), static_cast<std::size_t>(palette));
}

Colouring::Colouring(Graph host) : host_(std::move(host)), colours_(static_cast<std::size_t>(host_.edge_count())) {}

std::optional<Colour> Colouring::colour_of(Edge e) const {
    const auto idx = host_.edge_index(e);
    if (!idx) throw DomainError("colouring: " + std::to_string(e.u) + " " + std::to_string(e.v) + " is not a host edge");
    return colours_[*idx];
}

void Colouring::set(Edge e, Colour c) {
    const auto idx = host_.edge_index(e);
    if (!idx) throw DomainError("colouring: " + std::to_string(e.u) + " " + std::to_string(e.v) + " is not a host edge");
    colours_[*idx] = c;
}

bool Colouring::is_total() const {
    return std::all_of(colours_.begin(), colours_.end(), [](const auto& c) { return c.has_value(); });
}

bool Colouring::uses(Colour c) const {
    return std::any_of(colours_.begin(), colours_.end(), [c](const auto& x) { return x == c; });
}

Graph Colouring::colour_class(Colour c) const {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < colours_.size(); ++i)
        if (colours_[i] == c) edges.push_back(host_.edges()[i]);
    return Graph(host_.vertex_count(), std::move(edges));
}

Json colouring_to_json(const Colouring& colouring) {
    Json edges = Json::array();
    const auto& list = colouring.host().edges();
    for (std::size_t i = 0; i < list.size(); ++i) {
        const auto& c = colouring.assignment()[i];
        if (!c) continue;
        edges.push_back(Json{{"u", list[i].u}, {"v", list[i].v}, {"colour", std::string(to_string(*c))}});
    }
    return Json{{"edges", std::move(edges)}};
}

namespace {

struct Entry {
    Edge edge;
    Colour colour;
};

std::vector<Entry> read_entries(const Json& j, int n) {
    if (!j.is_object() || !j.contains("edges") || !j["edges"].is_array())
        throw ParseError("colouring: expected an object with an 'edges' array");
    std::vector<Entry> out;
    for (const auto& item : j["edges"]) {
        if (!item.is_object() || !item.contains("u") || !item.contains("v") || !item.contains("colour") ||
            !item["u"].is_number_integer() || !item["v"].is_number_integer() || !item["colour"].is_string())
            throw ParseError("colouring: bad entry " + item.dump());
        const long u = item["u"].get<long>();
        const long v = item["v"].get<long>();
        if (u < 0 || v < 0 || u >= n || v >= n || u == v) throw ParseError("colouring: bad edge in " + item.dump());
        const auto colour = colour_from_string(item["colour"].get<std::string>());
        if (!colour) throw ParseError("colouring: unknown colour in " + item.dump());
        out.push_back({Edge(static_cast<Vertex>(u), static_cast<Vertex>(v)), *colour});
    }
    return out;
}

} // namespace

Colouring colouring_from_json(const Json& j, const Graph& host) {
    Colouring colouring(host);
    for (const Entry& e : read_entries(j, host.vertex_count())) {
        if (!host.has_edge(e.edge))
            throw ParseError("colouring: " + std::to_string(e.edge.u) + " " + std::to_string(e.edge.v) +
                             " is not an edge of the host graph");
        colouring.set(e.edge, e.colour);
    }
    return colouring;
}

Colouring colouring_from_json(const Json& j, int n) {
    const auto entries = read_entries(j, n);
    std::vector<Edge> edges;
    for (const Entry& e : entries) edges.push_back(e.edge);
    Colouring colouring(Graph(n, std::move(edges)));
    for (const Entry& e : entries) colouring.set(e.edge, e.colour);
    return colouring;
}

} // namespace rrg
