#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "rrg/graph.hpp"
#include "rrg/json.hpp"

namespace rrg {

enum class Colour : std::uint8_t { red = 0, blue = 1, green = 2 };

inline constexpr std::array<Colour, 3> kColours{Colour::red, Colour::blue, Colour::green};

std::string_view to_string(Colour c);
std::optional<Colour> colour_from_string(std::string_view name);

inline std::size_t index_of(Colour c) { return static_cast<std::size_t>(c); }

/// The first `palette` colours (2: red, blue; 3: red, blue, green).
/// Throws DomainError for any other palette size.
std::span<const Colour> palette_colours(int palette);

/// Partial or total assignment of host edges to colours, stored in host edge order.
class Colouring {
public:
    Colouring() = default;
    explicit Colouring(Graph host);

    const Graph& host() const { return host_; }
    const std::vector<std::optional<Colour>>& assignment() const { return colours_; }

    /// Throws DomainError when e is not a host edge.
    std::optional<Colour> colour_of(Edge e) const;
    void set(Edge e, Colour c);
    void set_index(std::size_t edge_index, Colour c) { colours_.at(edge_index) = c; }

    bool is_total() const;
    bool uses(Colour c) const;
    /// Graph on the host's vertices with exactly the edges coloured c.
    Graph colour_class(Colour c) const;

    friend bool operator==(const Colouring&, const Colouring&) = default;

private:
    Graph host_;
    std::vector<std::optional<Colour>> colours_;
};

/// {"edges": [{"u":int,"v":int,"colour":"red|blue|green"}]} in host edge order;
/// uncoloured edges are omitted.
Json colouring_to_json(const Colouring& colouring);
/// Every listed edge must be a host edge. Throws ParseError otherwise.
Colouring colouring_from_json(const Json& j, const Graph& host);
/// Host is taken to be exactly the listed edges on n vertices.
Colouring colouring_from_json(const Json& j, int n);

} // namespace rrg
