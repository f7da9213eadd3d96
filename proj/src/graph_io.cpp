#include "rrg/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "rrg/error.hpp"

namespace rrg {

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        if (j > i) tokens.push_back(line.substr(i, j - i));
        i = j;
    }
    return tokens;
}

long parse_int_token(std::string_view token, std::size_t line_no) {
    long value = 0;
    const auto* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (ec != std::errc{} || ptr != end)
        throw ParseError("parse_graph: line " + std::to_string(line_no) + ": bad integer '" +
                         std::string(token) + "'");
    return value;
}

Graph parse_edge_list(std::string_view text) {
    long n = -1;
    std::vector<Edge> edges;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        const auto tokens = split_tokens(line);
        if (tokens.empty()) continue;
        const std::string where = "parse_graph: line " + std::to_string(line_no) + ": ";
        if (n < 0) {
            if (tokens.size() != 1) throw ParseError(where + "expected vertex count, got '" + std::string(line) + "'");
            n = parse_int_token(tokens[0], line_no);
            if (n < 0) throw ParseError(where + "negative vertex count '" + std::string(tokens[0]) + "'");
            continue;
        }
        if (tokens.size() != 2) throw ParseError(where + "expected 'u v', got '" + std::string(line) + "'");
        const long a = parse_int_token(tokens[0], line_no);
        const long b = parse_int_token(tokens[1], line_no);
        for (const auto& [value, token] : {std::pair{a, tokens[0]}, std::pair{b, tokens[1]}})
            if (value < 0 || value >= n)
                throw ParseError(where + "endpoint '" + std::string(token) + "' outside 0.." + std::to_string(n - 1));
        if (a == b) throw ParseError(where + "loop edge '" + std::string(tokens[0]) + " " + std::string(tokens[1]) + "'");
        edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    }
    if (n < 0) throw ParseError("parse_graph: missing vertex count line");
    return Graph(static_cast<int>(n), std::move(edges));
}

} // namespace

Graph graph_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
        throw ParseError("parse_graph: JSON graph needs an integer field 'n'");
    const long n = j["n"].get<long>();
    if (n < 0) throw ParseError("parse_graph: negative vertex count " + std::to_string(n));
    std::vector<Edge> edges;
    if (j.contains("edges")) {
        const auto& list = j["edges"];
        if (!list.is_array()) throw ParseError("parse_graph: 'edges' must be an array");
        for (const auto& pair : list) {
            if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() || !pair[1].is_number_integer())
                throw ParseError("parse_graph: bad edge " + pair.dump());
            const long a = pair[0].get<long>();
            const long b = pair[1].get<long>();
            if (a < 0 || a >= n || b < 0 || b >= n)
                throw ParseError("parse_graph: edge " + pair.dump() + " has endpoint outside 0.." + std::to_string(n - 1));
            if (a == b) throw ParseError("parse_graph: loop edge " + pair.dump());
            edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
        }
    }
    return Graph(static_cast<int>(n), std::move(edges));
}

Graph parse_graph(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') {
        Json j;
        try {
            j = Json::parse(text);
        } catch (const Json::parse_error& e) {
            throw ParseError(std::string("parse_graph: ") + e.what());
        }
        return graph_from_json(j);
    }
    return parse_edge_list(text);
}

Json graph_to_json(const Graph& g) {
    Json edges = Json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
    return Json{{"n", g.vertex_count()}, {"edges", std::move(edges)}};
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream os;
    os << g.vertex_count() << '\n';
    for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << '\n';
    return os.str();
}

std::string to_json_text(const Graph& g) { return graph_to_json(g).dump(); }

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path.string() + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Graph load_graph(const std::filesystem::path& path) { return parse_graph(read_text_file(path)); }

} // namespace rrg
