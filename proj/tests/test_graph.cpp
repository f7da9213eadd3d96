#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "rrg/canonical.hpp"
#include "rrg/embedding.hpp"
#include "rrg/error.hpp"
#include "rrg/graph.hpp"
#include "rrg/graph_io.hpp"

using namespace rrg;

TEST_SUITE("graph") {

TEST_CASE("graph construction normalises edges") {
    const Graph g(4, {{2, 1}, {1, 2}, {3, 0}});
    CHECK(g.edge_count() == 2);
    CHECK(g.edges()[0] == Edge(0, 3));
    CHECK(g.edges()[1] == Edge(1, 2));
    CHECK(g == Graph(4, {{0, 3}, {1, 2}}));
    CHECK_THROWS_AS(Graph(3, {{1, 1}}), DomainError);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), DomainError);
}

TEST_CASE("parse_graph edge-list form") {
    const Graph k3 = parse_graph("3\n0 1\n1 2\n0 2\n");
    CHECK(k3.vertex_count() == 3);
    CHECK(k3.edge_count() == 3);
    CHECK(k3 == complete_graph(3));

    const Graph empty = parse_graph("4\n");
    CHECK(empty.vertex_count() == 4);
    CHECK(empty.edge_count() == 0);

    const Graph dup = parse_graph("3\n0 1\n0 1\n");
    CHECK(dup.edge_count() == 1);
    CHECK(dup.vertex_count() == 3);

    CHECK(parse_graph("# a comment\n3\n\n0 1 # trailing\n") == Graph(3, {{0, 1}}));
}

TEST_CASE("parse_graph JSON form") {
    CHECK(parse_graph(R"({"n": 3, "edges": [[0,1],[1,2],[0,2]]})") == complete_graph(3));
    CHECK(parse_graph(R"({"n": 2})") == Graph(2));
}

TEST_CASE("parse_graph errors name the token") {
    const auto message = [](const char* text) {
        try {
            parse_graph(text);
        } catch (const ParseError& e) {
            return std::string(e.what());
        }
        return std::string();
    };
    CHECK(message("3\n0 x\n").find("x") != std::string::npos);
    CHECK(message("3\n0 3\n").find("3") != std::string::npos);
    CHECK(message("3\n1 1\n").find("1") != std::string::npos);
    CHECK_FALSE(message("3\n0 1 2\n").empty());
    CHECK_FALSE(message("abc\n").empty());
    CHECK_FALSE(message(R"({"n": 2, "edges": [[0, 2]]})").empty());
    CHECK_FALSE(message(R"({"n": 2, "edges": [[0, 0]]})").empty());
    CHECK_FALSE(message("{broken").empty());
}

TEST_CASE("serialisation round trips") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const Graph g = oracle::random_graph(1 + trial % 9, 0.4, rng);
        CHECK(parse_graph(to_edge_list(g)) == g);
        CHECK(parse_graph(to_json_text(g)) == g);
        CHECK(to_edge_list(parse_graph(to_edge_list(g))) == to_edge_list(g));
    }
    CHECK(to_edge_list(complete_graph(3)) == "3\n0 1\n0 2\n1 2\n");
    CHECK(to_json_text(path_graph(1)) == R"({"n":2,"edges":[[0,1]]})");
}

TEST_CASE("induced_subgraph") {
    CHECK(induced_subgraph(complete_graph(4), std::vector<Vertex>{0, 1, 2}) == complete_graph(3));
    CHECK(induced_subgraph(cycle_graph(4), std::vector<Vertex>{0, 1, 2}) == path_graph(2));
    CHECK(induced_subgraph(complete_graph(5), std::vector<Vertex>{}) == Graph(0));
    CHECK(induced_subgraph(cycle_graph(5), std::vector<Vertex>{4, 0}) == Graph(2, {{0, 1}}));
    CHECK_THROWS_AS(induced_subgraph(complete_graph(3), std::vector<Vertex>{0, 3}), DomainError);
    CHECK_THROWS_AS(induced_subgraph(complete_graph(3), std::vector<Vertex>{1, 1}), DomainError);
}

TEST_CASE("find_copies examples") {
    CHECK(find_copies(complete_graph(3), complete_graph(4)).size() == 4);
    CHECK(find_copies(complete_graph(3), cycle_graph(4)).empty());
    CHECK(find_copies(complete_graph(2), complete_graph(3)).size() == 3);
    CHECK(find_copies(cycle_graph(4), complete_graph(4)).size() == 3);
}

TEST_CASE("find_copies order is lexicographic by image edges") {
    const auto copies = find_copies(path_graph(2), complete_graph(4));
    CHECK(copies.size() == 12);
    for (std::size_t i = 1; i < copies.size(); ++i) CHECK(copies[i - 1].edges < copies[i].edges);
}

TEST_CASE("find_copies agrees with exhaustive enumeration") {
    std::mt19937 rng(5);
    const std::vector<Graph> patterns{complete_graph(3), path_graph(2), path_graph(3), cycle_graph(4),
                                      Graph(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}}), Graph(4, {{0, 1}, {2, 3}}),
                                      Graph(4, {{0, 1}, {0, 2}, {0, 3}})};
    for (int trial = 0; trial < 40; ++trial) {
        const Graph host = oracle::random_graph(4 + trial % 4, 0.5, rng);
        for (const Graph& p : patterns) {
            const auto got = find_copies(p, host);
            const auto want = oracle::copies(p, host);
            REQUIRE(got.size() == want.size());
            std::size_t i = 0;
            for (const auto& edges : want) CHECK(got[i++].edges == edges);
            for (const Copy& c : got) {
                CHECK(static_cast<int>(c.edges.size()) == p.edge_count());
                CHECK(static_cast<int>(c.vertices.size()) == p.vertex_count());
            }
        }
    }
}

TEST_CASE("copy count is invariant under host relabelling") {
    std::mt19937 rng(9);
    for (int trial = 0; trial < 30; ++trial) {
        const Graph host = oracle::random_graph(7, 0.5, rng);
        const Graph moved = oracle::relabel(host, oracle::random_permutation(7, rng));
        CHECK(find_copies(complete_graph(3), host).size() == find_copies(complete_graph(3), moved).size());
        CHECK(find_copies(cycle_graph(4), host).size() == find_copies(cycle_graph(4), moved).size());
    }
}

TEST_CASE("copies through an edge") {
    const BitGraph k4(complete_graph(4));
    const auto through = find_copies_through(complete_graph(3), k4, Edge(0, 1));
    CHECK(through.size() == 2);
    for (const Copy& c : through) CHECK(std::find(c.edges.begin(), c.edges.end(), Edge(0, 1)) != c.edges.end());
    CHECK(contains_copy_through(complete_graph(3), k4, Edge(2, 3)));
    CHECK_FALSE(contains_copy_through(complete_graph(3), BitGraph(cycle_graph(4)), Edge(0, 1)));
}

TEST_CASE("packing examples") {
    CHECK(max_edge_disjoint_copies(complete_graph(3), complete_graph(4), PackingMode::exact).size() == 1);
    CHECK(max_edge_disjoint_copies(complete_graph(3), cycle_graph(4), PackingMode::exact).size() == 0);
    CHECK(max_edge_disjoint_copies(complete_graph(2), complete_graph(3), PackingMode::exact).size() == 3);
    CHECK(max_edge_disjoint_copies(complete_graph(3), complete_graph(7), PackingMode::exact).size() == 7);
    CHECK_THROWS_AS(max_edge_disjoint_copies(Graph(2), complete_graph(3), PackingMode::exact), DomainError);
    PackingOptions tight;
    tight.copy_cap = 3;
    CHECK_THROWS_AS(max_edge_disjoint_copies(complete_graph(3), complete_graph(4), PackingMode::exact, tight),
                    BudgetExceeded);
    CHECK(max_edge_disjoint_copies(complete_graph(3), complete_graph(4), PackingMode::greedy, tight).size() == 1);
}

TEST_CASE("packings are edge-disjoint and ordered greedy <= exact <= e(host)/e(pattern)") {
    for (int n = 1; n <= 6; ++n) {
        for (const Graph& host : all_graphs(n)) {
            for (const Graph& p : {complete_graph(3), path_graph(2)}) {
                const auto exact = max_edge_disjoint_copies(p, host, PackingMode::exact);
                const auto greedy = max_edge_disjoint_copies(p, host, PackingMode::greedy);
                CHECK(greedy.size() <= exact.size());
                CHECK(static_cast<int>(exact.size()) <= host.edge_count() / p.edge_count());
                std::set<Edge> used;
                for (const Copy& c : exact.copies)
                    for (const Edge& e : c.edges) CHECK(used.insert(e).second);
            }
        }
    }
}

TEST_CASE("exact packing matches brute force on small hosts") {
    std::mt19937 rng(21);
    for (int trial = 0; trial < 25; ++trial) {
        const Graph host = oracle::random_graph(6, 0.6, rng);
        const auto all = oracle::copies(complete_graph(3), host);
        const std::vector<std::vector<Edge>> list(all.begin(), all.end());
        std::size_t best = 0;
        for (std::uint32_t mask = 0; mask < (1U << list.size()); ++mask) {
            std::set<Edge> used;
            bool ok = true;
            for (std::size_t i = 0; i < list.size() && ok; ++i)
                if (mask >> i & 1U)
                    for (const Edge& e : list[i]) ok = ok && used.insert(e).second;
            if (ok) best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcount(mask)));
        }
        CHECK(max_edge_disjoint_copies(complete_graph(3), host, PackingMode::exact).size() == best);
    }
}

TEST_CASE("all_graphs counts isomorphism classes") {
    const std::vector<std::size_t> expected{1, 1, 2, 4, 11, 34, 156};
    for (int n = 0; n <= 6; ++n) CHECK(all_graphs(n).size() == expected[static_cast<std::size_t>(n)]);
}

TEST_CASE("canonical form is a relabelling invariant") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 3 + trial % 6;
        const Graph g = oracle::random_graph(n, 0.45, rng);
        const Graph moved = oracle::relabel(g, oracle::random_permutation(n, rng));
        CHECK(canonical_form(g) == canonical_form(moved));
        CHECK(are_isomorphic(g, moved));
    }
    CHECK_FALSE(are_isomorphic(path_graph(3), Graph(4, {{0, 1}, {0, 2}, {0, 3}})));
    CHECK(is_connected(cycle_graph(5)));
    CHECK_FALSE(is_connected(Graph(3, {{0, 1}})));
}

} // TEST_SUITE
