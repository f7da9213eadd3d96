#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "rrg/colouring.hpp"
#include "rrg/error.hpp"
#include "rrg/forcing.hpp"
#include "rrg/game.hpp"
#include "rrg/graph_io.hpp"
#include "rrg/seeding.hpp"

using namespace rrg;

namespace {

// Triangle-free two-colouring of a random host plus some non-edges as round two.
struct Instance {
    Graph g;
    Colouring phi;
    std::vector<Edge> fresh;
};

std::optional<Instance> random_instance(std::mt19937& rng, int n, double p, int max_new) {
    const Graph g = oracle::random_graph(n, p, rng);
    const auto phi = search_h_free_colouring(g, complete_graph(3), 2, 1'000'000);
    if (!phi.colouring) return std::nullopt;
    std::vector<Edge> missing;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) missing.emplace_back(u, v);
    std::shuffle(missing.begin(), missing.end(), rng);
    std::uniform_int_distribution<int> count(0, max_new);
    missing.resize(std::min<std::size_t>(missing.size(), static_cast<std::size_t>(count(rng))));
    return Instance{g, *phi.colouring, missing};
}

GameConfig k3_config(int n) {
    GameConfig config;
    config.n = n;
    config.h = complete_graph(3);
    return config;
}

} // namespace

TEST_SUITE("game") {

TEST_CASE("sample_gnp extremes and determinism") {
    CHECK(sample_gnp(5, 0.0, 1) == Graph(5));
    CHECK(sample_gnp(5, 1.0, 1) == complete_graph(5));
    const Graph a = sample_gnp(100, 0.5, 12345);
    CHECK(a.edge_count() >= 2200);
    CHECK(a.edge_count() <= 2750);
    CHECK(sample_gnp(100, 0.5, 12345) == a);
    CHECK_FALSE(sample_gnp(100, 0.5, 12346) == a);
    CHECK_THROWS_AS(sample_gnp(5, 1.5, 1), DomainError);
    CHECK_THROWS_AS(sample_gnp(5, -0.1, 1), DomainError);
}

TEST_CASE("decide_extendability examples") {
    const Colouring gadget = fixture::gadget();
    const ExtendResult none = decide_extendability(gadget.host(), gadget, {}, complete_graph(3), 2);
    CHECK(none.verdict == ExtendVerdict::extendable);
    REQUIRE(none.witness);
    CHECK(none.witness->host() == gadget.host());

    const ExtendResult forced = decide_extendability(gadget.host(), gadget, {{0, 1}}, complete_graph(3), 2);
    CHECK(forced.verdict == ExtendVerdict::not_extendable);
    REQUIRE(forced.certificate);
    CHECK(forced.certificate->kind == CertificateKind::forced_pair);
    CHECK(forced.certificate->pair == Edge(0, 1));
    CHECK(validate_extend_result(gadget.host(), gadget, {{0, 1}}, complete_graph(3), 2, forced));

    const Colouring empty(Graph(3));
    const std::vector<Edge> tri{{0, 1}, {1, 2}, {0, 2}};
    const ExtendResult t = decide_extendability(Graph(3), empty, tri, complete_graph(3), 2);
    CHECK(t.verdict == ExtendVerdict::extendable);
    REQUIRE(t.witness);
    CHECK(is_monochromatic_free(*t.witness, complete_graph(3)));
}

TEST_CASE("decide_extendability without the fast path") {
    const Colouring gadget = fixture::gadget();
    ExtendOptions slow;
    slow.fast_path = false;
    const ExtendResult r = decide_extendability(gadget.host(), gadget, {{0, 1}}, complete_graph(3), 2, slow);
    CHECK(r.verdict == ExtendVerdict::not_extendable);
    REQUIRE(r.certificate);
    CHECK(r.certificate->kind == CertificateKind::exhaustive);
    CHECK(validate_extend_result(gadget.host(), gadget, {{0, 1}}, complete_graph(3), 2, r));
}

TEST_CASE("decide_extendability domain errors") {
    const Colouring gadget = fixture::gadget();
    CHECK_THROWS_AS(decide_extendability(gadget.host(), gadget, {{0, 2}}, complete_graph(3), 2), DomainError);
    CHECK_THROWS_AS(decide_extendability(gadget.host(), Colouring(gadget.host()), {}, complete_graph(3), 2),
                    DomainError);
    CHECK_THROWS_AS(decide_extendability(complete_graph(4), gadget, {}, complete_graph(3), 2), DomainError);
    Colouring red(complete_graph(3));
    for (std::size_t i = 0; i < 3; ++i) red.set_index(i, Colour::red);
    CHECK_THROWS_AS(decide_extendability(complete_graph(3), red, {}, complete_graph(3), 2), DomainError);
    Colouring green(Graph(3, {{0, 1}}));
    green.set({0, 1}, Colour::green);
    CHECK_THROWS_AS(decide_extendability(green.host(), green, {}, complete_graph(3), 2), DomainError);
}

TEST_CASE("decide_extendability agrees with enumeration") {
    std::mt19937 rng(67);
    int checked = 0;
    for (int trial = 0; trial < 150; ++trial) {
        const auto inst = random_instance(rng, 7 + trial % 3, 0.45, 8);
        if (!inst) continue;
        for (int palette : {2, 3}) {
            if (palette == 3 && inst->fresh.size() > 6) continue;
            const bool want = extendable_by_enumeration(inst->g, inst->phi, inst->fresh, complete_graph(3), palette);
            for (bool fast : {true, false}) {
                ExtendOptions options;
                options.fast_path = fast;
                const ExtendResult got =
                    decide_extendability(inst->g, inst->phi, inst->fresh, complete_graph(3), palette, options);
                REQUIRE(got.verdict != ExtendVerdict::unknown);
                CHECK((got.verdict == ExtendVerdict::extendable) == want);
                CHECK(validate_extend_result(inst->g, inst->phi, inst->fresh, complete_graph(3), palette, got));
                ++checked;
            }
        }
    }
    CHECK(checked > 100);
}

TEST_CASE("validation rejects a tampered witness") {
    const Colouring empty(Graph(3));
    const std::vector<Edge> tri{{0, 1}, {1, 2}, {0, 2}};
    ExtendResult r = decide_extendability(Graph(3), empty, tri, complete_graph(3), 2);
    REQUIRE(r.witness);
    for (std::size_t i = 0; i < 3; ++i) r.witness->set_index(i, Colour::red);
    CHECK_FALSE(validate_extend_result(Graph(3), empty, tri, complete_graph(3), 2, r));
}

TEST_CASE("extendability budget gives unknown") {
    // Round two = K6 with nothing in round one: exhaustive proof needs more than one node.
    ExtendOptions tiny;
    tiny.budget = 1;
    tiny.fast_path = false;
    const Graph none(6);
    const auto k6 = complete_graph(6).edges();
    const ExtendResult r = decide_extendability(none, Colouring(none), k6, complete_graph(3), 2, tiny);
    CHECK(r.verdict == ExtendVerdict::unknown);
}

TEST_CASE("round probabilities") {
    GameConfig config = k3_config(100);
    config.c = 2.0;
    CHECK(round_one_probability(config) == doctest::Approx(0.2));
    config.c = 100.0;
    CHECK(round_one_probability(config) == 1.0);
    config.p = 0.25;
    CHECK(round_one_probability(config) == 0.25);
    CHECK(round_two_probability(config) == 0.0);
    config.q_coeff = 50.0;
    CHECK(round_two_probability(config) == doctest::Approx(0.005));
    config.palette = 3;
    CHECK(round_two_probability(config) == doctest::Approx(0.5));
    config.q_coeff.reset();
    config.q = 1.5;
    CHECK_THROWS_AS(round_two_probability(config), DomainError);
}

TEST_CASE("play_two_round: K6 has no round-one colouring") {
    GameConfig config = k3_config(6);
    config.p = 1.0;
    config.colouring_source = ColouringSource::search;
    const GameTranscript t = play_two_round(config);
    CHECK(t.round_one == complete_graph(6));
    CHECK(t.round_one_status == RoundOneStatus::none_exists);
    CHECK_FALSE(t.outcome);
    CHECK(t.overall() == ExtendVerdict::not_extendable);
}

TEST_CASE("play_two_round: q = 0 is always extendable") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        GameConfig config = k3_config(20);
        config.c = 0.1;
        config.q = 0.0;
        config.seed = seed;
        const GameTranscript t = play_two_round(config);
        CHECK(t.round_two.empty());
        CHECK(t.overall() == ExtendVerdict::extendable);
    }
}

TEST_CASE("play_two_round: supplied gadget colouring with the forced pair in round two") {
    // Gadgets on pairs {0,1}, {1,2}, {0,2} padded to 12 vertices; q = 1 adds every pair.
    const Colouring tri = fixture::triangle_of_gadgets();
    GameConfig config = k3_config(12);
    config.p = 0.0;
    config.q = 1.0;
    config.colouring_source = ColouringSource::supplied;
    config.colouring = colouring_to_json(tri);
    const GameTranscript t = play_two_round(config);
    CHECK(t.round_one_status == RoundOneStatus::supplied);
    CHECK(t.round_one == Graph(12, tri.host().edges()));
    CHECK(t.forced_pairs[index_of(Colour::green)] == 3);
    CHECK(t.forced_copies[index_of(Colour::green)] == 1);
    CHECK(t.overall() == ExtendVerdict::not_extendable);
}

TEST_CASE("play_two_round: supplied colouring must avoid H") {
    GameConfig config = k3_config(5);
    config.colouring_source = ColouringSource::supplied;
    Colouring red(complete_graph(3));
    for (std::size_t i = 0; i < 3; ++i) red.set_index(i, Colour::red);
    config.colouring = colouring_to_json(red);
    CHECK_THROWS_AS(play_two_round(config), DomainError);
}

TEST_CASE("play_two_round is deterministic and round two avoids G") {
    GameConfig config = k3_config(40);
    config.c = 0.8;
    config.q_coeff = 200.0;
    config.seed = 99;
    const GameTranscript a = play_two_round(config);
    const GameTranscript b = play_two_round(config);
    CHECK(transcript_to_json(a).dump() == transcript_to_json(b).dump());
    for (const Edge& e : a.round_two) CHECK_FALSE(a.round_one.has_edge(e));
    if (a.colouring) CHECK(is_monochromatic_free(*a.colouring, complete_graph(3)));
    if (a.outcome && a.outcome->witness) {
        CHECK(is_monochromatic_free(*a.outcome->witness, complete_graph(3)));
    }
    config.seed = 100;
    CHECK(transcript_to_json(play_two_round(config)).dump() != transcript_to_json(a).dump());
}

TEST_CASE("game config JSON") {
    const Json j = Json::parse(
        R"({"n": 30, "H": {"n": 3, "edges": [[0,1],[1,2],[0,2]]}, "palette": 3, "c": 0.5, "q_coeff": 2,
            "colouring_source": "search", "root_policy": [0, 1], "seed": 4})");
    const GameConfig config = game_config_from_json(j);
    CHECK(config.n == 30);
    CHECK(config.h == complete_graph(3));
    CHECK(config.palette == 3);
    CHECK(config.q_coeff == 2.0);
    CHECK(config.colouring_source == ColouringSource::search);
    CHECK(config.root_policy.fixed_root == Edge(0, 1));
    CHECK(config.seed == 4);
    const GameConfig again = game_config_from_json(game_config_to_json(config));
    CHECK(game_config_to_json(again) == game_config_to_json(config));

    CHECK_THROWS(game_config_from_json(Json::parse(R"({"n": 3, "H": {"n": 2, "edges": [[0,1]]}, "bogus": 1})")));
    CHECK_THROWS(game_config_from_json(Json::parse(R"({"n": 30, "H": {"n": 3, "edges": [[0,1],[1,2],[0,2]]},
                                                       "q": 0.1, "q_coeff": 2})")));
    CHECK_THROWS_AS(game_config_from_json(Json::parse(R"({"n": 30, "H": {"n": 3, "edges": [[0,1],[1,2],[0,2]]},
                                                          "q": 1.5})")),
                    DomainError);
}

TEST_CASE("config reads files relative to its directory") {
    const std::filesystem::path data(RRG_TEST_DATA_DIR);
    const GameConfig config = game_config_from_json(Json::parse(R"({"n": 10, "H": "k3.json"})"), data);
    CHECK(config.h == complete_graph(3));
    const SweepGrid grid = sweep_grid_from_json(Json::parse(R"({"n": [10, 12], "H": "k3.json", "c": [0.5]})"), data);
    CHECK(grid.n == std::vector<int>{10, 12});
    CHECK(grid.c == std::vector<double>{0.5});
}

TEST_CASE("monte_carlo q = 0 point is always extendable") {
    SweepGrid grid;
    grid.base = k3_config(20);
    grid.base.q = 0.0;
    grid.n = {20};
    grid.c = {0.5};
    grid.palette = {2};
    const auto rows = monte_carlo(grid, 10);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].trials == 10);
    CHECK(rows[0].frac_extendable == 1.0);
    CHECK(rows[0].frac_unknown == 0.0);
}

TEST_CASE("monte_carlo is deterministic and thread-count independent") {
    SweepGrid grid;
    grid.base = k3_config(30);
    grid.base.seed = 5;
    grid.n = {24, 30};
    grid.c = {0.6, 1.0};
    grid.q_coeff = {50.0};
    grid.palette = {2};
    const std::string one = to_csv(monte_carlo(grid, 6, 1));
    CHECK(one == to_csv(monte_carlo(grid, 6, 1)));
    CHECK(one == to_csv(monte_carlo(grid, 6, 3)));
    CHECK(one.rfind("n,", 0) == 0);
    grid.base.seed = 6;
    CHECK(one != to_csv(monte_carlo(grid, 6, 1)));
}

TEST_CASE("trial seeds separate points and trials") {
    GameConfig a = k3_config(30);
    GameConfig b = a;
    b.c = 0.7;
    CHECK(trial_seed(1, a, 0) != trial_seed(1, a, 1));
    CHECK(trial_seed(1, a, 0) != trial_seed(1, b, 0));
    CHECK(trial_seed(1, a, 0) != trial_seed(2, a, 0));
    CHECK(trial_seed(1, a, 3) == trial_seed(1, a, 3));
}

TEST_CASE("subgraph statistics") {
    const SubgraphStatistics k2 = subgraph_count_statistics(complete_graph(2), 30, 0.3, 5, 8, 10.0);
    REQUIRE(k2.trials.size() == 5);
    for (const SubgraphTrial& t : k2.trials) CHECK(t.copies == t.packing);
    CHECK(k2.mean_copies == doctest::Approx(0.3 * 435).epsilon(0.25));

    const SubgraphStatistics zero = subgraph_count_statistics(complete_graph(3), 20, 0.0, 3, 8, 10.0);
    for (const SubgraphTrial& t : zero.trials) {
        CHECK(t.copies == 0);
        CHECK(t.packing == 0);
        CHECK(t.min_ratio == 0.0);
    }
    CHECK(zero.violation_fraction == 0.0);
    CHECK(subgraph_statistics_to_json(zero).contains("markov_threshold"));
}

TEST_CASE("K2 copy count equals the edge count of the same sample") {
    // Trial t samples its graph from combine(combine(seed, t), 1).
    const SubgraphStatistics s = subgraph_count_statistics(complete_graph(2), 25, 0.4, 3, 77, 10.0);
    for (int t = 0; t < 3; ++t) {
        const Graph g = sample_gnp(25, 0.4, combine(combine(77, static_cast<std::uint64_t>(t)), 1));
        CHECK(s.trials[static_cast<std::size_t>(t)].copies == static_cast<std::size_t>(g.edge_count()));
    }
}

} // TEST_SUITE
